#pragma once

#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "medax/errors.hpp"
#include "medax/geometry.hpp"

namespace medax {

namespace detail {
class OracleImpl;
}

/// A closed nonempty planar set seen through two queries: a deterministic
/// eps-faithful sample on a compact window, and (for the built-in shapes)
/// an exact distance function.
///
/// Sample guarantee on a window W: every returned point lies on the set
/// (up to floating error), and every point of the set inside W lies within
/// eps of some returned point.
class SetOracle {
 public:
  std::vector<Point2> sample(const Window& w, double eps) const;

  bool has_exact_distance() const;
  double exact_distance(Point2 p) const;

  std::string describe() const;
  nlohmann::ordered_json descriptor_json() const;

  /// The set {factor * p : p in X}.
  SetOracle scaled(double factor) const;

  static SetOracle circle(Point2 center, double radius);
  static SetOracle points(std::vector<Point2> pts);
  static SetOracle cloud(std::vector<Point2> pts, double spacing);
  static SetOracle segment(Point2 a, Point2 b);
  static SetOracle ray(Point2 origin, Point2 dir);
  static SetOracle line(Point2 through, Point2 dir);
  /// Graph of y = alpha*x^2 + beta over [xlo, xhi].
  static SetOracle parabola(double alpha, double beta,
                            double xlo = -std::numeric_limits<double>::infinity(),
                            double xhi = std::numeric_limits<double>::infinity());
  /// Graph of y = sqrt(x^2 + t^2), the smooth regularization of y = |x|.
  static SetOracle sqrt_offset_graph(double t);
  /// Graph of y = slope * |x|.
  static SetOracle vee(double slope);
  static SetOracle union_of(std::vector<SetOracle> parts);

  explicit SetOracle(std::shared_ptr<const detail::OracleImpl> impl);
  const detail::OracleImpl& impl() const { return *impl_; }

 private:
  std::shared_ptr<const detail::OracleImpl> impl_;
};

/// Deterministic sample of the oracle on `w`; throws EmptyOnWindowError when
/// the set misses the eps-fattened window.
std::vector<Point2> sample_set(const SetOracle& oracle, const Window& w, double eps);

/// Sublist of `pts` inside `w` inflated by `margin`, input order preserved.
std::vector<Point2> restrict_to_window(const std::vector<Point2>& pts, const Window& w,
                                       double margin);

}  // namespace medax
