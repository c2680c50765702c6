#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "medax/param_family.hpp"
#include "medax/point_index.hpp"
#include "medax/set_oracle.hpp"

namespace medax {

/// Tolerances for deciding whether the nearest-point map is multivalued.
///
/// eps_d   distance slack above the sampled minimum for co-minimizers.
/// eta_sep spatial radius for chaining near-minimizers into contact clusters.
/// pair_radius when positive, a second contact whose direction differs from
///         the best one by at least phi_cut is admitted with the extra slack
///         2*pair_radius*sin(phi/2). That is exactly the distance split a
///         query offset of pair_radius induces between two true contacts, so
///         grid sweeps can see medial sets passing between lattice nodes.
/// degenerate_angle when a single chain of near-minimizers covers at least
///         this angle as seen from the query, it is a continuum of contacts
///         (centre of a circle) and gets split at eta_sep, capped below.
struct NearestOptions {
  double eps_d = 0.0;
  double eta_sep = 0.0;
  double pair_radius = 0.0;
  double phi_cut = 1.2;
  double degenerate_angle = 2.0;
  int cluster_cap = 64;
};

struct NearestResult {
  double distance = 0.0;             // minimum over the window sample
  std::vector<Point2> minimizers;    // one representative per contact cluster
  int cluster_count = 0;             // == minimizers.size(), capped
  bool degenerate = false;           // continuum of contacts detected
  double eps_d = 0.0;                // slack bound actually used
  double eta_sep = 0.0;
};

/// A sampled window view of an oracle: the sample is taken on the window
/// inflated by twice its diagonal, so nearest points of interior queries are
/// never cut off, and indexed for nearest-neighbour queries. Immutable.
class SetView {
 public:
  SetView(const SetOracle& oracle, const Window& w, double eps);

  const Window& window() const { return window_; }
  double eps() const { return eps_; }
  const SetOracle& oracle() const { return oracle_; }
  const PointIndex& index() const { return *index_; }

  /// Distance to the window sample.
  double sample_distance(Point2 p) const { return index_->nearest(p).second; }
  /// Exact distance when the oracle provides one, else sample distance.
  double distance(Point2 p) const {
    return oracle_.has_exact_distance() ? oracle_.exact_distance(p) : sample_distance(p);
  }

 private:
  SetOracle oracle_;
  Window window_;
  double eps_;
  std::shared_ptr<const PointIndex> index_;
};

double distance(Point2 x, const SetOracle& oracle, const Window& w);
double squared_distance(Point2 x, const SetOracle& oracle, const Window& w);

NearestResult nearest_points(Point2 x, const SetView& view, const NearestOptions& opts);
NearestResult nearest_points(Point2 x, const SetOracle& oracle, const Window& w, double eps_d,
                             double eta_sep);

/// Unit direction of steepest distance growth, (x - m(x))/|x - m(x)|, or
/// nullopt when the nearest-point map is multivalued at x. Throws OnSetError
/// when x lies on the set (distance <= on_set_tol).
std::optional<Point2> distance_gradient(Point2 x, const SetView& view,
                                        const NearestOptions& opts, double on_set_tol);
std::optional<Point2> distance_gradient(Point2 x, const SetOracle& oracle, const Window& w);

}  // namespace medax
