#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "medax/proximity.hpp"

namespace medax {

/// Tolerance bundle for grid sweeps, all derived from the grid pitch h.
///
/// eps         sample spacing, h/4.
/// eps_d       distance slack; samples lie on the set, so only second-order
///             discretization noise must be absorbed: 8*eps^2.
/// eta_sep     contact-cluster separation, 10*eps.
/// pair_radius lattice-offset slack radius for node classification, 0.85*h
///             (covers the worst node-to-set offset h/sqrt(2)).
/// on_set      points closer than this are on the set, 2*eps.
struct GridTolerances {
  double h = 0.0;
  double eps = 0.0;
  double eps_d = 0.0;
  double eta_sep = 0.0;
  double pair_radius = 0.0;
  double on_set = 0.0;

  static GridTolerances for_grid(double h) {
    GridTolerances t;
    t.h = h;
    t.eps = h / 4.0;
    t.eps_d = 8.0 * t.eps * t.eps;
    t.eta_sep = 10.0 * t.eps;
    t.pair_radius = 0.85 * h;
    t.on_set = 2.0 * t.eps;
    return t;
  }

  NearestOptions nearest_options(bool with_pair_slack) const {
    NearestOptions o;
    o.eps_d = eps_d;
    o.eta_sep = eta_sep;
    o.pair_radius = with_pair_slack ? pair_radius : 0.0;
    return o;
  }
};

enum class Provenance { GridClassified, Analytic, DerivedLimit };

/// Finite point cloud approximating a set, with the metadata needed to
/// interpret its resolution. An empty cloud is a valid estimate of the
/// empty set.
struct PointSetEstimate {
  std::vector<Point2> points;
  double spacing = 0.0;
  double eps_d = 0.0;
  double eta_sep = 0.0;
  Provenance provenance = Provenance::GridClassified;

  bool empty() const { return points.empty(); }
  std::size_t size() const { return points.size(); }
};

struct InflationResult {
  double r = 1.0;
  Point2 center_at_r;
  Point2 contact_point;
  bool capped = false;
  double witness_separation = 0.0;   // |second contact - tangency point|
  std::optional<Point2> witness;
};

struct SandwichReport {
  bool ok = false;
  double excess_m_in_c = 0.0;
  double excess_c_in_m = 0.0;
  double tol = 0.0;
};

struct GridClassification {
  PointSetEstimate medial;
  PointSetEstimate central;
};

/// One-sided excess e(A,B) = max_{a in A} dist(a, B); 0 for empty A, +inf
/// for nonempty A against empty B.
double excess_points(const std::vector<Point2>& a, const std::vector<Point2>& b);

/// Grid nodes whose nearest-point map is multivalued: node kept iff
/// distance > on_set and the contact cluster count is >= 2.
PointSetEstimate medial_axis(const SetView& view, const GridTolerances& tol, int threads = 1);
PointSetEstimate medial_axis(const SetOracle& oracle, const Window& w, int threads = 1);

/// Inflate the tangent ball at m(a) along the ray through a while it stays
/// empty of the set: r = sup{ s in [1, s_max] : B(m(a)+s(a-m(a)), s*d(a))
/// misses the sample }, found by bisection to 1e-6 in s. Requires a off the
/// set with univalent nearest point.
InflationResult ball_inflation(Point2 a, const SetView& view, double s_max,
                               const GridTolerances& tol);
InflationResult ball_inflation(Point2 a, const SetOracle& oracle, const Window& w, double s_max);

/// Medial and central estimates in one sweep. Central = medial nodes plus
/// every finite inflation centre whose limiting ball shows a second contact
/// separated from the tangency point by at least eta_sep.
GridClassification classify_grid(const SetView& view, const GridTolerances& tol, double s_max,
                                 bool with_central, int threads);

PointSetEstimate central_set(const SetOracle& oracle, const Window& w,
                             double s_max = std::numeric_limits<double>::infinity(),
                             int threads = 1);
PointSetEstimate central_set(const SetView& view, const GridTolerances& tol,
                             double s_max = std::numeric_limits<double>::infinity(),
                             int threads = 1);

/// Checks the inclusion chain M subset C subset closure(M) at grid scale:
/// both one-sided excesses must stay within tol.
SandwichReport sandwich_check(const PointSetEstimate& m, const PointSetEstimate& c, double tol);

/// Points of `pts` at least `band` inside the window (comparison helper:
/// verdicts exclude a boundary band where window-local estimates degrade).
std::vector<Point2> inset_to_window(const std::vector<Point2>& pts, const Window& w, double band);

}  // namespace medax
