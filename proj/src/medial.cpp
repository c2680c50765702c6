#include "medax/medial.hpp"

#include <algorithm>
#include <cmath>

#include "medax/parallel.hpp"

namespace medax {

namespace {

struct NodeOutcome {
  unsigned char medial = 0;
  unsigned char has_center = 0;
  Point2 center;
};

InflationResult inflate_from(Point2 a, Point2 contact, const SetView& view, double s_max,
                             double eps) {
  InflationResult res;
  res.contact_point = contact;
  Point2 dir = a - contact;
  double dn = norm(dir);
  auto center = [&](double s) { return contact + s * dir; };
  auto empty_at = [&](double s) {
    return view.sample_distance(center(s)) >= s * dn - 2.0 * eps;
  };
  if (empty_at(s_max)) {
    res.r = s_max;
    res.center_at_r = center(s_max);
    res.capped = true;
    return res;
  }
  double lo = 1.0, hi = s_max;
  while (hi - lo > 1e-6) {
    double mid = 0.5 * (lo + hi);
    if (empty_at(mid)) lo = mid;
    else hi = mid;
  }
  res.r = lo;
  res.center_at_r = center(lo);
  auto [wi, wd] = view.index().nearest(center(hi));
  (void)wd;
  res.witness = view.index()[wi];
  res.witness_separation = dist(*res.witness, contact);
  return res;
}

}  // namespace

double excess_points(const std::vector<Point2>& a, const std::vector<Point2>& b) {
  if (a.empty()) return 0.0;
  if (b.empty()) return std::numeric_limits<double>::infinity();
  PointIndex idx(b);
  double worst = 0.0;
  for (const auto& p : a) worst = std::max(worst, idx.nearest(p).second);
  return worst;
}

GridClassification classify_grid(const SetView& view, const GridTolerances& tol, double s_max,
                                 bool with_central, int threads) {
  const Window& w = view.window();
  const int nx = w.nx(), ny = w.ny();
  const std::size_t n = static_cast<std::size_t>(nx) * ny;
  std::vector<NodeOutcome> slots(n);
  const NearestOptions opts = tol.nearest_options(true);
  const double diag = w.diag();

  parallel_for(n, threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t k = b; k < e; ++k) {
      Point2 node = w.node(static_cast<int>(k) % nx, static_cast<int>(k) / nx);
      double d = view.distance(node);
      if (d <= tol.on_set) continue;
      NearestResult nr = nearest_points(node, view, opts);
      if (nr.cluster_count >= 2) {
        slots[k].medial = 1;
        continue;
      }
      if (!with_central) continue;
      double cap = std::min(s_max, 1e3 * diag / std::max(d, 1e-9));
      if (!(cap > 1.0)) continue;
      InflationResult inf = inflate_from(node, nr.minimizers.front(), view, cap, view.eps());
      if (inf.capped) continue;
      if (inf.witness_separation < tol.eta_sep) continue;  // second contact unresolvable
      if (!w.contains(inf.center_at_r)) continue;
      slots[k].has_center = 1;
      slots[k].center = inf.center_at_r;
    }
  });

  GridClassification out;
  out.medial.spacing = out.central.spacing = w.h;
  out.medial.eps_d = out.central.eps_d = opts.eps_d + 2.0 * opts.pair_radius;
  out.medial.eta_sep = out.central.eta_sep = tol.eta_sep;
  out.medial.provenance = out.central.provenance = Provenance::GridClassified;
  for (std::size_t k = 0; k < n; ++k) {
    if (slots[k].medial) {
      Point2 node = w.node(static_cast<int>(k) % nx, static_cast<int>(k) / nx);
      out.medial.points.push_back(node);
      out.central.points.push_back(node);
    } else if (slots[k].has_center) {
      out.central.points.push_back(slots[k].center);
    }
  }
  return out;
}

PointSetEstimate medial_axis(const SetView& view, const GridTolerances& tol, int threads) {
  return classify_grid(view, tol, 1.0, false, threads).medial;
}

PointSetEstimate medial_axis(const SetOracle& oracle, const Window& w, int threads) {
  GridTolerances tol = GridTolerances::for_grid(w.h);
  SetView view(oracle, w, tol.eps);
  return medial_axis(view, tol, threads);
}

InflationResult ball_inflation(Point2 a, const SetView& view, double s_max,
                               const GridTolerances& tol) {
  if (!(s_max > 1.0) || !std::isfinite(s_max))
    throw std::invalid_argument("ball_inflation: need 1 < s_max < inf");
  double d = view.distance(a);
  if (d <= tol.on_set)
    throw OnSetError("ball_inflation: query on the set (distance " + std::to_string(d) + ")");
  NearestResult nr = nearest_points(a, view, tol.nearest_options(false));
  if (nr.cluster_count >= 2)
    throw NotUnivalentError("ball_inflation: nearest-point map multivalued at the query");
  return inflate_from(a, nr.minimizers.front(), view, s_max, view.eps());
}

InflationResult ball_inflation(Point2 a, const SetOracle& oracle, const Window& w, double s_max) {
  GridTolerances tol = GridTolerances::for_grid(w.h);
  SetView view(oracle, w, tol.eps);
  return ball_inflation(a, view, s_max, tol);
}

PointSetEstimate central_set(const SetView& view, const GridTolerances& tol, double s_max,
                             int threads) {
  return classify_grid(view, tol, s_max, true, threads).central;
}

PointSetEstimate central_set(const SetOracle& oracle, const Window& w, double s_max,
                             int threads) {
  GridTolerances tol = GridTolerances::for_grid(w.h);
  SetView view(oracle, w, tol.eps);
  return central_set(view, tol, s_max, threads);
}

SandwichReport sandwich_check(const PointSetEstimate& m, const PointSetEstimate& c, double tol) {
  SandwichReport rep;
  rep.tol = tol;
  rep.excess_m_in_c = excess_points(m.points, c.points);
  rep.excess_c_in_m = excess_points(c.points, m.points);
  rep.ok = rep.excess_m_in_c <= tol && rep.excess_c_in_m <= tol;
  return rep;
}

std::vector<Point2> inset_to_window(const std::vector<Point2>& pts, const Window& w,
                                    double band) {
  std::vector<Point2> out;
  out.reserve(pts.size());
  for (const auto& p : pts)
    if (p.x >= w.lo.x + band && p.x <= w.hi.x - band && p.y >= w.lo.y + band &&
        p.y <= w.hi.y - band)
      out.push_back(p);
  return out;
}

}  // namespace medax
