#include "medax/proximity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace medax {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct DSU {
  std::vector<int> parent;
  explicit DSU(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent[b] = a;  // canonical root = smallest member
    else parent[a] = b;
  }
};

/// Single-linkage chains at radius `r` among the listed points.
std::vector<int> chain_components(const std::vector<Point2>& pts, double r) {
  int n = static_cast<int>(pts.size());
  DSU dsu(n);
  double cell = r;
  std::map<std::pair<long long, long long>, std::vector<int>> buckets;
  auto key = [cell](Point2 p) {
    return std::make_pair(static_cast<long long>(std::floor(p.x / cell)),
                          static_cast<long long>(std::floor(p.y / cell)));
  };
  for (int i = 0; i < n; ++i) buckets[key(pts[i])].push_back(i);
  double r2 = r * r;
  for (int i = 0; i < n; ++i) {
    auto [cx, cy] = key(pts[i]);
    for (long long dx = -1; dx <= 1; ++dx)
      for (long long dy = -1; dy <= 1; ++dy) {
        auto it = buckets.find({cx + dx, cy + dy});
        if (it == buckets.end()) continue;
        for (int j : it->second)
          if (j > i && dist2(pts[i], pts[j]) <= r2) dsu.unite(i, j);
      }
  }
  std::vector<int> comp(n);
  for (int i = 0; i < n; ++i) comp[i] = dsu.find(i);
  return comp;
}

/// Angular coverage of the directions from x to the given points:
/// 2*pi minus the largest angular gap.
double angular_coverage(Point2 x, const std::vector<Point2>& pts) {
  if (pts.size() < 2) return 0.0;
  std::vector<double> ang;
  ang.reserve(pts.size());
  for (const auto& p : pts) ang.push_back(std::atan2(p.y - x.y, p.x - x.x));
  std::sort(ang.begin(), ang.end());
  double max_gap = ang.front() + kTwoPi - ang.back();
  for (std::size_t i = 1; i < ang.size(); ++i) max_gap = std::max(max_gap, ang[i] - ang[i - 1]);
  return kTwoPi - max_gap;
}

}  // namespace

SetView::SetView(const SetOracle& oracle, const Window& w, double eps)
    : oracle_(oracle), window_(w), eps_(eps) {
  auto pts = oracle.sample(w.inflated(2.0 * w.diag()), eps);
  if (pts.empty())
    throw EmptyOnWindowError("set misses the margin window (" + oracle.describe() + ")");
  index_ = std::make_shared<PointIndex>(std::move(pts));
}

double distance(Point2 x, const SetOracle& oracle, const Window& w) {
  if (oracle.has_exact_distance()) return oracle.exact_distance(x);
  SetView view(oracle, w, w.h / 4.0);
  return view.sample_distance(x);
}

double squared_distance(Point2 x, const SetOracle& oracle, const Window& w) {
  double d = distance(x, oracle, w);
  return d * d;
}

NearestResult nearest_points(Point2 x, const SetView& view, const NearestOptions& o) {
  if (!(o.eps_d > 0.0)) throw std::invalid_argument("nearest_points: eps_d must be > 0");
  if (!(o.eta_sep > 2.0 * (view.eps() + o.eps_d)))
    throw ToleranceConflictError("eta_sep must exceed 2*(eps + eps_d)");

  const PointIndex& idx = view.index();
  auto [best_i, dmin] = idx.nearest(x);

  NearestResult res;
  res.distance = dmin;
  res.eta_sep = o.eta_sep;
  res.eps_d = o.eps_d + 2.0 * o.pair_radius;

  if (dmin <= 1e-12) {  // query sits on a sample point
    res.minimizers = {idx[best_i]};
    res.cluster_count = 1;
    return res;
  }

  double cap = o.eps_d + 2.0 * o.pair_radius;
  std::vector<int> cand;
  idx.within(x, dmin + cap, cand);

  Point2 u_best = (1.0 / dmin) * (idx[best_i] - x);
  double cos_cut = std::cos(o.phi_cut);

  std::vector<Point2> adm_pts;
  std::vector<double> adm_d;
  std::vector<Point2> strict_pts;
  adm_pts.reserve(cand.size());
  adm_d.reserve(cand.size());
  for (int ci : cand) {
    Point2 p = idx[ci];
    double d = dist(x, p);
    bool take = d <= dmin + o.eps_d;
    if (take) strict_pts.push_back(p);
    if (!take && o.pair_radius > 0.0) {
      Point2 u = (1.0 / d) * (p - x);
      double c = dot(u, u_best);
      if (c <= cos_cut) {
        double slack = o.eps_d + 2.0 * o.pair_radius * std::sqrt(std::max(0.0, (1.0 - c) / 2.0));
        take = d <= dmin + slack;
      }
    }
    if (take) {
      adm_pts.push_back(p);
      adm_d.push_back(d);
    }
  }

  std::vector<int> comp = chain_components(adm_pts, o.eta_sep);
  std::vector<int> roots;
  for (std::size_t i = 0; i < comp.size(); ++i)
    if (comp[i] == static_cast<int>(i)) roots.push_back(static_cast<int>(i));

  if (roots.size() == 1 && angular_coverage(x, strict_pts) >= o.degenerate_angle) {
    // continuum of contacts: split the strict set at eta_sep, capped.
    // Below two seeds the continuum is unresolvable at eta_sep and the
    // query is treated as univalent.
    std::vector<Point2> seeds;
    for (const auto& p : strict_pts) {
      bool fresh = true;
      for (const auto& s : seeds)
        if (dist(p, s) <= o.eta_sep) {
          fresh = false;
          break;
        }
      if (fresh) {
        seeds.push_back(p);
        if (static_cast<int>(seeds.size()) >= o.cluster_cap) break;
      }
    }
    if (seeds.size() >= 2) {
      res.degenerate = true;
      res.minimizers = std::move(seeds);
      res.cluster_count = static_cast<int>(res.minimizers.size());
      return res;
    }
  }

  struct Cluster {
    double min_d;
    int min_at;
  };
  std::map<int, Cluster> clusters;
  for (std::size_t i = 0; i < adm_pts.size(); ++i) {
    auto it = clusters.find(comp[i]);
    if (it == clusters.end() || adm_d[i] < it->second.min_d)
      clusters[comp[i]] = {adm_d[i], static_cast<int>(i)};
  }
  std::vector<std::pair<double, int>> order;  // (cluster min distance, root)
  for (const auto& [root, cl] : clusters) order.emplace_back(cl.min_d, root);
  std::sort(order.begin(), order.end());

  std::vector<Point2> reps;
  for (const auto& [md, root] : order) {
    Point2 acc{0, 0};
    int n = 0;
    for (std::size_t i = 0; i < adm_pts.size(); ++i)
      if (comp[i] == root && adm_d[i] <= md + o.eps_d) {
        acc = acc + adm_pts[i];
        ++n;
      }
    Point2 rep = (1.0 / n) * acc;
    bool distinct = true;
    for (const auto& r : reps)
      if (dist(rep, r) < o.eta_sep) {
        distinct = false;
        break;
      }
    if (distinct) reps.push_back(rep);
    if (static_cast<int>(reps.size()) >= o.cluster_cap) break;
  }
  res.minimizers = std::move(reps);
  res.cluster_count = static_cast<int>(res.minimizers.size());
  return res;
}

NearestResult nearest_points(Point2 x, const SetOracle& oracle, const Window& w, double eps_d,
                             double eta_sep) {
  SetView view(oracle, w, w.h / 4.0);
  NearestOptions o;
  o.eps_d = eps_d;
  o.eta_sep = eta_sep;
  return nearest_points(x, view, o);
}

std::optional<Point2> distance_gradient(Point2 x, const SetView& view, const NearestOptions& o,
                                        double on_set_tol) {
  double d = view.distance(x);
  if (d <= on_set_tol)
    throw OnSetError("gradient query on the set (distance " + std::to_string(d) + ")");
  NearestResult nr = nearest_points(x, view, o);
  if (nr.cluster_count >= 2) return std::nullopt;
  return normalized(x - nr.minimizers.front());
}

std::optional<Point2> distance_gradient(Point2 x, const SetOracle& oracle, const Window& w) {
  SetView view(oracle, w, w.h / 4.0);
  NearestOptions o;
  o.eps_d = 8.0 * view.eps() * view.eps();
  o.eta_sep = 10.0 * view.eps();
  return distance_gradient(x, view, o, 2.0 * view.eps());
}

}  // namespace medax
