#include "medax/set_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "medax/point_index.hpp"

namespace medax {
namespace detail {

using json = nlohmann::ordered_json;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 6.283185307179586476925286766559;

std::string fmt_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

struct Box {
  double x0, y0, x1, y1;
  static Box of(const Window& w, double pad) {
    return {w.lo.x - pad, w.lo.y - pad, w.hi.x + pad, w.hi.y + pad};
  }
  bool contains(Point2 p) const {
    return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1;
  }
  bool overlaps(double bx0, double by0, double bx1, double by1) const {
    return bx0 <= x1 && bx1 >= x0 && by0 <= y1 && by1 >= y0;
  }
  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
};

void emit_rec(const std::function<Point2(double)>& f, double ta, Point2 pa, double tb,
              Point2 pb, double step, int depth, std::vector<Point2>& out) {
  if (depth <= 0) {
    out.push_back(pb);
    return;
  }
  double tm = 0.5 * (ta + tb);
  Point2 pm = f(tm);
  double h1 = dist(pa, pm);
  double h2 = dist(pm, pb);
  double chord = dist(pa, pb);
  // flat enough and short enough: keep the midpoint so spacing stays <= step
  if (h1 <= step && h2 <= step && chord >= 0.8 * (h1 + h2)) {
    out.push_back(pm);
    out.push_back(pb);
    return;
  }
  emit_rec(f, ta, pa, tm, pm, step, depth - 1, out);
  emit_rec(f, tm, pm, tb, pb, step, depth - 1, out);
}

/// Points of the curve f over [ta, tb], consecutive spacing <= step.
void emit_adaptive(const std::function<Point2(double)>& f, double ta, double tb, double step,
                   std::vector<Point2>& out) {
  if (!(tb > ta)) {
    out.push_back(f(ta));
    return;
  }
  Point2 pa = f(ta);
  out.push_back(pa);
  emit_rec(f, ta, pa, tb, f(tb), step, 42, out);
}

/// Straight piece from o + a*d to o + b*d, uniform steps <= step.
void emit_linear(Point2 o, Point2 d, double a, double b, double step,
                 std::vector<Point2>& out) {
  double len = (b - a) * norm(d);
  int n = std::max(1, static_cast<int>(std::ceil(len / step)));
  for (int k = 0; k <= n; ++k) {
    double t = a + (b - a) * (static_cast<double>(k) / n);
    out.push_back(o + t * d);
  }
}

/// Clip the parameter range [t0, t1] of o + t*d against the box.
bool clip_param(Point2 o, Point2 d, double t0, double t1, const Box& box, double& a,
                double& b) {
  a = t0;
  b = t1;
  const double p[4] = {-d.x, d.x, -d.y, d.y};
  const double q[4] = {o.x - box.x0, box.x1 - o.x, o.y - box.y0, box.y1 - o.y};
  for (int i = 0; i < 4; ++i) {
    if (p[i] == 0.0) {
      if (q[i] < 0.0) return false;
      continue;
    }
    double t = q[i] / p[i];
    if (p[i] < 0.0) {
      if (t > b) return false;
      if (t > a) a = t;
    } else {
      if (t < a) return false;
      if (t < b) b = t;
    }
  }
  return a <= b && std::isfinite(a) && std::isfinite(b);
}

double point_segment_dist(Point2 p, Point2 a, Point2 b) {
  Point2 ab = b - a;
  double len2 = norm2(ab);
  if (len2 == 0.0) return dist(p, a);
  double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return dist(p, a + t * ab);
}

/// Real roots of t^3 + p t + q = 0.
int depressed_cubic_roots(double p, double q, double roots[3]) {
  double half_q = 0.5 * q;
  double third_p = p / 3.0;
  double disc = half_q * half_q + third_p * third_p * third_p;
  if (disc > 0.0) {
    double s = std::sqrt(disc);
    roots[0] = std::cbrt(-half_q + s) + std::cbrt(-half_q - s);
    return 1;
  }
  double m = 2.0 * std::sqrt(-third_p);
  double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
  double theta = std::acos(arg) / 3.0;
  for (int k = 0; k < 3; ++k)
    roots[k] = m * std::cos(theta - kTwoPi * k / 3.0);
  return 3;
}

}  // namespace

class OracleImpl {
 public:
  virtual ~OracleImpl() = default;
  virtual void sample_into(const Window& w, double eps, std::vector<Point2>& out) const = 0;
  virtual bool has_exact() const { return true; }
  virtual double exact_dist(Point2 p) const = 0;
  virtual json descriptor() const = 0;
  virtual std::string describe() const = 0;
};

namespace {

class CircleImpl final : public OracleImpl {
 public:
  CircleImpl(Point2 c, double r) : c_(c), r_(r) {
    if (!is_finite(c) || !(r > 0.0) || !std::isfinite(r))
      throw std::invalid_argument("circle: bad parameters");
  }

  void sample_into(const Window& w, double eps, std::vector<Point2>& out) const override {
    Box box = Box::of(w, 2 * eps);
    // coarse arcs, each short against the box, then adaptive refinement
    double coarse_len = std::max(4.0 * eps, std::min(box.width(), box.height()) / 8.0);
    int n = std::clamp(static_cast<int>(std::ceil(kTwoPi * r_ / coarse_len)), 16, 8192);
    std::vector<bool> keep(n, false);
    bool any = false, all = true;
    for (int i = 0; i < n; ++i) {
      double a0 = kTwoPi * i / n, a1 = kTwoPi * (i + 1) / n;
      Point2 p0 = at(a0), p1 = at(a1), pm = at(0.5 * (a0 + a1));
      double pad = r_ * (a1 - a0) * (a1 - a0) / 8.0 + 1e-12;
      double bx0 = std::min({p0.x, p1.x, pm.x}) - pad;
      double bx1 = std::max({p0.x, p1.x, pm.x}) + pad;
      double by0 = std::min({p0.y, p1.y, pm.y}) - pad;
      double by1 = std::max({p0.y, p1.y, pm.y}) + pad;
      keep[i] = box.overlaps(bx0, by0, bx1, by1);
      any = any || keep[i];
      all = all && keep[i];
    }
    if (!any) return;
    auto fn = [this](double a) { return at(a); };
    double step = 0.95 * eps;
    if (all) {
      emit_adaptive(fn, 0.0, kTwoPi, step, out);
      return;
    }
    int start = 0;
    while (keep[start]) ++start;  // some arc is dropped, runs are well-defined
    for (int i = 0; i < n;) {
      int idx = (start + i) % n;
      if (!keep[idx]) {
        ++i;
        continue;
      }
      int j = i;
      while (j < n && keep[(start + j) % n]) ++j;
      double a0 = kTwoPi * ((start + i) % n) / n;
      double a1 = a0 + kTwoPi * (j - i) / n;
      emit_adaptive(fn, a0, a1, step, out);
      i = j;
    }
  }

  double exact_dist(Point2 p) const override { return std::fabs(dist(p, c_) - r_); }

  json descriptor() const override {
    return {{"kind", "circle"}, {"cx", c_.x}, {"cy", c_.y}, {"r", r_}};
  }
  std::string describe() const override {
    return "circle((" + fmt_num(c_.x) + "," + fmt_num(c_.y) + "), r=" + fmt_num(r_) + ")";
  }

 private:
  Point2 at(double a) const { return {c_.x + r_ * std::cos(a), c_.y + r_ * std::sin(a)}; }
  Point2 c_;
  double r_;
};

class PointsImpl final : public OracleImpl {
 public:
  PointsImpl(std::vector<Point2> pts, double spacing, bool as_cloud)
      : spacing_(spacing), cloud_(as_cloud) {
    if (pts.empty()) throw std::invalid_argument("point set: empty");
    for (const auto& p : pts)
      if (!is_finite(p)) throw std::invalid_argument("point set: non-finite point");
    index_ = PointIndex(std::move(pts));
  }

  void sample_into(const Window& w, double eps, std::vector<Point2>& out) const override {
    Box box = Box::of(w, 2 * eps);
    for (const auto& p : index_.points())
      if (box.contains(p)) out.push_back(p);
  }

  double exact_dist(Point2 p) const override { return index_.nearest(p).second; }

  json descriptor() const override {
    if (cloud_)
      return {{"kind", "implicit-samples"},
              {"count", index_.size()},
              {"spacing", spacing_}};
    json pts = json::array();
    for (const auto& p : index_.points()) pts.push_back({p.x, p.y});
    return {{"kind", "polyline"}, {"points", pts}, {"connected", false}};
  }
  std::string describe() const override {
    return (cloud_ ? "cloud of " : "points: ") + std::to_string(index_.size());
  }

  const PointIndex& index() const { return index_; }

 private:
  PointIndex index_;
  double spacing_;
  bool cloud_;
};

class SegmentImpl final : public OracleImpl {
 public:
  SegmentImpl(Point2 a, Point2 b) : a_(a), b_(b) {
    if (!is_finite(a) || !is_finite(b) || dist(a, b) == 0.0)
      throw std::invalid_argument("segment: bad endpoints");
  }
  void sample_into(const Window& w, double eps, std::vector<Point2>& out) const override {
    double lo, hi;
    if (!clip_param(a_, b_ - a_, 0.0, 1.0, Box::of(w, 2 * eps), lo, hi)) return;
    emit_linear(a_, b_ - a_, lo, hi, 0.95 * eps, out);
  }
  double exact_dist(Point2 p) const override { return point_segment_dist(p, a_, b_); }
  json descriptor() const override {
    return {{"kind", "polyline"},
            {"points", {{a_.x, a_.y}, {b_.x, b_.y}}},
            {"connected", true}};
  }
  std::string describe() const override {
    return "segment((" + fmt_num(a_.x) + "," + fmt_num(a_.y) + ")-(" + fmt_num(b_.x) + "," +
           fmt_num(b_.y) + "))";
  }

 private:
  Point2 a_, b_;
};

class RayImpl final : public OracleImpl {
 public:
  RayImpl(Point2 origin, Point2 dir) : o_(origin), d_(normalized(dir)) {
    if (!is_finite(origin)) throw std::invalid_argument("ray: bad origin");
  }
  void sample_into(const Window& w, double eps, std::vector<Point2>& out) const override {
    Box box = Box::of(w, 2 * eps);
    double far = 4.0 * (std::hypot(box.width(), box.height()) +
                        std::max(std::fabs(o_.x), std::fabs(o_.y)) + 1.0);
    double lo, hi;
    if (!clip_param(o_, d_, 0.0, far, box, lo, hi)) return;
    emit_linear(o_, d_, lo, hi, 0.95 * eps, out);
  }
  double exact_dist(Point2 p) const override {
    double t = std::max(0.0, dot(p - o_, d_));
    return dist(p, o_ + t * d_);
  }
  json descriptor() const override {
    return {{"kind", "polyline"},
            {"points", {{o_.x, o_.y}, {o_.x + d_.x, o_.y + d_.y}}},
            {"connected", true},
            {"extend_last", true}};
  }
  std::string describe() const override {
    return "ray((" + fmt_num(o_.x) + "," + fmt_num(o_.y) + ") dir (" + fmt_num(d_.x) + "," +
           fmt_num(d_.y) + "))";
  }

 private:
  Point2 o_, d_;
};

class LineImpl final : public OracleImpl {
 public:
  LineImpl(Point2 through, Point2 dir) : o_(through), d_(normalized(dir)) {
    if (!is_finite(through)) throw std::invalid_argument("line: bad point");
  }
  void sample_into(const Window& w, double eps, std::vector<Point2>& out) const override {
    Box box = Box::of(w, 2 * eps);
    double far = 4.0 * (std::hypot(box.width(), box.height()) +
                        std::max(std::fabs(o_.x), std::fabs(o_.y)) + 1.0);
    double lo, hi;
    if (!clip_param(o_, d_, -far, far, box, lo, hi)) return;
    emit_linear(o_, d_, lo, hi, 0.95 * eps, out);
  }
  double exact_dist(Point2 p) const override {
    Point2 v = p - o_;
    return std::fabs(v.x * d_.y - v.y * d_.x);
  }
  json descriptor() const override {
    return {{"kind", "polyline"},
            {"points", {{o_.x, o_.y}, {o_.x + d_.x, o_.y + d_.y}}},
            {"connected", true},
            {"extend_first", true},
            {"extend_last", true}};
  }
  std::string describe() const override {
    return "line((" + fmt_num(o_.x) + "," + fmt_num(o_.y) + ") dir (" + fmt_num(d_.x) + "," +
           fmt_num(d_.y) + "))";
  }

 private:
  Point2 o_, d_;
};

class ParabolaImpl final : public OracleImpl {
 public:
  ParabolaImpl(double alpha, double beta, double xlo, double xhi)
      : a_(alpha), b_(beta), xlo_(xlo), xhi_(xhi) {
    if (!(alpha > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta))
      throw std::invalid_argument("parabola: bad coefficients");
    if (!(xlo < xhi)) throw std::invalid_argument("parabola: bad domain");
  }

  void sample_into(const Window& w, double eps, std::vector<Point2>& out) const override {
    Box box = Box::of(w, 2 * eps);
    double X0 = std::max(xlo_, box.x0), X1 = std::min(xhi_, box.x1);
    if (X0 > X1) return;
    // alpha*x^2 + beta in [y0, y1]
    double upper = (box.y1 - b_) / a_;
    if (upper < 0.0) return;
    double outer = std::sqrt(upper);
    double lower = (box.y0 - b_) / a_;
    double inner = lower > 0.0 ? std::sqrt(lower) : 0.0;
    auto fn = [this](double x) -> Point2 { return {x, a_ * x * x + b_}; };
    double step = 0.95 * eps;
    auto piece = [&](double lo, double hi) {
      lo = std::max(lo, X0);
      hi = std::min(hi, X1);
      if (lo <= hi) emit_adaptive(fn, lo, hi, step, out);
    };
    if (inner == 0.0) {
      piece(-outer, outer);
    } else {
      piece(-outer, -inner);
      piece(inner, outer);
    }
  }

  double exact_dist(Point2 p) const override {
    // critical points of the squared distance solve a depressed cubic
    double inv = 1.0 / (2.0 * a_ * a_);
    double cp = (1.0 + 2.0 * a_ * (b_ - p.y)) * inv;
    double cq = -p.x * inv;
    double roots[3];
    int nr = depressed_cubic_roots(cp, cq, roots);
    double best = kInf;
    auto consider = [&](double x) {
      if (!std::isfinite(x)) return;
      x = std::clamp(x, xlo_, xhi_);
      // a couple of Newton steps sharpen the Cardano root
      for (int it = 0; it < 2; ++it) {
        double g1 = (x - p.x) + 2.0 * a_ * x * (a_ * x * x + b_ - p.y);
        double g2 = 1.0 + 2.0 * a_ * (3.0 * a_ * x * x + b_ - p.y);
        if (g2 > 1e-12) x = std::clamp(x - g1 / g2, xlo_, xhi_);
      }
      double dx = x - p.x, dy = a_ * x * x + b_ - p.y;
      best = std::min(best, std::hypot(dx, dy));
    };
    for (int i = 0; i < nr; ++i) consider(roots[i]);
    if (std::isfinite(xlo_)) consider(xlo_);
    if (std::isfinite(xhi_)) consider(xhi_);
    return best;
  }

  json descriptor() const override {
    json dom = json::array();
    dom.push_back(std::isfinite(xlo_) ? json(xlo_) : json());
    dom.push_back(std::isfinite(xhi_) ? json(xhi_) : json());
    return {{"kind", "graph"}, {"fn", "parabola"}, {"a", a_}, {"b", b_}, {"domain", dom}};
  }
  std::string describe() const override {
    return "graph y=" + fmt_num(a_) + "x^2" + (b_ < 0 ? "" : "+") + fmt_num(b_);
  }

 private:
  double a_, b_, xlo_, xhi_;
};

class SqrtOffsetImpl final : public OracleImpl {
 public:
  explicit SqrtOffsetImpl(double t) : t_(std::fabs(t)) {
    if (!(t_ > 0.0) || !std::isfinite(t_)) throw std::invalid_argument("sqrt graph: bad t");
  }

  void sample_into(const Window& w, double eps, std::vector<Point2>& out) const override {
    Box box = Box::of(w, 2 * eps);
    if (box.y1 < t_) return;
    double outer = std::sqrt(box.y1 * box.y1 - t_ * t_);
    double inner = box.y0 > t_ ? std::sqrt(box.y0 * box.y0 - t_ * t_) : 0.0;
    auto fn = [this](double u) -> Point2 { return {u, std::hypot(u, t_)}; };
    double step = 0.95 * eps;
    auto piece = [&](double lo, double hi) {
      lo = std::max(lo, box.x0);
      hi = std::min(hi, box.x1);
      if (lo <= hi) emit_adaptive(fn, lo, hi, step, out);
    };
    if (inner == 0.0) {
      piece(-outer, outer);
    } else {
      piece(-outer, -inner);
      piece(inner, outer);
    }
  }

  double exact_dist(Point2 p) const override {
    // d/du of the squared distance vanishes where F(u) = 2u - px - py*u/v(u) = 0
    auto F = [&](double u) { return 2.0 * u - p.x - p.y * u / std::hypot(u, t_); };
    double R = std::fabs(p.x) + std::fabs(p.y) + t_ + 1.0;
    double best = kInf;
    auto value = [&](double u) {
      double v = std::hypot(u, t_);
      best = std::min(best, std::hypot(u - p.x, v - p.y));
    };
    auto bisect = [&](double lo, double hi) {
      double flo = F(lo), fhi = F(hi);
      if (flo == 0.0) {
        value(lo);
        return;
      }
      if (fhi == 0.0) {
        value(hi);
        return;
      }
      if ((flo < 0.0) == (fhi < 0.0)) return;
      for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = F(mid);
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      value(0.5 * (lo + hi));
    };
    if (p.y > 2.0 * t_) {
      double vc = std::cbrt(0.5 * p.y * t_ * t_);
      double uc = vc > t_ ? std::sqrt(vc * vc - t_ * t_) : 0.0;
      bisect(-R, -uc);
      bisect(-uc, uc);
      bisect(uc, R);
    } else {
      bisect(-R, R);
    }
    value(0.0);  // apex, in case the query sits on the axis of symmetry
    return best;
  }

  json descriptor() const override {
    return {{"kind", "graph"}, {"fn", "sqrt-offset"}, {"t", t_}};
  }
  std::string describe() const override { return "graph y=sqrt(x^2+" + fmt_num(t_ * t_) + ")"; }

 private:
  double t_;
};

class UnionImpl final : public OracleImpl {
 public:
  explicit UnionImpl(std::vector<SetOracle> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("union: empty");
  }
  void sample_into(const Window& w, double eps, std::vector<Point2>& out) const override {
    for (const auto& p : parts_) p.impl().sample_into(w, eps, out);
  }
  bool has_exact() const override {
    for (const auto& p : parts_)
      if (!p.impl().has_exact()) return false;
    return true;
  }
  double exact_dist(Point2 q) const override {
    double best = kInf;
    for (const auto& p : parts_) best = std::min(best, p.impl().exact_dist(q));
    return best;
  }
  json descriptor() const override {
    json parts = json::array();
    for (const auto& p : parts_) parts.push_back(p.impl().descriptor());
    return {{"kind", "union"}, {"parts", parts}};
  }
  std::string describe() const override {
    std::string s = "union(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ", ";
      s += parts_[i].impl().describe();
    }
    return s + ")";
  }

 private:
  std::vector<SetOracle> parts_;
};

class ScaledImpl final : public OracleImpl {
 public:
  ScaledImpl(std::shared_ptr<const OracleImpl> base, double factor)
      : base_(std::move(base)), f_(factor) {
    if (!(factor > 0.0) || !std::isfinite(factor))
      throw std::invalid_argument("scaled: factor must be positive");
  }
  void sample_into(const Window& w, double eps, std::vector<Point2>& out) const override {
    Window base_w({w.lo.x / f_, w.lo.y / f_}, {w.hi.x / f_, w.hi.y / f_}, w.h / f_);
    std::size_t first = out.size();
    base_->sample_into(base_w, eps / f_, out);
    for (std::size_t i = first; i < out.size(); ++i) out[i] = f_ * out[i];
  }
  bool has_exact() const override { return base_->has_exact(); }
  double exact_dist(Point2 p) const override {
    return f_ * base_->exact_dist({p.x / f_, p.y / f_});
  }
  json descriptor() const override {
    json d = base_->descriptor();
    double s = f_;
    if (d.contains("scale")) s *= d["scale"].get<double>();
    d["scale"] = s;
    return d;
  }
  std::string describe() const override {
    return fmt_num(f_) + "*" + base_->describe();
  }

 private:
  std::shared_ptr<const OracleImpl> base_;
  double f_;
};

}  // namespace
}  // namespace detail

SetOracle::SetOracle(std::shared_ptr<const detail::OracleImpl> impl) : impl_(std::move(impl)) {}

std::vector<Point2> SetOracle::sample(const Window& w, double eps) const {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("sample: eps must be > 0");
  std::vector<Point2> out;
  impl_->sample_into(w, eps, out);
  for (const auto& p : out)
    if (!is_finite(p)) throw std::invalid_argument("sample produced non-finite point");
  return out;
}

bool SetOracle::has_exact_distance() const { return impl_->has_exact(); }

double SetOracle::exact_distance(Point2 p) const {
  if (!impl_->has_exact()) throw Error("oracle has no exact distance");
  if (!is_finite(p)) throw std::invalid_argument("exact_distance: non-finite query");
  return impl_->exact_dist(p);
}

std::string SetOracle::describe() const { return impl_->describe(); }

nlohmann::ordered_json SetOracle::descriptor_json() const { return impl_->descriptor(); }

SetOracle SetOracle::scaled(double factor) const {
  return SetOracle(std::make_shared<detail::ScaledImpl>(impl_, factor));
}

SetOracle SetOracle::circle(Point2 center, double radius) {
  return SetOracle(std::make_shared<detail::CircleImpl>(center, radius));
}
SetOracle SetOracle::points(std::vector<Point2> pts) {
  return SetOracle(std::make_shared<detail::PointsImpl>(std::move(pts), 0.0, false));
}
SetOracle SetOracle::cloud(std::vector<Point2> pts, double spacing) {
  return SetOracle(std::make_shared<detail::PointsImpl>(std::move(pts), spacing, true));
}
SetOracle SetOracle::segment(Point2 a, Point2 b) {
  return SetOracle(std::make_shared<detail::SegmentImpl>(a, b));
}
SetOracle SetOracle::ray(Point2 origin, Point2 dir) {
  return SetOracle(std::make_shared<detail::RayImpl>(origin, dir));
}
SetOracle SetOracle::line(Point2 through, Point2 dir) {
  return SetOracle(std::make_shared<detail::LineImpl>(through, dir));
}
SetOracle SetOracle::parabola(double alpha, double beta, double xlo, double xhi) {
  return SetOracle(std::make_shared<detail::ParabolaImpl>(alpha, beta, xlo, xhi));
}
SetOracle SetOracle::sqrt_offset_graph(double t) {
  return SetOracle(std::make_shared<detail::SqrtOffsetImpl>(t));
}
SetOracle SetOracle::vee(double slope) {
  Point2 right{1.0, slope};
  Point2 left{-1.0, slope};
  return union_of({ray({0, 0}, right), ray({0, 0}, left)});
}
SetOracle SetOracle::union_of(std::vector<SetOracle> parts) {
  if (parts.size() == 1) return parts.front();
  return SetOracle(std::make_shared<detail::UnionImpl>(std::move(parts)));
}

std::vector<Point2> sample_set(const SetOracle& oracle, const Window& w, double eps) {
  auto pts = oracle.sample(w, eps);
  if (pts.empty())
    throw EmptyOnWindowError("set does not meet the eps-fattened window (" +
                             std::string(oracle.describe()) + ")");
  return pts;
}

std::vector<Point2> restrict_to_window(const std::vector<Point2>& pts, const Window& w,
                                       double margin) {
  if (margin < 0.0) throw std::invalid_argument("restrict_to_window: margin must be >= 0");
  std::vector<Point2> out;
  out.reserve(pts.size());
  for (const auto& p : pts)
    if (w.contains(p, margin)) out.push_back(p);
  return out;
}

}  // namespace medax
