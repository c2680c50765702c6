#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace medax {

/// A point of the plane. All sets, queries and estimates live in R^2.
struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline Point2 operator*(Point2 p, double s) { return {s * p.x, s * p.y}; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double norm2(Point2 p) { return p.x * p.x + p.y * p.y; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double dist2(Point2 a, Point2 b) { return norm2(a - b); }
inline double dist(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

inline Point2 normalized(Point2 p) {
  double n = norm(p);
  if (n == 0.0) throw std::invalid_argument("cannot normalize zero vector");
  return {p.x / n, p.y / n};
}

/// Axis-aligned compact box with a grid pitch. Every estimate, limit and
/// verdict is computed on the node lattice of such a window.
struct Window {
  Point2 lo;
  Point2 hi;
  double h = 0.0;  // grid pitch; 0 < h < each side length

  Window(Point2 lo_, Point2 hi_, double h_) : lo(lo_), hi(hi_), h(h_) {
    if (!is_finite(lo) || !is_finite(hi) || !std::isfinite(h))
      throw std::invalid_argument("window: non-finite bounds");
    if (!(lo.x < hi.x && lo.y < hi.y))
      throw std::invalid_argument("window: min corner must be strictly below max corner");
    if (!(h > 0.0) || !(h < width()) || !(h < height()))
      throw std::invalid_argument("window: grid pitch must satisfy 0 < h < side lengths");
  }

  double width() const { return hi.x - lo.x; }
  double height() const { return hi.y - lo.y; }
  double diag() const { return std::hypot(width(), height()); }

  Window inflated(double margin) const {
    return Window({lo.x - margin, lo.y - margin}, {hi.x + margin, hi.y + margin}, h);
  }

  bool contains(Point2 p, double margin = 0.0) const {
    return p.x >= lo.x - margin && p.x <= hi.x + margin &&
           p.y >= lo.y - margin && p.y <= hi.y + margin;
  }

  int nx() const { return static_cast<int>(std::floor(width() / h + 1e-9)) + 1; }
  int ny() const { return static_cast<int>(std::floor(height() / h + 1e-9)) + 1; }
  std::size_t node_count() const {
    return static_cast<std::size_t>(nx()) * static_cast<std::size_t>(ny());
  }
  Point2 node(int i, int j) const { return {lo.x + i * h, lo.y + j * h}; }
};

}  // namespace medax
