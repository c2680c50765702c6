#include "medax/point_index.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace medax {

PointIndex::PointIndex(std::vector<Point2> pts) : pts_(std::move(pts)) {
  if (pts_.empty()) return;
  std::vector<int> ids(pts_.size());
  std::iota(ids.begin(), ids.end(), 0);
  nodes_.reserve(pts_.size());
  root_ = build(ids.data(), static_cast<int>(ids.size()), 0);
}

int PointIndex::build(int* ids, int count, int depth) {
  if (count <= 0) return -1;
  int axis = depth & 1;
  int mid = count / 2;
  std::nth_element(ids, ids + mid, ids + count, [&](int a, int b) {
    double va = axis == 0 ? pts_[a].x : pts_[a].y;
    double vb = axis == 0 ? pts_[b].x : pts_[b].y;
    if (va != vb) return va < vb;
    return a < b;  // total order keeps the tree layout reproducible
  });
  int self = static_cast<int>(nodes_.size());
  nodes_.push_back(Node{});
  nodes_[self].point = ids[mid];
  nodes_[self].axis = static_cast<unsigned char>(axis);
  int l = build(ids, mid, depth + 1);
  int r = build(ids + mid + 1, count - mid - 1, depth + 1);
  nodes_[self].left = l;
  nodes_[self].right = r;
  return self;
}

std::pair<int, double> PointIndex::nearest(Point2 q) const {
  if (pts_.empty()) throw std::logic_error("PointIndex::nearest on empty index");
  int best = -1;
  double best_d2 = std::numeric_limits<double>::infinity();
  nearest_rec(root_, q, best, best_d2);
  return {best, std::sqrt(best_d2)};
}

void PointIndex::nearest_rec(int node, Point2 q, int& best, double& best_d2) const {
  if (node < 0) return;
  const Node& n = nodes_[node];
  const Point2& p = pts_[n.point];
  double d2 = dist2(q, p);
  if (d2 < best_d2 || (d2 == best_d2 && n.point < best)) {
    best_d2 = d2;
    best = n.point;
  }
  double delta = n.axis == 0 ? q.x - p.x : q.y - p.y;
  int near = delta <= 0 ? n.left : n.right;
  int far = delta <= 0 ? n.right : n.left;
  nearest_rec(near, q, best, best_d2);
  if (delta * delta <= best_d2) nearest_rec(far, q, best, best_d2);
}

void PointIndex::within(Point2 q, double radius, std::vector<int>& out) const {
  out.clear();
  if (pts_.empty() || radius < 0) return;
  within_rec(root_, q, radius * radius, out);
  std::sort(out.begin(), out.end());
}

void PointIndex::within_rec(int node, Point2 q, double r2, std::vector<int>& out) const {
  if (node < 0) return;
  const Node& n = nodes_[node];
  const Point2& p = pts_[n.point];
  if (dist2(q, p) <= r2) out.push_back(n.point);
  double delta = n.axis == 0 ? q.x - p.x : q.y - p.y;
  int near = delta <= 0 ? n.left : n.right;
  int far = delta <= 0 ? n.right : n.left;
  within_rec(near, q, r2, out);
  if (delta * delta <= r2) within_rec(far, q, r2, out);
}

}  // namespace medax
