#pragma once

#include <utility>
#include <vector>

#include "medax/geometry.hpp"

namespace medax {

/// Static kd-tree over a fixed point cloud. Build once, query from any
/// number of threads. Nearest-neighbour ties break toward the smaller
/// input index so query results are reproducible.
class PointIndex {
 public:
  PointIndex() = default;
  explicit PointIndex(std::vector<Point2> pts);

  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  const std::vector<Point2>& points() const { return pts_; }
  const Point2& operator[](std::size_t i) const { return pts_[i]; }

  /// Index and distance of the closest point. Requires a nonempty index.
  std::pair<int, double> nearest(Point2 q) const;

  /// Indices of all points within `radius` of q, ascending index order.
  void within(Point2 q, double radius, std::vector<int>& out) const;

 private:
  struct Node {
    int left = -1;
    int right = -1;
    int point = -1;
    unsigned char axis = 0;
  };

  int build(int* ids, int count, int depth);
  void nearest_rec(int node, Point2 q, int& best, double& best_d2) const;
  void within_rec(int node, Point2 q, double r2, std::vector<int>& out) const;

  std::vector<Point2> pts_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

}  // namespace medax
