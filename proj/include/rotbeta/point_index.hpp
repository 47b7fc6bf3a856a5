#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "rotbeta/core.hpp"

namespace rotbeta {

/// Static k-d tree over a point cloud, answering nearest-distance queries.
class PointIndex {
 public:
  PointIndex() = default;

  explicit PointIndex(const std::vector<Vec>& points) {
    if (points.empty()) return;
    dim_ = static_cast<int>(points.front().size());
    coords_.resize(points.size() * dim_);
    nodes_.resize(points.size());
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    build(points, order, 0, order.size());
  }

  bool empty() const { return nodes_.empty(); }
  std::size_t size() const { return nodes_.size(); }

  /// Euclidean distance to the nearest indexed point (+inf when empty).
  double nearest_distance(const Vec& q) const {
    double best = std::numeric_limits<double>::infinity();
    if (!nodes_.empty()) search(q, 0, nodes_.size(), best);
    return std::sqrt(best);
  }

 private:
  struct Node {
    int axis;
  };

  // Nodes are stored in in-order layout: the median of [lo, hi) sits at mid.
  void build(const std::vector<Vec>& pts, std::vector<std::size_t>& order, std::size_t lo,
             std::size_t hi) {
    if (lo >= hi) return;
    // split on the axis of largest spread
    int axis = 0;
    double spread = -1.0;
    for (int a = 0; a < dim_; ++a) {
      double mn = std::numeric_limits<double>::infinity(), mx = -mn;
      for (std::size_t i = lo; i < hi; ++i) {
        mn = std::min(mn, pts[order[i]](a));
        mx = std::max(mx, pts[order[i]](a));
      }
      if (mx - mn > spread) {
        spread = mx - mn;
        axis = a;
      }
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    std::nth_element(order.begin() + lo, order.begin() + mid, order.begin() + hi,
                     [&](std::size_t a, std::size_t b) { return pts[a](axis) < pts[b](axis); });
    nodes_[mid].axis = axis;
    for (int a = 0; a < dim_; ++a) coords_[mid * dim_ + a] = pts[order[mid]](a);
    build(pts, order, lo, mid);
    build(pts, order, mid + 1, hi);
  }

  void search(const Vec& q, std::size_t lo, std::size_t hi, double& best) const {
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      const double* p = &coords_[mid * dim_];
      double d2 = 0.0;
      for (int a = 0; a < dim_; ++a) {
        const double t = q(a) - p[a];
        d2 += t * t;
      }
      best = std::min(best, d2);
      const int axis = nodes_[mid].axis;
      const double diff = q(axis) - p[axis];
      if (diff < 0.0) {
        search(q, lo, mid, best);
        if (diff * diff < best) lo = mid + 1;
        else return;
      } else {
        search(q, mid + 1, hi, best);
        if (diff * diff < best) hi = mid;
        else return;
      }
    }
  }

  int dim_ = 0;
  std::vector<Node> nodes_;
  std::vector<double> coords_;
};

}  // namespace rotbeta
