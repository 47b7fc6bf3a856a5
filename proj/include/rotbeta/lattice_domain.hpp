#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "rotbeta/core.hpp"

namespace rotbeta {

/// Half-open parallelotope X = { xi + B c : c in [0,1)^m } whose translates
/// by the lattice L = B Z^m tile R^m. Columns of B are the generators.
class LatticeDomain {
 public:
  LatticeDomain(Mat basis, Vec xi) : basis_(std::move(basis)), xi_(std::move(xi)) {
    const auto m = basis_.rows();
    if (m < 1 || m > kMaxDim || basis_.cols() != m)
      throw invalid_input("basis must be square with dimension 1.." + std::to_string(kMaxDim));
    if (xi_.size() != m) throw invalid_input("translation xi has wrong dimension");
    if (!basis_.allFinite() || !xi_.allFinite()) throw invalid_input("non-finite domain data");
    double scale = 1.0;
    for (Eigen::Index i = 0; i < m; ++i) scale *= basis_.col(i).norm();
    det_ = basis_.determinant();
    if (!(std::abs(det_) > 1e-12 * scale)) throw invalid_input("degenerate basis (det ~ 0)");
    inverse_ = basis_.inverse();
  }

  /// Unit cube [0,1)^m.
  static LatticeDomain unit_cube(int m) {
    Mat b = Mat::Identity(m, m);
    return LatticeDomain(b, Vec::Zero(m));
  }

  /// Two generators of the given lengths separated by angle theta, first along x.
  static LatticeDomain parallelogram(double len1, double len2, double theta,
                                     Vec xi = Vec::Zero(2)) {
    Mat b(2, 2);
    b << len1, len2 * std::cos(theta), 0.0, len2 * std::sin(theta);
    return LatticeDomain(b, std::move(xi));
  }

  int dim() const { return static_cast<int>(basis_.rows()); }
  const Mat& basis() const { return basis_; }
  const Mat& basis_inverse() const { return inverse_; }
  const Vec& xi() const { return xi_; }
  Vec eta(int i) const { return basis_.col(i); }
  double determinant() const { return det_; }
  double volume() const { return std::abs(det_); }

  Vec coords(const Vec& x) const { return inverse_ * (x - xi_); }
  Vec point(const Vec& c) const { return xi_ + basis_ * c; }

  /// Exact half-open membership: every lattice coordinate in [0,1).
  bool contains(const Vec& x) const {
    const Vec c = coords(x);
    for (Eigen::Index i = 0; i < c.size(); ++i)
      if (!(c(i) >= 0.0 && c(i) < 1.0)) return false;
    return true;
  }

  /// Membership in the closed parallelotope, widened by `slack` in coordinates.
  bool contains_closed(const Vec& x, double slack = 1e-12) const {
    const Vec c = coords(x);
    for (Eigen::Index i = 0; i < c.size(); ++i)
      if (!(c(i) >= -slack && c(i) <= 1.0 + slack)) return false;
    return true;
  }

  /// Distance between the two facets orthogonal to coordinate i.
  double facet_height(int i) const { return 1.0 / inverse_.row(i).norm(); }

  /// Angle between eta_1 and eta_2, in (0, pi). Only for m = 2.
  double theta() const {
    if (dim() != 2) throw invalid_input("theta is defined only for m = 2");
    const Vec a = basis_.col(0), b = basis_.col(1);
    return std::atan2(std::abs(a(0) * b(1) - a(1) * b(0)), a.dot(b));
  }

  std::vector<Vec> vertices() const {
    const int m = dim();
    std::vector<Vec> out;
    for (int mask = 0; mask < (1 << m); ++mask) {
      Vec c(m);
      for (int i = 0; i < m; ++i) c(i) = (mask >> i) & 1;
      out.push_back(point(c));
    }
    return out;
  }

  /// Longest diagonal of the closed parallelotope.
  double diameter() const {
    const int m = dim();
    double best = 0.0;
    for (int mask = 0; mask < (1 << m); ++mask) {
      Vec s(m);
      for (int i = 0; i < m; ++i) s(i) = ((mask >> i) & 1) ? 1.0 : -1.0;
      best = std::max(best, (basis_ * s).norm());
    }
    return best;
  }

  /// max over closed X of the Euclidean norm (attained at a vertex).
  double max_norm() const {
    double best = 0.0;
    for (const auto& v : vertices()) best = std::max(best, v.norm());
    return best;
  }

 private:
  Mat basis_;
  Vec xi_;
  Mat inverse_;
  double det_ = 0.0;
};

/// Closed strip { x : |<n, x> - offset| <= half_width }. A hyperplane is a
/// strip with zero half-width.
struct Strip {
  Vec normal;
  double offset = 0.0;
  double half_width = 0.0;

  Strip() = default;
  Strip(Vec n, double c, double h) : normal(std::move(n)), offset(c), half_width(h) {
    if (std::abs(normal.norm() - 1.0) > 1e-12) throw invalid_input("strip normal must be a unit vector");
    if (!(half_width >= 0.0)) throw invalid_input("strip half-width must be >= 0");
  }

  /// Normal given by its angle in the plane.
  static Strip planar(double normal_angle, double offset, double half_width) {
    return Strip(make_vec({std::cos(normal_angle), std::sin(normal_angle)}), offset, half_width);
  }

  double width() const { return 2.0 * half_width; }
  double axis_distance(const Vec& x) const { return std::abs(normal.dot(x) - offset); }
  /// Positive outside the strip, nonpositive inside.
  double clearance(const Vec& x) const { return axis_distance(x) - half_width; }
  bool contains(const Vec& x) const { return clearance(x) <= 0.0; }
};

}  // namespace rotbeta
