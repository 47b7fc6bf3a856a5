#pragma once

#include <cmath>

#include "rotbeta/core.hpp"

namespace rotbeta {

/// Orthogonal matrix M in O(m).
class Isometry {
 public:
  explicit Isometry(Mat m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() < 1 || m_.rows() > kMaxDim)
      throw invalid_input("isometry must be a square matrix of dimension 1.." + std::to_string(kMaxDim));
    const Mat gram = m_.transpose() * m_;
    const double err = (gram - Mat::Identity(m_.rows(), m_.rows())).cwiseAbs().maxCoeff();
    if (!(err <= 1e-12)) throw invalid_input("matrix is not orthogonal (|M^T M - I| > 1e-12)");
    det_ = m_.determinant();
    if (std::abs(std::abs(det_) - 1.0) > 1e-12) throw invalid_input("isometry determinant is not +-1");
  }

  static Isometry identity(int m) { return Isometry(Mat::Identity(m, m)); }

  /// Counter-clockwise rotation of the plane.
  static Isometry rotation(double angle) {
    Mat r(2, 2);
    r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
    return Isometry(r);
  }

  /// Reflection of the plane across the line through the origin at `axis_angle`.
  static Isometry reflection(double axis_angle) {
    Mat r(2, 2);
    const double c = std::cos(2 * axis_angle), s = std::sin(2 * axis_angle);
    r << c, s, s, -c;
    return Isometry(r);
  }

  int dim() const { return static_cast<int>(m_.rows()); }
  const Mat& matrix() const { return m_; }
  Mat inverse() const { return m_.transpose(); }
  int det_sign() const { return det_ > 0 ? 1 : -1; }

  /// Rotation angle when M is a planar rotation; throws otherwise.
  double rotation_angle() const {
    if (dim() != 2 || det_sign() != 1) throw invalid_input("isometry is not a planar rotation");
    return std::atan2(m_(1, 0), m_(0, 0));
  }

 private:
  Mat m_;
  double det_ = 1.0;
};

}  // namespace rotbeta
