#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "rotbeta/core.hpp"

namespace rotbeta::bounds {

inline void require_angle(double theta) {
  if (!(theta > 0.0 && theta < std::numbers::pi))
    throw invalid_input("angle must lie in (0, pi)");
}

/// Folds theta into (0, pi/2]; both thresholds are symmetric under theta <-> pi - theta.
inline double fold(double theta) {
  require_angle(theta);
  return std::min(theta, std::numbers::pi - theta);
}

/// Threshold of the Scheicher-Surer family: sqrt((1 + sqrt(1 + 4 sin^4)) / (2 sin^2)).
inline double c_theta(double theta) {
  require_angle(theta);
  const double s2 = std::sin(theta) * std::sin(theta);
  return std::sqrt((1.0 + std::sqrt(1.0 + 4.0 * s2 * s2)) / (2.0 * s2));
}

/// Individual branches, evaluated on the folded angle without branch selection.
inline double b1_branch1(double) { return 2.0; }
inline double b1_branch2(double theta) { return 1.0 + 2.0 / (1.0 + std::sin(theta / 2.0)); }
inline double b1_branch3(double theta) {
  const double t = std::tan(theta / 2.0);
  return 1.5 + 1.0 / (16.0 * t * t) + t * t;
}
inline double b2_branch1(double theta) {
  return 1.0 + 1.0 / (std::sin(theta) * std::cos(theta / 2.0));
}
inline double b2_branch2(double theta) { return 1.0 + 2.0 / (1.0 + std::sin(theta / 2.0)); }

/// sqrt(5) - 2: the half-angle sine where the small-angle configuration of
/// B1 starts passing through the lattice point.
inline const double kB1SmallAngleSine = std::sqrt(5.0) - 2.0;

inline int b1_branch(double theta) {
  const double t = fold(theta);
  if (std::tan(t / 2.0) > 0.5) return 1;
  if (std::sin(t / 2.0) < kB1SmallAngleSine) return 2;
  return 3;
}

inline double b1(double theta) {
  const double t = fold(theta);
  switch (b1_branch(theta)) {
    case 1: return b1_branch1(t);
    case 2: return b1_branch2(t);
    default: return b1_branch3(t);
  }
}

/// B1 with the second-branch condition read literally as sin(theta) < sqrt5 - 2.
/// Kept for comparison; it jumps at the switch, unlike b1().
inline double b1_literal(double theta) {
  const double t = fold(theta);
  if (std::tan(t / 2.0) > 0.5) return b1_branch1(t);
  if (std::sin(t) < kB1SmallAngleSine) return b1_branch2(t);
  return b1_branch3(t);
}

inline int b2_branch(double theta) { return fold(theta) > std::numbers::pi / 3.0 ? 1 : 2; }

inline double b2(double theta) {
  const double t = fold(theta);
  return b2_branch(theta) == 1 ? b2_branch1(t) : b2_branch2(t);
}

struct Row {
  double theta, b1, b2, c;
  int branch_b1, branch_b2;
};

struct Table {
  std::vector<Row> rows;
};

/// `count` equally spaced angles on [lo, hi].
inline std::vector<double> linear_grid(double lo, double hi, int count) {
  if (count < 2) throw invalid_input("grid needs at least 2 points");
  std::vector<double> g(count);
  for (int i = 0; i < count; ++i) g[i] = lo + (hi - lo) * i / (count - 1);
  return g;
}

/// Evaluates every bound on the grid and checks 1 < B1 <= B2 < 3 at each
/// point, throwing a Verification error naming the first offending angle.
inline Table make_table(const std::vector<double>& grid) {
  Table t;
  for (double th : grid) {
    Row r{th, b1(th), b2(th), c_theta(th), b1_branch(th), b2_branch(th)};
    if (!(r.b1 > 1.0 && r.b1 <= r.b2 + 1e-12 && r.b2 < 3.0 && r.c > 1.0))
      throw Error(ErrorKind::Verification,
                  "bounds table invariant violated at theta = " + std::to_string(th));
    t.rows.push_back(r);
  }
  return t;
}

}  // namespace rotbeta::bounds
