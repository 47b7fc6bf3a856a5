#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "rotbeta/bounds.hpp"
#include "rotbeta/stationary.hpp"
#include "rotbeta/verdict.hpp"

namespace rotbeta::cases {

/// U(x) = beta x - floor(beta x + 1/2) on [-1/2, 1/2).
inline RotBetaMap symmetric_map_1d(double beta) {
  Mat b = Mat::Identity(1, 1);
  return RotBetaMap(beta, Isometry::identity(1), LatticeDomain(b, make_vec({-0.5})));
}

/// U x U on [-1/2, 1/2)^2 (M = identity).
inline RotBetaMap symmetric_square_map(double beta) {
  return RotBetaMap(beta, Isometry::identity(2),
                    LatticeDomain(Mat::Identity(2, 2), make_vec({-0.5, -0.5})));
}

/// T(z) = zeta z - d on X = { x + (-conj zeta) y : x, y in [0,1) }, zeta = beta e^{i theta}.
inline RotBetaMap scheicher_map(double beta, double theta) {
  bounds::require_angle(theta);
  Mat b(2, 2);
  b << 1.0, -beta * std::cos(theta), 0.0, beta * std::sin(theta);
  return RotBetaMap(beta, Isometry::rotation(theta), LatticeDomain(b, Vec::Zero(2)));
}

/// Half-open interval [lo, hi).
struct Interval {
  double lo, hi;
};

/// Closed-comparison box [x.lo, x.hi] x [y.lo, y.hi].
struct Box {
  Interval x, y;
};

/// Exact image of [lo, hi) under U, split at the discontinuities
/// x = (k + 1/2) / beta into affine pieces.
inline std::vector<Interval> interval_image(double beta, Interval in) {
  std::vector<Interval> out;
  const long long kmin = static_cast<long long>(std::floor(beta * in.lo + 0.5));
  const long long kmax = static_cast<long long>(std::ceil(beta * in.hi + 0.5));
  for (long long k = kmin; k <= kmax; ++k) {
    const double a = std::max(in.lo, (k - 0.5) / beta);
    const double b = std::min(in.hi, (k + 0.5) / beta);
    if (a < b) out.push_back({beta * a - k, beta * b - k});
  }
  return out;
}

inline std::vector<Box> box_image(double beta, const Box& box) {
  std::vector<Box> out;
  for (const auto& ix : interval_image(beta, box.x))
    for (const auto& iy : interval_image(beta, box.y)) out.push_back({ix, iy});
  return out;
}

inline bool inside(const Box& piece, const Box& target, double tol = 1e-12) {
  return piece.x.lo >= target.x.lo - tol && piece.x.hi <= target.x.hi + tol &&
         piece.y.lo >= target.y.lo - tol && piece.y.hi <= target.y.hi + tol;
}

/// Pieces P (two intervals of length a) and Q (corner intervals of length b)
/// of the symmetric map with U(P) in Q and U(Q) in P when beta <= sqrt 2.
struct TwoCycle {
  double small_side;  // (beta-1) / (2(beta+1)), the corner pieces Q
  double large_side;  // (beta-1) / (beta(beta+1)), the pieces P
  std::vector<Interval> p, q;
};

inline TwoCycle two_cycle(double beta) {
  TwoCycle t;
  t.large_side = (beta - 1.0) / (beta * (beta + 1.0));
  t.small_side = (beta - 1.0) / (2.0 * (beta + 1.0));
  const double p_lo = 1.0 / (beta * (beta + 1.0)), p_hi = 1.0 / (beta + 1.0);
  t.p = {{-p_hi, -p_lo}, {p_lo, p_hi}};
  t.q = {{-0.5, -0.5 + t.small_side}, {0.5 - t.small_side, 0.5}};
  return t;
}

/// Y1 = P x P  u  Q x Q (eight squares), Y2 = P x Q  u  Q x P (eight rectangles).
inline std::pair<std::vector<Box>, std::vector<Box>> invariant_sets(double beta) {
  const TwoCycle t = two_cycle(beta);
  std::vector<Box> y1, y2;
  for (const auto& a : t.p)
    for (const auto& b : t.p) y1.push_back({a, b});
  for (const auto& a : t.q)
    for (const auto& b : t.q) y1.push_back({a, b});
  for (const auto& a : t.p)
    for (const auto& b : t.q) {
      y2.push_back({a, b});
      y2.push_back({b, a});
    }
  return {y1, y2};
}

/// Boxes of `set` whose exact image is not covered piecewise by `set`.
inline std::vector<Box> invariance_failures(double beta, const std::vector<Box>& set) {
  std::vector<Box> bad;
  for (const auto& box : set) {
    for (const auto& piece : box_image(beta, box)) {
      bool ok = false;
      for (const auto& target : set) ok = ok || inside(piece, target);
      if (!ok) {
        bad.push_back(box);
        break;
      }
    }
  }
  return bad;
}

struct SquareReport {
  double beta = 0.0;
  double small_side = 0.0, large_side = 0.0;
  bool invariance_checked = false;  // only for beta <= sqrt 2
  std::vector<Box> y1_failures, y2_failures;
  int resolution = 0;
  int component_count = 0;
  std::optional<bool> lebesgue_equivalent;  // reported for beta >= 2
  /// Largest l1 distance between the first-coordinate marginal of a 2D
  /// stationary density and the 1D stationary density of U.
  double projection_l1 = 0.0;
  StationaryResult stationary2d;

  bool invariance_ok() const { return y1_failures.empty() && y2_failures.empty(); }
};

/// Marginal of a 2D cell vector on the first lattice coordinate.
inline std::vector<double> first_marginal(const std::vector<double>& values, int n) {
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < values.size(); ++i) out[i % n] += values[i];
  return out;
}

inline SquareReport square_case_study(double beta, int n = 96, int s = 4,
                                      const StationaryOptions& sopt = {}) {
  if (!(beta > 1.0)) throw invalid_input("beta must be > 1");
  SquareReport rep;
  rep.beta = beta;
  const TwoCycle t = two_cycle(beta);
  rep.small_side = t.small_side;
  rep.large_side = t.large_side;
  if (beta <= std::numbers::sqrt2) {
    rep.invariance_checked = true;
    const auto [y1, y2] = invariant_sets(beta);
    rep.y1_failures = invariance_failures(beta, y1);
    rep.y2_failures = invariance_failures(beta, y2);
  }
  rep.resolution = n;
  rep.stationary2d = stationary(build_ulam(symmetric_square_map(beta), n, s), sopt);
  rep.component_count = rep.stationary2d.components.count;
  if (beta >= 2.0) rep.lebesgue_equivalent = lebesgue_equivalence_check(rep.stationary2d);

  const auto one_d = stationary(build_ulam(symmetric_map_1d(beta), n, s), sopt);
  const auto& ref = one_d.densities.front().values;
  for (const auto& d : rep.stationary2d.densities) {
    const auto marg = first_marginal(d.values, n);
    double l1 = 0.0;
    for (int i = 0; i < n; ++i) l1 += std::abs(marg[i] - ref[i]);
    rep.projection_l1 = std::max(rep.projection_l1, l1);
  }
  return rep;
}

enum class Prediction { UniqueEquivalent, None };

struct ScheicherReport {
  double beta = 0.0, theta = 0.0, c = 0.0;
  Prediction prediction = Prediction::None;
  std::vector<TheoremVerdict> verdicts;
  int resolution = 0;
  int component_count = 0;
  bool lebesgue_equivalent = false;
  StationaryResult stationary;
  /// Numerical verdict matches the prediction (vacuous without a prediction).
  bool agrees() const {
    return prediction == Prediction::None || (component_count == 1 && lebesgue_equivalent);
  }
};

inline ScheicherReport scheicher_case_study(double beta, double theta, int n = 64, int s = 4,
                                            const StationaryOptions& sopt = {}) {
  ScheicherReport rep;
  rep.beta = beta;
  rep.theta = theta;
  rep.c = bounds::c_theta(theta);
  const RotBetaMap map = scheicher_map(beta, theta);
  rep.verdicts = applicable_theorems(map, Evidence::Unchecked, Evidence::Unchecked);
  for (const auto& v : rep.verdicts)
    if (v.theorem == "Corollary" && v.status == Status::Applies)
      rep.prediction = Prediction::UniqueEquivalent;
  rep.resolution = n;
  rep.stationary = stationary(build_ulam(map, n, s), sopt);
  rep.component_count = rep.stationary.components.count;
  rep.lebesgue_equivalent = lebesgue_equivalence_check(rep.stationary);
  return rep;
}

}  // namespace rotbeta::cases
