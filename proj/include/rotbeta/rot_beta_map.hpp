#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "rotbeta/isometry.hpp"
#include "rotbeta/lattice_domain.hpp"

namespace rotbeta {

/// Lattice coordinates within this distance below an integer are rounded up
/// when selecting a digit.
inline constexpr double kDigitSnap = 1e-12;

struct StepResult {
  Vec image;
  Vec digit;         // lattice vector d
  IVec digit_coords; // d in the generator basis
  bool boundary_fragile = false;
};

/// Integer part and fractional remainder of lattice coordinates under the
/// digit snap rule. Returns true when a coordinate was snapped.
inline bool split_coords(const Vec& c, IVec& k, Vec& frac) {
  bool snapped = false;
  k.resize(c.size());
  frac.resize(c.size());
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    double f = std::floor(c(i));
    double r = c(i) - f;
    if (r > 1.0 - kDigitSnap) {
      f += 1.0;
      r = 0.0;
      snapped = true;
    }
    k(i) = static_cast<long long>(f);
    frac(i) = std::clamp(r, 0.0, std::nextafter(1.0, 0.0));
  }
  return snapped;
}

/// T(z) = beta M z - d(z), with d(z) the lattice vector bringing beta M z back
/// into the fundamental domain.
class RotBetaMap {
 public:
  RotBetaMap(double beta, Isometry m, LatticeDomain domain)
      : beta_(beta), m_(std::move(m)), domain_(std::move(domain)) {
    if (!(beta_ > 1.0) || !std::isfinite(beta_)) throw invalid_input("beta must be a finite number > 1");
    if (m_.dim() != domain_.dim()) throw invalid_input("isometry and domain dimensions differ");
    const Mat& b = domain_.basis();
    const Mat& bi = domain_.basis_inverse();
    coord_linear_ = beta_ * bi * m_.matrix() * b;
    coord_shift_ = bi * (beta_ * m_.matrix() * domain_.xi() - domain_.xi());
  }

  double beta() const { return beta_; }
  const Isometry& isometry() const { return m_; }
  const LatticeDomain& domain() const { return domain_; }
  int dim() const { return domain_.dim(); }

  /// One application of T. Rejects points outside X (with 1e-9 slack in
  /// lattice coordinates for values produced by earlier rounding).
  StepResult step(const Vec& z) const {
    if (z.size() != dim() || !domain_.contains_closed(z, 1e-9))
      throw invalid_input("point not in domain");
    const Vec y = beta_ * (m_.matrix() * z);
    const Vec c = domain_.coords(y);
    StepResult r;
    Vec frac;
    r.boundary_fragile = split_coords(c, r.digit_coords, frac);
    r.digit = domain_.basis() * r.digit_coords.cast<double>();
    r.image = domain_.point(frac);
    return r;
  }

  /// T expressed in lattice coordinates c in [0,1)^m; returns the digit
  /// coordinates and overwrites c with the image coordinates.
  IVec step_coords(Vec& c) const {
    const Vec next = coord_linear_ * c + coord_shift_;
    IVec k;
    Vec frac;
    split_coords(next, k, frac);
    c = frac;
    return k;
  }

  std::vector<StepResult> orbit(const Vec& z, int n) const {
    std::vector<StepResult> out;
    out.reserve(n);
    Vec cur = z;
    for (int i = 0; i < n; ++i) {
      out.push_back(step(cur));
      cur = out.back().image;
    }
    return out;
  }

 private:
  double beta_;
  Isometry m_;
  LatticeDomain domain_;
  Mat coord_linear_;
  Vec coord_shift_;
};

/// Digits d_1..d_n of z = sum_i M^{-i} d_i / beta^i + M^{-n} T^n(z) / beta^n.
struct DigitExpansion {
  Vec z;
  std::vector<Vec> digits;
  std::vector<IVec> digit_coords;
  Vec remainder;  // T^n(z)
  bool boundary_fragile = false;

  /// Partial sum of the first n terms.
  Vec reconstruct(const RotBetaMap& map, int n) const {
    const Mat minv = map.isometry().inverse();
    Vec sum = Vec::Zero(z.size());
    Mat power = Mat::Identity(z.size(), z.size());
    double scale = 1.0;
    for (int i = 0; i < n; ++i) {
      power = minv * power;
      scale /= map.beta();
      sum += scale * (power * digits[i]);
    }
    return sum;
  }

  /// Upper bound on |z - reconstruct(n)|.
  static double error_bound(const RotBetaMap& map, int n) {
    return map.domain().max_norm() / std::pow(map.beta(), n);
  }
};

inline DigitExpansion expand(const RotBetaMap& map, const Vec& z, int n) {
  if (n < 1) throw invalid_input("expansion length must be >= 1");
  DigitExpansion e;
  e.z = z;
  Vec cur = z;
  for (const auto& s : map.orbit(z, n)) {
    e.digits.push_back(s.digit);
    e.digit_coords.push_back(s.digit_coords);
    e.boundary_fragile = e.boundary_fragile || s.boundary_fragile;
    cur = s.image;
  }
  e.remainder = cur;
  return e;
}

}  // namespace rotbeta
