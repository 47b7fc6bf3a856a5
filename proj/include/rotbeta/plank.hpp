#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rotbeta/lattice_domain.hpp"
#include "rotbeta/lipschitz.hpp"

namespace rotbeta::plank {

/// Line { x : <normal, x> = offset } in the plane, crossing the open unit disk.
struct Line {
  double angle = 0.0;  // direction of the normal
  double offset = 0.0;

  Vec normal() const { return make_vec({std::cos(angle), std::sin(angle)}); }
  double distance(const Vec& x) const {
    return std::abs(std::cos(angle) * x(0) + std::sin(angle) * x(1) - offset);
  }
};

using LineConfig = std::vector<Line>;

inline void validate(const LineConfig& config) {
  for (const auto& l : config)
    if (!(std::abs(l.offset) < 1.0) || !std::isfinite(l.angle))
      throw invalid_input("every line must cross the open unit disk (|offset| < 1)");
}

struct Inscribed {
  double radius = 0.0;
  Vec center;
  double error_bound = 0.0;
};

/// Square [-1,1]^2 as an origin/frame pair for the Lipschitz search.
inline std::pair<Vec, Mat> disk_box() {
  Mat frame = 2.0 * Mat::Identity(2, 2);
  return {make_vec({-1.0, -1.0}), frame};
}

/// Largest open ball inside the unit disk crossing none of the lines:
/// maximizes min(1 - |x|, min_i dist(x, line_i)).
inline Inscribed max_inscribed_radius(const LineConfig& config, double tolerance = 1e-5,
                                      int coarse_cells = 32) {
  validate(config);
  auto f = [&](const Vec& x) {
    double v = 1.0 - x.norm();
    for (const auto& l : config) v = std::min(v, l.distance(x));
    return v;
  };
  MaximizeOptions opt;
  opt.tolerance = tolerance;
  opt.coarse_cells = coarse_cells;
  const auto [origin, frame] = disk_box();
  const auto r = maximize_lipschitz(origin, frame, f, opt);
  return Inscribed{r.value, r.argmax, r.error_bound};
}

/// k parallel lines sharing a normal, splitting the diameter into k + 1 equal parts.
inline LineConfig equally_spaced_parallel(int k, double angle = 0.0) {
  LineConfig c;
  for (int j = 1; j <= k; ++j) c.push_back(Line{angle, -1.0 + 2.0 * j / (k + 1)});
  return c;
}

inline bool all_parallel(const LineConfig& c, double tol = 1e-9) {
  for (std::size_t i = 1; i < c.size(); ++i)
    if (std::abs(std::sin(c[i].angle - c[0].angle)) > tol) return false;
  return true;
}

struct Violation {
  LineConfig config;
  double radius = 0.0;
  double bound = 0.0;
  std::string reason;
};

struct LemmaCutReport {
  int k = 0;
  int trials = 0;
  double bound = 0.0;  // 1/(k+1)
  double tolerance = 0.0;
  double min_radius = 0.0;
  LineConfig min_config;
  double min_non_parallel_radius = std::numeric_limits<double>::infinity();
  double parallel_radius = 0.0;
  std::vector<Violation> violations;
  bool passed() const { return violations.empty(); }
};

/// Random configurations (normal angle uniform on the circle, offset uniform in
/// (-1,1)) must all admit an inscribed ball of radius 1/(k+1); non-parallel ones
/// must beat it by more than the tolerance, and equal parallel spacing must hit it.
inline LemmaCutReport verify_lemma_cut(int k, int trials, std::uint64_t seed,
                                       double tolerance = 2e-5) {
  if (k < 1 || k > 4) throw invalid_input("k must be in 1..4");
  if (trials < 1) throw invalid_input("trials must be >= 1");
  LemmaCutReport rep;
  rep.k = k;
  rep.trials = trials;
  rep.bound = 1.0 / (k + 1);
  rep.tolerance = tolerance;
  rep.min_radius = std::numeric_limits<double>::infinity();
  const double search_tol = tolerance / 4.0;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> offset(-1.0, 1.0);
  for (int t = 0; t < trials; ++t) {
    LineConfig c(k);
    for (auto& l : c) {
      l.angle = angle(rng);
      do l.offset = offset(rng);
      while (l.offset == -1.0);
    }
    const double r = max_inscribed_radius(c, search_tol).radius;
    if (r < rep.min_radius) {
      rep.min_radius = r;
      rep.min_config = c;
    }
    if (r < rep.bound - tolerance)
      rep.violations.push_back({c, r, rep.bound, "radius below 1/(k+1)"});
    if (k >= 2 && !all_parallel(c)) {
      rep.min_non_parallel_radius = std::min(rep.min_non_parallel_radius, r);
      if (!(r > rep.bound + tolerance))
        rep.violations.push_back({c, r, rep.bound, "non-parallel configuration not strictly above 1/(k+1)"});
    }
  }
  const LineConfig par = equally_spaced_parallel(k);
  rep.parallel_radius = max_inscribed_radius(par, search_tol).radius;
  if (std::abs(rep.parallel_radius - rep.bound) > tolerance)
    rep.violations.push_back({par, rep.parallel_radius, rep.bound,
                              "equally spaced parallel lines do not attain 1/(k+1)"});
  return rep;
}

struct ParallelSweep {
  std::vector<double> offsets;  // minimizing configuration
  double radius = 0.0;
};

/// Minimizes the inscribed radius over k parallel lines whose offsets range
/// over an evenly spaced grid of `steps` interior values.
inline ParallelSweep sweep_parallel_worst_case(int k, int steps, double tolerance = 1e-5) {
  if (k < 1 || k > 3) throw invalid_input("sweep supports k in 1..3");
  std::vector<double> grid(steps);
  for (int i = 0; i < steps; ++i) grid[i] = -1.0 + 2.0 * (i + 1) / (steps + 1);
  ParallelSweep best;
  best.radius = std::numeric_limits<double>::infinity();
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    LineConfig c;
    for (int i : idx) c.push_back(Line{0.0, grid[i]});
    const double r = max_inscribed_radius(c, tolerance, 16).radius;
    if (r < best.radius) {
      best.radius = r;
      best.offsets.clear();
      for (int i : idx) best.offsets.push_back(grid[i]);
    }
    // next strictly increasing index tuple
    int p = k - 1;
    while (p >= 0 && idx[p] == steps - k + p) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
  return best;
}

struct BangResult {
  bool covered = false;
  std::optional<Vec> witness;
  double total_width = 0.0;
  /// Total width below the disk width, so an uncovered point has to exist.
  bool witness_required() const { return total_width < 2.0; }
  /// False only when a witness was required but none was found.
  bool consistent() const { return !(witness_required() && covered); }
};

inline constexpr double kCoverTolerance = 1e-6;

/// Looks for a point of the open unit disk outside every (closed) strip.
/// Random probing first, then a certified Lipschitz search of
/// min(1 - |x|, min_i clearance_i(x)); `covered` means no point clears every
/// strip by more than kCoverTolerance.
inline BangResult bang_cover_check(const std::vector<Strip>& strips, std::uint64_t seed) {
  BangResult res;
  for (const auto& s : strips) {
    if (s.normal.size() != 2) throw invalid_input("strips must be planar");
    if (!(std::abs(s.offset) < 1.0 + s.half_width)) throw invalid_input("strip misses the unit disk");
    res.total_width += s.width();
  }
  auto g = [&](const Vec& x) {
    double v = 1.0 - x.norm();
    for (const auto& s : strips) v = std::min(v, s.clearance(x));
    return v;
  };
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 4096; ++i) {
    const Vec x = make_vec({u(rng), u(rng)});
    if (g(x) > 0.0) {
      res.witness = x;
      return res;
    }
  }
  MaximizeOptions opt;
  opt.tolerance = kCoverTolerance;
  opt.coarse_cells = 64;
  opt.stop_above = 0.0;
  const auto [origin, frame] = disk_box();
  const auto r = maximize_lipschitz(origin, frame, g, opt);
  if (r.value > 0.0) res.witness = r.argmax;
  else res.covered = true;
  return res;
}

/// Between one and four strips with total width drawn uniformly from
/// (0, max_total]; normal angles uniform, axes crossing the open disk.
inline std::vector<Strip> random_strips(std::mt19937_64& rng, double max_total) {
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int k = count(rng);
  const double total = max_total * (1.0 - unit(rng));
  std::vector<double> share(k);
  double sum = 0.0;
  for (auto& w : share) sum += (w = 1.0 - unit(rng));
  std::vector<Strip> strips;
  for (int i = 0; i < k; ++i) {
    const double angle = 2.0 * std::numbers::pi * unit(rng);
    const double offset = 2.0 * unit(rng) - 1.0;
    strips.push_back(Strip::planar(angle, offset, 0.5 * total * share[i] / sum));
  }
  return strips;
}

struct BangSweep {
  int sets = 0;
  int witnesses = 0;
  std::vector<std::vector<Strip>> failures;  // witness required but not found
};

inline BangSweep verify_bang(int sets, std::uint64_t seed, double max_total = 1.9) {
  if (sets < 1) throw invalid_input("number of strip sets must be >= 1");
  if (!(max_total > 0.0 && max_total < 2.0)) throw invalid_input("total width must lie in (0, 2)");
  BangSweep sweep;
  sweep.sets = sets;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < sets; ++i) {
    auto strips = random_strips(rng, max_total);
    const BangResult r = bang_cover_check(strips, seed + static_cast<std::uint64_t>(i));
    const bool valid = r.witness && std::all_of(strips.begin(), strips.end(), [&](const Strip& s) {
                         return s.clearance(*r.witness) > 0.0;
                       }) && r.witness->norm() < 1.0;
    if (valid) ++sweep.witnesses;
    else sweep.failures.push_back(std::move(strips));
  }
  return sweep;
}

}  // namespace rotbeta::plank
