#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

#include "rotbeta/core.hpp"

namespace rotbeta {

struct MaximizeOptions {
  /// Cells per axis of the initial grid; 0 picks a dimension-dependent default.
  int coarse_cells = 0;
  /// Stop once no unexplored cell can beat the incumbent by more than this.
  double tolerance = 1e-4;
  std::size_t max_evaluations = 200'000'000;
  /// Return as soon as some evaluated value exceeds this threshold.
  double stop_above = std::numeric_limits<double>::infinity();
};

struct MaximizeResult {
  Vec argmax;
  double value = -std::numeric_limits<double>::infinity();
  /// Certified: the true supremum lies in [value, value + error_bound].
  double error_bound = 0.0;
  std::size_t evaluations = 0;
};

inline int default_coarse_cells(int m) { return m <= 2 ? 200 : 40; }

/// Branch-and-bound maximization of a 1-Lipschitz function over the closed
/// parallelotope { origin + frame * u : u in [0,1]^m }. A coarse grid seeds a
/// priority queue keyed on the Lipschitz upper bound value + circumradius;
/// cells are bisected along every axis until the bound is within tolerance.
/// Ties on value resolve to the lexicographically smallest point.
template <class F>
MaximizeResult maximize_lipschitz(const Vec& origin, const Mat& frame, F&& f,
                                  const MaximizeOptions& opt = {}) {
  const int m = static_cast<int>(frame.rows());
  const int g = opt.coarse_cells > 0 ? opt.coarse_cells : default_coarse_cells(m);
  const double h0 = 1.0 / g;

  // Circumradius of a level-0 cell: half its longest diagonal.
  double r0 = 0.0;
  for (int mask = 0; mask < (1 << m); ++mask) {
    Vec s(m);
    for (int i = 0; i < m; ++i) s(i) = ((mask >> i) & 1) ? h0 : -h0;
    r0 = std::max(r0, 0.5 * (frame * s).norm());
  }

  struct Cell {
    double upper;
    double value;
    int level;
    Vec lo;
    bool operator<(const Cell& o) const { return upper < o.upper; }
  };

  MaximizeResult res;
  double discarded_upper = -std::numeric_limits<double>::infinity();
  std::priority_queue<Cell> queue;

  auto evaluate = [&](const Vec& lo, int level) {
    const double h = h0 / static_cast<double>(1LL << level);
    const Vec x = origin + frame * (lo.array() + 0.5 * h).matrix();
    const double v = f(x);
    ++res.evaluations;
    if (v > res.value || (v == res.value && lex_less(x, res.argmax))) {
      res.value = v;
      res.argmax = x;
    }
    const double upper = v + r0 / static_cast<double>(1LL << level);
    if (upper > res.value + opt.tolerance) {
      queue.push(Cell{upper, v, level, lo});
    } else {
      discarded_upper = std::max(discarded_upper, upper);
    }
  };

  long long total = 1;
  for (int i = 0; i < m; ++i) total *= g;
  for (long long idx = 0; idx < total && !(res.value > opt.stop_above); ++idx) {
    Vec lo(m);
    long long rest = idx;
    for (int i = 0; i < m; ++i) {
      lo(i) = static_cast<double>(rest % g) * h0;
      rest /= g;
    }
    evaluate(lo, 0);
  }

  while (!queue.empty()) {
    if (res.value > opt.stop_above) break;
    const Cell top = queue.top();
    if (top.upper <= res.value + opt.tolerance) break;
    queue.pop();
    if (res.evaluations > opt.max_evaluations)
      throw Error(ErrorKind::Numerical, "Lipschitz search exceeded its evaluation budget");
    if (top.level >= 60) {
      discarded_upper = std::max(discarded_upper, top.upper);
      continue;
    }
    const double half = h0 / static_cast<double>(1LL << (top.level + 1));
    for (int mask = 0; mask < (1 << m); ++mask) {
      Vec lo = top.lo;
      for (int i = 0; i < m; ++i)
        if ((mask >> i) & 1) lo(i) += half;
      evaluate(lo, top.level + 1);
    }
  }
  double remaining = queue.empty() ? -std::numeric_limits<double>::infinity() : queue.top().upper;
  res.error_bound = std::max(0.0, std::max(remaining, discarded_upper) - res.value);
  // An early stop leaves part of the domain unexplored.
  if (res.value > opt.stop_above) res.error_bound = std::numeric_limits<double>::infinity();
  return res;
}

}  // namespace rotbeta
