#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "rotbeta/lattice_domain.hpp"
#include "rotbeta/lipschitz.hpp"
#include "rotbeta/point_index.hpp"

namespace rotbeta {

/// Minimal width of a strip containing the closed parallelotope. The width
/// function u -> sum_i |<u, eta_i>| is minimized on the sphere at a facet
/// normal, giving min_i 1 / |row_i(B^-1)|.
inline double width(const LatticeDomain& domain) {
  double w = std::numeric_limits<double>::infinity();
  for (int i = 0; i < domain.dim(); ++i) w = std::min(w, domain.facet_height(i));
  return w;
}

/// Distance from x (in the closed parallelotope) to its complement.
inline double dist_to_domain_complement(const LatticeDomain& domain, const Vec& x) {
  if (!domain.contains_closed(x)) throw invalid_input("point not in domain");
  const Vec c = domain.coords(x);
  double d = std::numeric_limits<double>::infinity();
  for (int i = 0; i < domain.dim(); ++i) {
    const double t = std::clamp(std::min(c(i), 1.0 - c(i)), 0.0, 0.5);
    d = std::min(d, t * domain.facet_height(i));
  }
  return d;
}

struct SearchOptions {
  /// Absolute radius tolerance; <= 0 means 1e-4 * diameter of the domain.
  double tolerance = 0.0;
  int coarse_cells = 0;
};

inline MaximizeOptions resolve(const SearchOptions& o, const LatticeDomain& domain) {
  MaximizeOptions m;
  m.tolerance = o.tolerance > 0.0 ? o.tolerance : 1e-4 * domain.diameter();
  m.coarse_cells = o.coarse_cells;
  return m;
}

struct Ball {
  Vec center;
  double radius = 0.0;
  double error_bound = 0.0;
};

/// Every translate p + d (d in L) of the given points that lies within
/// `reach` of the closed parallelotope.
inline std::vector<Vec> periodize(const LatticeDomain& domain, const std::vector<Vec>& points,
                                  double reach) {
  const int m = domain.dim();
  std::vector<double> pad(m);
  for (int i = 0; i < m; ++i) pad[i] = reach / domain.facet_height(i);
  std::vector<Vec> out;
  for (const auto& p : points) {
    const Vec c = domain.coords(p);
    std::vector<long long> lo(m), hi(m);
    long long count = 1;
    for (int i = 0; i < m; ++i) {
      lo[i] = static_cast<long long>(std::floor(-c(i) - pad[i]));
      hi[i] = static_cast<long long>(std::ceil(1.0 - c(i) + pad[i]));
      count *= hi[i] - lo[i] + 1;
    }
    for (long long idx = 0; idx < count; ++idx) {
      Vec k(m);
      long long rest = idx;
      bool near = true;
      for (int i = 0; i < m; ++i) {
        const long long span = hi[i] - lo[i] + 1;
        k(i) = static_cast<double>(lo[i] + rest % span);
        rest /= span;
        const double ci = c(i) + k(i);
        if (ci < -pad[i] || ci > 1.0 + pad[i]) near = false;
      }
      if (near) out.push_back(p + domain.basis() * k);
    }
  }
  return out;
}

/// Covering radius of P + L: the supremum over space of the distance to the
/// nearest translate of a point of P. Returned as a Ball whose center is the
/// farthest point found (inside the closed domain).
inline Ball covering_radius(const std::vector<Vec>& points, const LatticeDomain& domain,
                            const SearchOptions& opt = {}) {
  if (points.empty()) throw invalid_input("empty point set");
  // Any point of space lies within half the diameter of a lattice point
  // translate of each p, so farther translates never matter.
  const double reach = 0.5 * domain.diameter() + 1e-9;
  const PointIndex index(periodize(domain, points, reach));
  const auto res = maximize_lipschitz(
      domain.xi(), domain.basis(), [&](const Vec& x) { return index.nearest_distance(x); },
      resolve(opt, domain));
  return Ball{res.argmax, res.value, res.error_bound};
}

/// Largest open ball inside the closed parallelotope avoiding all obstacles.
inline Ball largest_empty_ball(const LatticeDomain& domain, const std::vector<Vec>& obstacles,
                               const SearchOptions& opt = {}) {
  const PointIndex index(obstacles);
  auto f = [&](const Vec& x) {
    return std::min(index.nearest_distance(x), dist_to_domain_complement(domain, x));
  };
  const auto res = maximize_lipschitz(domain.xi(), domain.basis(), f, resolve(opt, domain));
  return Ball{res.argmax, std::max(0.0, res.value), res.error_bound};
}

}  // namespace rotbeta
