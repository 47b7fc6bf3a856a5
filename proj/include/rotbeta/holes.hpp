#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "rotbeta/geometry.hpp"
#include "rotbeta/preimages.hpp"

namespace rotbeta {

struct HoleReport {
  int level = 0;
  Vec center;
  double radius = 0.0;
  double error_bound = 0.0;
  bool cumulative = true;
  std::size_t preimage_count = 0;  // |T^{-n}(z)|
  /// radius / previous radius; NaN at level 0.
  double ratio = std::numeric_limits<double>::quiet_NaN();
};

/// Largest hole at every level n = 0..depth. Cumulative mode avoids the union
/// of T^{-i}(z), 1 <= i <= n (level 0 has no obstacles); single-level mode
/// avoids T^{-n}(z) alone (level 0 avoids z).
inline std::vector<HoleReport> hole_radii(const RotBetaMap& map, const Vec& z, int depth,
                                          bool cumulative = true, const SearchOptions& opt = {},
                                          std::size_t node_budget = kDefaultNodeBudget) {
  const PreimageTree tree = preimage_tree(map, z, depth, node_budget);
  std::vector<HoleReport> out;
  std::vector<Vec> obstacles;
  for (int n = 0; n <= depth; ++n) {
    const auto& level = tree.levels[n];
    if (cumulative) {
      if (n > 0) obstacles.insert(obstacles.end(), level.begin(), level.end());
    } else {
      obstacles = level;
    }
    const Ball ball = largest_empty_ball(map.domain(), obstacles, opt);
    HoleReport r;
    r.level = n;
    r.center = ball.center;
    r.radius = ball.radius;
    r.error_bound = ball.error_bound;
    r.cumulative = cumulative;
    r.preimage_count = level.size();
    if (n > 0) r.ratio = r.radius / out.back().radius;
    out.push_back(std::move(r));
  }
  return out;
}

struct PropertySReport {
  std::optional<int> satisfied_at;
  /// g_n = beta w(X) - 2 r(T^{-n}(z) + L), n = 0..n_max (estimated radius).
  std::vector<double> margins;
  /// Certified bound on the radius error at each level; g_n is exact to 2x this.
  std::vector<double> error_bounds;
};

/// Evidence for property (S) at a single z: the first level n whose margin
/// exceeds twice the covering-radius error bound, i.e. 2 r <= beta w(X) holds
/// after accounting for the search error.
inline PropertySReport check_property_s(const RotBetaMap& map, const Vec& z, int n_max,
                                        const SearchOptions& opt = {},
                                        std::size_t node_budget = kDefaultNodeBudget) {
  if (n_max < 0) throw invalid_input("n_max must be >= 0");
  if (!map.domain().contains_closed(z, 1e-9)) throw invalid_input("point not in domain");
  const double target = map.beta() * width(map.domain());
  PropertySReport rep;
  std::vector<Vec> level{z};
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) {
      level = preimage_level(map, level, node_budget);
      if (level.size() > node_budget)
        throw Error(ErrorKind::Numerical, "property (S) check exceeded node budget at level " +
                                              std::to_string(n));
      if (level.empty()) {
        // T^{-n}(z) empty: the covering radius is infinite and so is every later level.
        rep.margins.push_back(-std::numeric_limits<double>::infinity());
        rep.error_bounds.push_back(0.0);
        break;
      }
    }
    const Ball cr = covering_radius(level, map.domain(), opt);
    const double g = target - 2.0 * cr.radius;
    rep.margins.push_back(g);
    rep.error_bounds.push_back(cr.error_bound);
    if (!rep.satisfied_at && g >= 2.0 * cr.error_bound) {
      rep.satisfied_at = n;
      break;
    }
  }
  return rep;
}

/// beta M X inside the union of X + j eta over j in Z, for eta = k eta_i.
/// The union is a slab (|k| = 1) or a row of separated cells (|k| > 1); both
/// are decided from the vertices of the closed image parallelotope.
inline bool check_theorem2_condition(const RotBetaMap& map, const Vec& eta) {
  const LatticeDomain& dom = map.domain();
  const int m = dom.dim();
  if (eta.size() != m) throw invalid_input("eta has wrong dimension");
  const Vec kc = dom.basis_inverse() * eta;
  IVec k(m);
  for (int i = 0; i < m; ++i) {
    const double r = std::round(kc(i));
    if (std::abs(kc(i) - r) > 1e-9) throw invalid_input("eta is not a lattice vector");
    k(i) = static_cast<long long>(r);
  }
  int axis = -1;
  for (int i = 0; i < m; ++i) {
    if (k(i) == 0) continue;
    if (axis >= 0)
      throw invalid_input("eta must be an integer multiple of a single generator");
    axis = i;
  }
  if (axis < 0) throw invalid_input("eta must be nonzero");
  const long long step = std::llabs(k(axis));

  constexpr double tol = 1e-9;
  std::vector<Vec> image;
  for (const auto& v : dom.vertices())
    image.push_back(dom.coords(map.beta() * (map.isometry().matrix() * v)));
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto& c : image) {
    for (int i = 0; i < m; ++i)
      if (i != axis && (c(i) < -tol || c(i) > 1.0 + tol)) return false;
    lo = std::min(lo, c(axis));
    hi = std::max(hi, c(axis));
  }
  if (step == 1) return true;
  // Cells occupy [j s, j s + 1] along the axis; a convex image must fit in one.
  const double j = std::floor((lo + tol) / static_cast<double>(step));
  return hi <= j * static_cast<double>(step) + 1.0 + tol;
}

}  // namespace rotbeta
