#pragma once

#include <algorithm>
#include <cmath>
#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <tuple>
#include <vector>

#include "rotbeta/rot_beta_map.hpp"

namespace rotbeta {

/// T^{-1}(z) = { M^{-1}(z + d) / beta : d in L } intersected with X.
/// Candidate digits range over the lattice box around beta M(X) - z, padded by
/// one cell. Coordinates within 1e-12 of an integer are snapped onto it before
/// the half-open membership test.
inline std::vector<Vec> preimages(const RotBetaMap& map, const Vec& z) {
  const LatticeDomain& dom = map.domain();
  const int m = dom.dim();
  if (z.size() != m || !dom.contains_closed(z, 1e-9)) throw invalid_input("point not in domain");
  const Mat& mat = map.isometry().matrix();
  const Mat minv = map.isometry().inverse();

  Vec lo = Vec::Constant(m, std::numeric_limits<double>::infinity());
  Vec hi = -lo;
  for (const auto& v : dom.vertices()) {
    const Vec k = dom.basis_inverse() * (map.beta() * (mat * v) - z);
    lo = lo.cwiseMin(k);
    hi = hi.cwiseMax(k);
  }
  std::vector<long long> klo(m), span(m);
  long long count = 1;
  for (int i = 0; i < m; ++i) {
    klo[i] = static_cast<long long>(std::floor(lo(i))) - 1;
    span[i] = static_cast<long long>(std::ceil(hi(i))) + 1 - klo[i] + 1;
    count *= span[i];
  }

  std::vector<Vec> out;
  for (long long idx = 0; idx < count; ++idx) {
    Vec k(m);
    long long rest = idx;
    for (int i = 0; i < m; ++i) {
      k(i) = static_cast<double>(klo[i] + rest % span[i]);
      rest /= span[i];
    }
    Vec x = minv * (z + dom.basis() * k) / map.beta();
    Vec c = dom.coords(x);
    bool snapped = false, inside = true;
    for (int i = 0; i < m; ++i) {
      const double r = std::round(c(i));
      if (c(i) != r && std::abs(c(i) - r) < kDigitSnap) {
        c(i) = r;
        snapped = true;
      }
      if (!(c(i) >= 0.0 && c(i) < 1.0)) inside = false;
    }
    if (!inside) continue;
    out.push_back(snapped ? dom.point(c) : x);
  }
  return out;
}

/// Levels T^{-i}(z), i = 0..depth.
struct PreimageTree {
  std::vector<std::vector<Vec>> levels;
  /// beta^(m depth) exceeded the node budget when the tree was requested.
  bool budget_warning = false;

  std::size_t total_nodes() const {
    std::size_t n = 0;
    for (const auto& l : levels) n += l.size();
    return n;
  }
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, PreimageTree partial)
      : Error(ErrorKind::Numerical, what), partial_(std::move(partial)) {}
  const PreimageTree& partial() const { return partial_; }

 private:
  PreimageTree partial_;
};

/// Sorts points and drops those agreeing with a neighbour at `resolution`.
inline void dedupe(std::vector<Vec>& pts, double resolution = 1e-12) {
  auto key = [resolution](const Vec& v) {
    std::array<std::int64_t, kMaxDim> k{};
    for (Eigen::Index i = 0; i < v.size(); ++i) k[i] = std::llround(v(i) / resolution);
    return k;
  };
  std::vector<std::pair<std::array<std::int64_t, kMaxDim>, std::size_t>> keyed;
  keyed.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) keyed.emplace_back(key(pts[i]), i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<Vec> out;
  out.reserve(pts.size());
  for (std::size_t i = 0; i < keyed.size(); ++i)
    if (i == 0 || keyed[i].first != keyed[i - 1].first) out.push_back(pts[keyed[i].second]);
  pts = std::move(out);
}

/// Deduplicated union of T^{-1}(p) over the given points.
inline std::vector<Vec> preimage_level(const RotBetaMap& map, const std::vector<Vec>& parents,
                                       std::size_t limit = std::numeric_limits<std::size_t>::max()) {
  std::vector<Vec> next;
  for (const auto& p : parents) {
    for (auto& x : preimages(map, p)) next.push_back(std::move(x));
    if (next.size() > limit) break;
  }
  dedupe(next);
  return next;
}

inline constexpr std::size_t kDefaultNodeBudget = 10'000'000;

inline PreimageTree preimage_tree(const RotBetaMap& map, const Vec& z, int depth,
                                  std::size_t node_budget = kDefaultNodeBudget) {
  if (depth < 1) throw invalid_input("tree depth must be >= 1");
  PreimageTree tree;
  tree.budget_warning =
      std::pow(map.beta(), map.dim() * depth) > static_cast<double>(node_budget);
  tree.levels.push_back({z});
  std::size_t total = 1;
  for (int d = 1; d <= depth; ++d) {
    std::vector<Vec> next = preimage_level(map, tree.levels.back(), node_budget - total);
    if (total + next.size() > node_budget)
      throw BudgetExceeded("preimage tree exceeded node budget at level " + std::to_string(d),
                           tree);
    total += next.size();
    tree.levels.push_back(std::move(next));
  }
  return tree;
}

}  // namespace rotbeta
