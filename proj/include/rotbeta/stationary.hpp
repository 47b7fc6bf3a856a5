#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "rotbeta/ulam.hpp"

namespace rotbeta {

struct ComponentLabels {
  int count = 0;
  /// 1..count for cells in a recurrent class, 0 for transient cells.
  std::vector<int> labels;
};

/// Strongly connected components of the support digraph (edge i -> j iff
/// P[i][j] > threshold), iterative Tarjan. Returns the component id per node
/// and the number of components.
inline std::vector<int> strong_components(const UlamOperator& op, double threshold, int& count) {
  const std::size_t n = op.cell_count();
  constexpr int kUnvisited = -1;
  std::vector<int> index(n, kUnvisited), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  // Call frames: node and position within its row.
  std::vector<std::pair<std::size_t, std::size_t>> frames;
  int next_index = 0;
  count = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.emplace_back(root, op.row_begin(root));
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < op.row_end(v)) {
        const std::size_t k = pos++;
        if (!(op.value(k) > threshold)) continue;
        const std::size_t w = op.col(k);
        if (index[w] == kUnvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.emplace_back(w, op.row_begin(w));
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const std::size_t done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const std::size_t parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = count;
        } while (w != done);
        ++count;
      }
    }
  }
  return comp;
}

/// Recurrent classes: strongly connected components with no edge leaving them.
/// Labels are assigned in order of each class's smallest cell index.
inline ComponentLabels ergodic_components(const UlamOperator& op, double support_threshold = 0.0) {
  if (support_threshold < 0.0) throw invalid_input("support threshold must be >= 0");
  int scc_count = 0;
  const std::vector<int> comp = strong_components(op, support_threshold, scc_count);
  std::vector<char> closed(scc_count, 1);
  for (std::size_t i = 0; i < op.cell_count(); ++i)
    for (std::size_t k = op.row_begin(i); k < op.row_end(i); ++k)
      if (op.value(k) > support_threshold && comp[op.col(k)] != comp[i]) closed[comp[i]] = 0;

  ComponentLabels out;
  out.labels.assign(op.cell_count(), 0);
  std::vector<int> relabel(scc_count, 0);
  for (std::size_t i = 0; i < op.cell_count(); ++i) {
    const int c = comp[i];
    if (!closed[c]) continue;
    if (relabel[c] == 0) relabel[c] = ++out.count;
    out.labels[i] = relabel[c];
  }
  return out;
}

/// Stationary vector of one recurrent class; zero outside the class.
struct StationaryDensity {
  int component = 0;
  std::vector<double> values;  // per-cell mass, sums to 1
  double residual = 0.0;       // |pi P - pi|_1
  int iterations = 0;
};

struct StationaryResult {
  ComponentLabels components;
  std::vector<StationaryDensity> densities;  // one per recurrent class, in label order
};

class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, StationaryDensity last)
      : Error(ErrorKind::Numerical, what), last_(std::move(last)) {}
  const StationaryDensity& last_iterate() const { return last_; }

 private:
  StationaryDensity last_;
};

struct StationaryOptions {
  double tolerance = 1e-10;
  int max_iterations = 100'000;
  double support_threshold = 0.0;
};

/// Power iteration from the uniform vector on each recurrent class. The lazy
/// update pi <- (pi + pi P) / 2 has the same fixed points and converges on
/// periodic classes too.
inline StationaryResult stationary(const UlamOperator& op, const StationaryOptions& opt = {}) {
  StationaryResult res;
  res.components = ergodic_components(op, opt.support_threshold);
  const auto& labels = res.components.labels;
  const std::size_t n = op.cell_count();

  for (int c = 1; c <= res.components.count; ++c) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
      if (labels[i] == c) members.push_back(i);
    // Local CSR restricted to the class (closed, so no mass leaves).
    std::vector<std::size_t> local(n, static_cast<std::size_t>(-1));
    for (std::size_t a = 0; a < members.size(); ++a) local[members[a]] = a;
    std::vector<std::size_t> ptr{0}, cols;
    std::vector<double> vals;
    for (std::size_t i : members) {
      for (std::size_t k = op.row_begin(i); k < op.row_end(i); ++k) {
        const std::size_t j = local[op.col(k)];
        if (j == static_cast<std::size_t>(-1)) continue;  // below threshold edges
        cols.push_back(j);
        vals.push_back(op.value(k));
      }
      ptr.push_back(cols.size());
    }

    const std::size_t sz = members.size();
    std::vector<double> pi(sz, 1.0 / static_cast<double>(sz)), next(sz);
    StationaryDensity d;
    d.component = c;
    double residual = std::numeric_limits<double>::infinity();
    int it = 0;
    for (; it <= opt.max_iterations; ++it) {
      std::fill(next.begin(), next.end(), 0.0);
      for (std::size_t a = 0; a < sz; ++a)
        for (std::size_t k = ptr[a]; k < ptr[a + 1]; ++k) next[cols[k]] += pi[a] * vals[k];
      residual = 0.0;
      double total = 0.0;
      for (std::size_t a = 0; a < sz; ++a) {
        residual += std::abs(next[a] - pi[a]);
        next[a] = 0.5 * (next[a] + pi[a]);
        total += next[a];
      }
      if (residual <= opt.tolerance) break;
      for (std::size_t a = 0; a < sz; ++a) pi[a] = next[a] / total;
    }
    d.values.assign(n, 0.0);
    for (std::size_t a = 0; a < sz; ++a) d.values[members[a]] = pi[a];
    d.residual = residual;
    d.iterations = it;
    if (residual > opt.tolerance)
      throw NonConvergence("power iteration did not converge for component " + std::to_string(c),
                           std::move(d));
    res.densities.push_back(std::move(d));
  }
  return res;
}

/// Numerical proxy for "unique ACIM equivalent to Lebesgue": a single
/// recurrent class and every cell mass at least delta (default 1e-3 / N^m).
inline bool lebesgue_equivalence_check(const StationaryResult& res, double delta = -1.0) {
  if (res.densities.size() != 1) return false;
  const auto& v = res.densities.front().values;
  if (delta < 0.0) delta = 1e-3 / static_cast<double>(v.size());
  for (double x : v)
    if (x < delta) return false;
  return true;
}

}  // namespace rotbeta
