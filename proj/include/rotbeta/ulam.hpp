#pragma once

#include <algorithm>
#include <cmath>
#include <ostream>
#include <vector>

#include "rotbeta/rot_beta_map.hpp"

namespace rotbeta {

/// Row-stochastic Ulam matrix on the uniform N^m grid of lattice-coordinate
/// space, stored in compressed sparse rows. Cell index i = i_1 + N i_2 + N^2 i_3.
class UlamOperator {
 public:
  UlamOperator(int m, int n, int samples) : m_(m), n_(n), samples_(samples) {
    std::size_t c = 1;
    for (int i = 0; i < m; ++i) c *= static_cast<std::size_t>(n);
    cells_ = c;
    row_ptr_.assign(1, 0);
  }

  int dim() const { return m_; }
  int resolution() const { return n_; }
  int samples() const { return samples_; }
  std::size_t cell_count() const { return cells_; }
  std::size_t nonzeros() const { return cols_.size(); }

  std::size_t row_begin(std::size_t i) const { return row_ptr_[i]; }
  std::size_t row_end(std::size_t i) const { return row_ptr_[i + 1]; }
  std::size_t col(std::size_t k) const { return cols_[k]; }
  double value(std::size_t k) const { return vals_[k]; }

  /// Dense lookup of P[i][j]; linear in the row length.
  double at(std::size_t i, std::size_t j) const {
    for (std::size_t k = row_begin(i); k < row_end(i); ++k)
      if (cols_[k] == j) return vals_[k];
    return 0.0;
  }

  double row_sum(std::size_t i) const {
    double s = 0.0;
    for (std::size_t k = row_begin(i); k < row_end(i); ++k) s += vals_[k];
    return s;
  }

  /// Integer grid position of a cell.
  IVec cell_index(std::size_t i) const {
    IVec idx(m_);
    for (int a = 0; a < m_; ++a) {
      idx(a) = static_cast<long long>(i % n_);
      i /= n_;
    }
    return idx;
  }

  /// Lattice coordinates of the cell center.
  Vec cell_center_coords(std::size_t i) const {
    return (cell_index(i).cast<double>().array() + 0.5).matrix() / n_;
  }

  /// Cell containing lattice coordinates c in [0,1)^m.
  std::size_t cell_of(const Vec& c) const {
    std::size_t idx = 0, stride = 1;
    for (int a = 0; a < m_; ++a) {
      long long k = static_cast<long long>(std::floor(c(a) * n_));
      k = std::clamp<long long>(k, 0, n_ - 1);
      idx += static_cast<std::size_t>(k) * stride;
      stride *= static_cast<std::size_t>(n_);
    }
    return idx;
  }

  void push_row(const std::vector<std::pair<std::size_t, double>>& entries) {
    for (const auto& [j, v] : entries) {
      cols_.push_back(j);
      vals_.push_back(v);
    }
    row_ptr_.push_back(cols_.size());
  }

  /// Coordinate-list text: one "row col value" line per nonzero.
  void write_coo(std::ostream& os) const {
    os.precision(17);
    for (std::size_t i = 0; i < cells_; ++i)
      for (std::size_t k = row_begin(i); k < row_end(i); ++k)
        os << i << ' ' << cols_[k] << ' ' << vals_[k] << '\n';
  }

 private:
  int m_, n_, samples_;
  std::size_t cells_ = 0;
  std::vector<std::size_t> row_ptr_;
  std::vector<std::size_t> cols_;
  std::vector<double> vals_;
};

inline constexpr double kDefaultUlamBudget = 5e8;

/// Ulam matrix from s points per axis per cell at offsets (2k+1)/(2s):
/// P[i][j] = (samples of cell i landing in cell j) / s^m.
inline UlamOperator build_ulam(const RotBetaMap& map, int n, int s,
                               double budget = kDefaultUlamBudget) {
  if (n < 2) throw invalid_input("Ulam resolution N must be >= 2");
  if (s < 1) throw invalid_input("samples per axis s must be >= 1");
  const int m = map.dim();
  const double work = std::pow(static_cast<double>(n), m) * std::pow(map.beta(), m);
  const double samples_total = std::pow(static_cast<double>(n) * s, m);
  if (work > budget || samples_total > 50.0 * budget)
    throw Error(ErrorKind::Numerical, "Ulam operator exceeds the configured size budget");

  UlamOperator op(m, n, s);
  std::size_t per_cell = 1;
  for (int a = 0; a < m; ++a) per_cell *= static_cast<std::size_t>(s);
  const double weight = 1.0 / static_cast<double>(per_cell);

  std::vector<std::size_t> hits(per_cell);
  std::vector<std::pair<std::size_t, double>> row;
  for (std::size_t i = 0; i < op.cell_count(); ++i) {
    const IVec base = op.cell_index(i);
    for (std::size_t q = 0; q < per_cell; ++q) {
      Vec c(m);
      std::size_t rest = q;
      for (int a = 0; a < m; ++a) {
        const double off = (2.0 * static_cast<double>(rest % s) + 1.0) / (2.0 * s);
        rest /= s;
        c(a) = (static_cast<double>(base(a)) + off) / n;
      }
      map.step_coords(c);
      hits[q] = op.cell_of(c);
    }
    std::sort(hits.begin(), hits.end());
    row.clear();
    for (std::size_t q = 0; q < per_cell;) {
      std::size_t r = q;
      while (r < per_cell && hits[r] == hits[q]) ++r;
      row.emplace_back(hits[q], static_cast<double>(r - q) * weight);
      q = r;
    }
    op.push_row(row);
  }
  return op;
}

}  // namespace rotbeta
