#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace rotbeta {

/// Largest ambient dimension supported. Vectors and matrices carry a runtime
/// dimension but never allocate.
inline constexpr int kMaxDim = 3;

using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxDim, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxDim, kMaxDim>;
using IVec = Eigen::Matrix<long long, Eigen::Dynamic, 1, 0, kMaxDim, 1>;

/// Broad failure classes. The CLI maps each to its own exit code.
enum class ErrorKind {
  InvalidInput = 3,   // malformed or out-of-range arguments
  Numerical = 4,      // budget exceeded, non-convergence
  Verification = 5,   // a checked invariant or claim failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error invalid_input(const std::string& what) {
  return Error(ErrorKind::InvalidInput, what);
}

inline Vec make_vec(std::initializer_list<double> xs) {
  Vec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

inline bool lex_less(const Vec& a, const Vec& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return false;
}

}  // namespace rotbeta
