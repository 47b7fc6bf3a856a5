#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "rotbeta/bounds.hpp"
#include "rotbeta/rot_beta_map.hpp"

namespace rotbeta {

enum class Evidence { Unchecked, Holds, Fails };
enum class Status { Applies, HypothesisFails, EvidenceMissing };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Applies: return "applies";
    case Status::HypothesisFails: return "hypothesisFails";
    default: return "evidenceMissing";
  }
}

inline const char* to_string(Evidence e) {
  switch (e) {
    case Evidence::Holds: return "holds";
    case Evidence::Fails: return "fails";
    default: return "unchecked";
  }
}

struct TheoremVerdict {
  std::string theorem;
  std::string conclusion;
  Status status = Status::EvidenceMissing;
  double bound = std::numeric_limits<double>::quiet_NaN();
  double margin = std::numeric_limits<double>::quiet_NaN();  // beta - bound
  std::string note;
};

/// Rotation angle phi when the map is T(z) = zeta z - d with zeta = beta e^{i phi},
/// eta_1 = 1 and eta_2 = -conj(zeta), xi = 0.
inline std::optional<double> scheicher_surer_angle(const RotBetaMap& map, double tol = 1e-9) {
  if (map.dim() != 2 || map.isometry().det_sign() != 1) return std::nullopt;
  const double phi = map.isometry().rotation_angle();
  const Mat& b = map.domain().basis();
  const double beta = map.beta();
  const bool shape = std::abs(b(0, 0) - 1.0) < tol && std::abs(b(1, 0)) < tol &&
                     std::abs(b(0, 1) + beta * std::cos(phi)) < tol &&
                     std::abs(b(1, 1) - beta * std::sin(phi)) < tol &&
                     map.domain().xi().norm() < tol;
  if (!shape || std::abs(std::sin(phi)) < tol) return std::nullopt;
  return std::abs(phi);
}

/// Which of the invariant-measure theorems cover this map, given evidence
/// for property (S) and for the slab condition.
inline std::vector<TheoremVerdict> applicable_theorems(const RotBetaMap& map, Evidence s_evidence,
                                                      Evidence slab_evidence) {
  const double beta = map.beta();
  const int m = map.dim();
  const char* unique_equiv = "unique ACIM, equivalent to Lebesgue measure";
  auto needs_s = [&](TheoremVerdict& v) {
    if (s_evidence == Evidence::Holds) return;
    v.status = Status::EvidenceMissing;
    v.note = s_evidence == Evidence::Fails ? "property (S) not confirmed at the checked levels"
                                           : "property (S) unchecked";
  };
  auto make = [](std::string name, std::string conclusion) {
    TheoremVerdict v;
    v.theorem = std::move(name);
    v.conclusion = std::move(conclusion);
    return v;
  };
  std::vector<TheoremVerdict> out;

  {
    TheoremVerdict v = make("Theorem 1", unique_equiv);
    v.bound = m + 1.0;
    v.margin = beta - v.bound;
    v.status = Status::Applies;
    if (beta >= v.bound) needs_s(v);
    else v.status = Status::HypothesisFails;
    out.push_back(v);
  }
  {
    TheoremVerdict v = make("Theorem 2", unique_equiv);
    v.bound = 2.0;
    v.margin = beta - v.bound;
    v.status = Status::Applies;
    if (!(beta > v.bound) || slab_evidence == Evidence::Fails) {
      v.status = Status::HypothesisFails;
      if (slab_evidence == Evidence::Fails) v.note = "slab condition fails";
    } else if (slab_evidence == Evidence::Unchecked) {
      v.status = Status::EvidenceMissing;
      v.note = "slab condition unchecked";
    } else {
      needs_s(v);
    }
    out.push_back(v);
  }
  {
    TheoremVerdict v = make("Corollary", unique_equiv);
    const auto phi = scheicher_surer_angle(map);
    if (!phi) {
      v.status = Status::HypothesisFails;
      v.note = "map is not in the Scheicher-Surer family";
    } else {
      v.bound = std::max(2.0, bounds::c_theta(*phi));
      v.margin = beta - v.bound;
      v.status = beta > v.bound ? Status::Applies : Status::HypothesisFails;
      v.note = "stated hypothesis beta > max{2, C}; the argument itself uses max{sqrt 2, C} = " +
               std::to_string(std::max(std::sqrt(2.0), bounds::c_theta(*phi)));
    }
    out.push_back(v);
  }
  for (int part = 0; part < 2; ++part) {
    TheoremVerdict v = make(part == 0 ? "Theorem B (B1)" : "Theorem B (B2)",
                            part == 0 ? "unique ACIM" : unique_equiv);
    if (m != 2) {
      v.status = Status::HypothesisFails;
      v.note = "requires m = 2";
    } else {
      const double th = map.domain().theta();
      v.bound = part == 0 ? bounds::b1(th) : bounds::b2(th);
      v.margin = beta - v.bound;
      v.status = Status::Applies;
      if (beta > v.bound) needs_s(v);
      else v.status = Status::HypothesisFails;
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace rotbeta
