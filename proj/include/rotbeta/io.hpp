#pragma once

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rotbeta/plank.hpp"
#include "rotbeta/rot_beta_map.hpp"

namespace rotbeta::io {

using nlohmann::json;

inline Vec vec_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.empty() || j.size() > static_cast<std::size_t>(kMaxDim))
    throw invalid_input(std::string(what) + ": expected an array of 1.." + std::to_string(kMaxDim) +
                        " numbers");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw invalid_input(std::string(what) + ": non-numeric entry");
    v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  }
  return v;
}

inline json to_json(const Vec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

/// {"m": 2, "basis": [[eta_1], [eta_2]], "xi": [...]}; each basis entry is one
/// generator eta_i.
inline LatticeDomain domain_from_json(const json& j) {
  if (!j.is_object()) throw invalid_input("domain: expected an object");
  if (!j.contains("m") || !j.at("m").is_number_integer()) throw invalid_input("domain: missing integer \"m\"");
  const int m = j.at("m").get<int>();
  if (m < 1 || m > kMaxDim) throw invalid_input("domain: m must be in 1.." + std::to_string(kMaxDim));
  if (!j.contains("basis") || !j.at("basis").is_array() || j.at("basis").size() != static_cast<std::size_t>(m))
    throw invalid_input("domain: \"basis\" must list m generators");
  Mat b(m, m);
  for (int i = 0; i < m; ++i) {
    const Vec eta = vec_from_json(j.at("basis")[i], "domain.basis");
    if (eta.size() != m) throw invalid_input("domain: generator has wrong dimension");
    b.col(i) = eta;
  }
  const Vec xi = j.contains("xi") ? vec_from_json(j.at("xi"), "domain.xi") : Vec::Zero(m);
  return LatticeDomain(b, xi);
}

inline json to_json(const LatticeDomain& d) {
  json basis = json::array();
  for (int i = 0; i < d.dim(); ++i) basis.push_back(to_json(Vec(d.eta(i))));
  return {{"m", d.dim()}, {"basis", basis}, {"xi", to_json(d.xi())}};
}

/// {"kind": "rotation", "angle": a} | {"kind": "reflection", "axisAngle": a} |
/// {"kind": "matrix", "rows": [[...], ...]} | {"kind": "identity"}.
inline Isometry isometry_from_json(const json& j, int m) {
  if (!j.is_object() || !j.contains("kind")) throw invalid_input("isometry: missing \"kind\"");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "identity") return Isometry::identity(m);
  if (kind == "rotation") {
    const double a = j.at("angle").get<double>();
    if (m == 1) {
      // Only the trivial rotations exist on the line.
      if (std::abs(std::remainder(a, 2 * std::numbers::pi)) < 1e-12) return Isometry::identity(1);
      throw invalid_input("isometry: the only rotation in dimension 1 is the identity");
    }
    if (m != 2) throw invalid_input("isometry: \"rotation\" needs m = 2; use \"matrix\"");
    return Isometry::rotation(a);
  }
  if (kind == "reflection") {
    if (m == 1) return Isometry(-Mat::Identity(1, 1));
    if (m != 2) throw invalid_input("isometry: \"reflection\" needs m = 2; use \"matrix\"");
    return Isometry::reflection(j.at("axisAngle").get<double>());
  }
  if (kind == "matrix") {
    const auto& rows = j.at("rows");
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(m))
      throw invalid_input("isometry: \"rows\" must have m rows");
    Mat mat(m, m);
    for (int r = 0; r < m; ++r) {
      const Vec row = vec_from_json(rows[r], "isometry.rows");
      if (row.size() != m) throw invalid_input("isometry: row has wrong length");
      mat.row(r) = row.transpose();
    }
    return Isometry(mat);
  }
  throw invalid_input("isometry: unknown kind \"" + kind + "\"");
}

/// {"beta": 2.5, "isometry": {...}, "domain": {...}}.
inline RotBetaMap map_from_json(const json& j) {
  try {
    if (!j.is_object()) throw invalid_input("map: expected an object");
    if (!j.contains("beta") || !j.at("beta").is_number()) throw invalid_input("map: missing numeric \"beta\"");
    if (!j.contains("domain")) throw invalid_input("map: missing \"domain\"");
    LatticeDomain dom = domain_from_json(j.at("domain"));
    Isometry iso = j.contains("isometry") ? isometry_from_json(j.at("isometry"), dom.dim())
                                          : Isometry::identity(dom.dim());
    return RotBetaMap(j.at("beta").get<double>(), std::move(iso), std::move(dom));
  } catch (const json::exception& e) {
    throw invalid_input(std::string("map: ") + e.what());
  }
}

inline json to_json(const RotBetaMap& map) {
  json rows = json::array();
  const Mat& m = map.isometry().matrix();
  for (int r = 0; r < map.dim(); ++r) rows.push_back(to_json(Vec(m.row(r).transpose())));
  return {{"beta", map.beta()},
          {"isometry", {{"kind", "matrix"}, {"rows", rows}}},
          {"domain", to_json(map.domain())}};
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw invalid_input(path + ": " + e.what());
  }
}

/// Comma-separated writer with a fixed header and round-trip precision.
class CsvWriter {
 public:
  CsvWriter(std::ostream& os, const std::vector<std::string>& header) : os_(os) {
    os_ << std::setprecision(17);
    for (std::size_t i = 0; i < header.size(); ++i) os_ << (i ? "," : "") << header[i];
    os_ << '\n';
  }

  template <class... T>
  void row(const T&... values) {
    bool first = true;
    ((os_ << (first ? "" : ",") << values, first = false), ...);
    os_ << '\n';
  }

  /// Writes cells already collected as strings.
  void raw(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os_ << (i ? "," : "") << cells[i];
    os_ << '\n';
  }

 private:
  std::ostream& os_;
};

inline std::string fmt(double x) {
  std::ostringstream ss;
  ss << std::setprecision(17) << x;
  return ss.str();
}

inline json to_json(const plank::LineConfig& c) {
  json a = json::array();
  for (const auto& l : c) a.push_back({{"normalAngle", l.angle}, {"offset", l.offset}});
  return a;
}

/// Lemma-check failures: configuration, radius found and the bound it missed.
inline json to_json(const plank::LemmaCutReport& r) {
  json fails = json::array();
  for (const auto& v : r.violations)
    fails.push_back({{"lines", to_json(v.config)},
                     {"foundRadius", v.radius},
                     {"expectedBound", v.bound},
                     {"reason", v.reason}});
  return {{"k", r.k},
          {"trials", r.trials},
          {"bound", r.bound},
          {"tolerance", r.tolerance},
          {"minRadius", r.min_radius},
          {"minConfig", to_json(r.min_config)},
          {"parallelRadius", r.parallel_radius},
          {"passed", r.passed()},
          {"failures", fails}};
}

}  // namespace rotbeta::io
