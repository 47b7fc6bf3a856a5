// Runs every acceptance criterion and prints one PASS/FAIL line each.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "rotbeta/rotbeta.hpp"

using namespace rotbeta;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!out.pass) ++failures;
  std::printf("%s criterion %2d: %s (%.2fs)%s\n", out.pass ? "PASS" : "FAIL", id, name.c_str(), secs,
              out.detail.str().c_str());
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double l1_to_uniform(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += std::abs(x - 1.0 / static_cast<double>(v.size()));
  return s;
}

Vec random_point(std::mt19937_64& rng, const LatticeDomain& d) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Vec c(d.dim());
  for (int i = 0; i < d.dim(); ++i) c(i) = u(rng);
  return d.point(c);
}

}  // namespace

int main() {
  criterion(1, "bounds table on 1000 angles: B1 <= B2, max B2 < 3, under 1 s", [](Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto table = bounds::make_table(bounds::linear_grid(0.01, pi - 0.01, 1000));
    std::ostringstream csv;
    io::CsvWriter w(csv, {"theta", "B1", "B2", "C", "branchB1", "branchB2"});
    double max_b2 = 0.0;
    bool ordered = true;
    for (const auto& r : table.rows) {
      w.row(r.theta, r.b1, r.b2, r.c, r.branch_b1, r.branch_b2);
      max_b2 = std::max(max_b2, r.b2);
      ordered = ordered && r.b1 <= r.b2 + 1e-12;
    }
    const double secs = seconds_since(t0);
    o.require(table.rows.size() == 1000, "1000 rows");
    o.require(ordered, "B1 <= B2");
    o.require(max_b2 < 3.0, "max B2 < 3");
    o.require(secs < 1.0, "runtime < 1 s");
    o.detail << " max B2 = " << max_b2;
  });

  criterion(2, "branch continuity of B1 and B2 within 1e-12", [](Outcome& o) {
    const double t_small = 2.0 * std::asin(std::sqrt(5.0) - 2.0);
    const double t_tan = 2.0 * std::atan(0.5);
    const double d23 = std::abs(bounds::b1_branch2(t_small) - bounds::b1_branch3(t_small));
    const double d13 = std::abs(bounds::b1_branch1(t_tan) - bounds::b1_branch3(t_tan));
    const double db2 = std::abs(bounds::b2_branch1(pi / 3) - bounds::b2_branch2(pi / 3));
    o.require(d23 <= 1e-12, "B1 branches 2/3");
    o.require(std::abs(bounds::b1_branch2(t_small) - 2.6180340) < 1e-7, "value ~2.6180340");
    o.require(d13 <= 1e-12, "B1 branches 1/3");
    o.require(std::abs(bounds::b1_branch3(t_tan) - 2.0) <= 1e-12, "value 2");
    o.require(db2 <= 1e-12, "B2 branches");
    o.require(std::abs(bounds::b2_branch1(pi / 3) - 7.0 / 3.0) <= 1e-12, "value 7/3");
    o.detail << " gaps " << d23 << ", " << d13 << ", " << db2;
  });

  criterion(3, "C(theta) at arcsin(2/sqrt 15) and pi/2 within 1e-12", [](Outcome& o) {
    const double a = bounds::c_theta(std::asin(2.0 / std::sqrt(15.0)));
    const double b = bounds::c_theta(pi / 2);
    o.require(std::abs(a - 2.0) <= 1e-12, "C = 2");
    o.require(std::abs(b - std::sqrt((1.0 + std::sqrt(5.0)) / 2.0)) <= 1e-12, "C(pi/2)");
    o.detail << " C = " << io::fmt(a) << ", " << io::fmt(b);
  });

  criterion(4, "cut lemma, 10^4 random configurations for k = 1, 2, 3, under 2 min", [](Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int k = 1; k <= 3; ++k) {
      const auto rep = plank::verify_lemma_cut(k, 10'000, 20'240 + static_cast<std::uint64_t>(k));
      o.require(rep.min_radius >= rep.bound - 2e-5, "k=" + std::to_string(k) + " minimum");
      o.require(std::abs(rep.parallel_radius - rep.bound) <= 2e-5, "k=" + std::to_string(k) + " parallel");
      o.require(rep.passed(), "k=" + std::to_string(k) + " report");
      o.detail << " k=" << k << " min " << rep.min_radius;
    }
    o.require(seconds_since(t0) < 120.0, "runtime < 2 min");
  });

  criterion(5, "Bang check on 10^3 random strip sets of total width <= 1.9", [](Outcome& o) {
    const auto sweep = plank::verify_bang(1000, 5);
    o.require(sweep.failures.empty(), std::to_string(sweep.failures.size()) + " sets without witness");
    o.detail << " witnesses " << sweep.witnesses << "/" << sweep.sets;
  });

  criterion(6, "full-branch oracles: uniform Ulam densities, mean preimage count", [](Outcome& o) {
    const RotBetaMap dbl(2.0, Isometry::identity(1), LatticeDomain::unit_cube(1));
    const RotBetaMap tri(3.0, Isometry::identity(2), LatticeDomain::unit_cube(2));
    // s must be a multiple of beta for the sampled operator to be exact
    const auto a = stationary(build_ulam(dbl, 64, 4));
    const auto b = stationary(build_ulam(tri, 27, 3));
    o.require(a.densities.size() == 1 && l1_to_uniform(a.densities[0].values) <= 1e-9, "m=1 uniform");
    o.require(b.densities.size() == 1 && l1_to_uniform(b.densities[0].values) <= 1e-9, "m=2 uniform");
    std::mt19937_64 rng(6);
    const RotBetaMap odd(2.5, Isometry::rotation(0.9), LatticeDomain::parallelogram(1.0, 1.2, 1.3));
    for (const RotBetaMap* map : {&dbl, &tri, &odd}) {
      double sum = 0.0, sum2 = 0.0;
      const int n = 10'000;
      for (int i = 0; i < n; ++i) {
        const double c = static_cast<double>(preimages(*map, random_point(rng, map->domain())).size());
        sum += c;
        sum2 += c * c;
      }
      const double mean = sum / n;
      const double sigma = std::sqrt(std::max(0.0, sum2 / n - mean * mean) / n);
      const double target = std::pow(map->beta(), map->dim());
      o.require(std::abs(mean - target) <= 3.0 * sigma + 1e-12, "mean count for beta=" + io::fmt(map->beta()));
      o.detail << " mean " << mean << " vs " << target;
    }
  });

  criterion(7, "symmetric map on the line: gap below two, full support at two", [](Outcome& o) {
    const int n = 200;
    const double beta = 1.8;
    const auto res = stationary(build_ulam(cases::symmetric_map_1d(beta), n, 4));
    double mass = 0.0;
    for (int i = 0; i < n; ++i) {
      const double lo = -0.5 + static_cast<double>(i) / n, hi = lo + 1.0 / n;
      if (lo >= beta / 2 - 1 && hi <= 1 - beta / 2)
        for (const auto& d : res.densities) mass += d.values[i];
    }
    o.require(mass <= 1e-6, "gap mass");
    const auto two = stationary(build_ulam(cases::symmetric_map_1d(2.0), n, 4));
    o.require(lebesgue_equivalence_check(two, 1e-3 / n), "positive at beta = 2");
    o.detail << " gap mass " << mass;
  });

  criterion(8, "symmetric square map: invariant sets and class counts, under 1 min each", [](Outcome& o) {
    auto t0 = std::chrono::steady_clock::now();
    const auto rep = cases::square_case_study(1.4, 96, 4);
    o.require(seconds_since(t0) < 60.0, "runtime at 1.4");
    o.require(std::abs(rep.large_side - 0.119048) < 5e-7 && std::abs(rep.small_side - 0.083333) < 5e-7,
              "piece sizes");
    o.require(rep.invariance_checked && rep.invariance_ok(), "exact invariance of Y1 and Y2");
    o.require(rep.component_count >= 2, "at least 2 recurrent classes at N=96 (found " +
                                            std::to_string(rep.component_count) + ")");
    o.detail << " sides " << rep.large_side << "/" << rep.small_side << ", classes at N=96: "
             << rep.component_count;
    if (rep.component_count < 2) {
      const auto fine = ergodic_components(build_ulam(cases::symmetric_square_map(1.4), 384, 4));
      o.detail << " (N=384: " << fine.count << ")";
    }
    t0 = std::chrono::steady_clock::now();
    const auto two = cases::square_case_study(2.0, 96, 4);
    o.require(seconds_since(t0) < 60.0, "runtime at 2.0");
    o.require(two.component_count == 1, "one class at 2.0");
    o.require(two.lebesgue_equivalent && *two.lebesgue_equivalent, "positive density at 2.0");
  });

  criterion(9, "hole radius ratios", [](Outcome& o) {
    Mat b(2, 2);
    b << 1, 0, 0, 3;
    const RotBetaMap slab(2.5, Isometry::rotation(pi / 2), LatticeDomain(b, Vec::Zero(2)));
    const auto h1 = hole_radii(slab, make_vec({0.3, 1.1}), 6);
    double worst1 = 0.0;
    for (std::size_t n = 2; n < h1.size(); ++n) worst1 = std::max(worst1, h1[n].ratio);
    o.require(worst1 <= 2.0 / 2.5 + 0.02, "slab ratio");
    const RotBetaMap sq(3.5, Isometry::rotation(pi / 4), LatticeDomain::unit_cube(2));
    const auto h2 = hole_radii(sq, make_vec({0.3, 0.6}), 4);
    double worst2 = 0.0;
    for (std::size_t n = 2; n < h2.size(); ++n) worst2 = std::max(worst2, h2[n].ratio);
    o.require(worst2 <= 3.0 / 3.5 + 0.02, "square ratio");
    o.detail << " max ratios " << worst1 << " (<= " << 2.0 / 2.5 + 0.02 << "), " << worst2 << " (<= "
             << 3.0 / 3.5 + 0.02 << ")";
  });

  criterion(10, "expansion reconstruction on 100 random maps, n <= 20", [](Outcome& o) {
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> u(-1.0, 1.0), bet(1.1, 4.0), ang(0.0, 2 * pi);
    int violations = 0;
    for (int t = 0; t < 100; ++t) {
      const int m = 1 + t % 2;
      Mat basis(m, m);
      do {
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j) basis(i, j) = u(rng) + (i == j ? 1.5 : 0.0);
      } while (std::abs(basis.determinant()) < 0.3);
      Vec xi(m);
      for (int i = 0; i < m; ++i) xi(i) = u(rng);
      const Isometry iso = m == 1 ? Isometry::identity(1) : Isometry::rotation(ang(rng));
      const RotBetaMap map(bet(rng), iso, LatticeDomain(basis, xi));
      const Vec z = random_point(rng, map.domain());
      const auto e = expand(map, z, 20);
      for (int n = 1; n <= 20; ++n)
        if ((z - e.reconstruct(map, n)).norm() > DigitExpansion::error_bound(map, n)) ++violations;
    }
    o.require(violations == 0, std::to_string(violations) + " violations");
  });

  criterion(11, "property (S) on the unit square at level 0", [](Outcome& o) {
    const RotBetaMap three(3.0, Isometry::identity(2), LatticeDomain::unit_cube(2));
    const RotBetaMap low(1.2, Isometry::identity(2), LatticeDomain::unit_cube(2));
    const auto a = check_property_s(three, make_vec({0.3, 0.3}), 2);
    const auto b = check_property_s(low, make_vec({0.3, 0.3}), 0);
    o.require(a.satisfied_at && *a.satisfied_at == 0, "satisfied at 0 for beta 3");
    o.require(std::abs(a.margins[0] - (3.0 - std::sqrt(2.0))) <= 2 * a.error_bounds[0] + 1e-12,
              "margin 3 - sqrt 2");
    o.require(!b.satisfied_at && b.margins[0] < 0.0, "negative margin for beta 1.2");
    o.detail << " margins " << a.margins[0] << ", " << b.margins[0];
  });

  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
