#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "rotbeta/rotbeta.hpp"

using namespace rotbeta;
using std::numbers::pi;

namespace {

const double kSqrt5 = std::sqrt(5.0);

double theta_b1_small() { return 2.0 * std::asin(kSqrt5 - 2.0); }
double theta_b1_tan() { return 2.0 * std::atan(0.5); }

const TheoremVerdict& find(const std::vector<TheoremVerdict>& v, const std::string& name) {
  for (const auto& x : v)
    if (x.theorem == name) return x;
  throw std::runtime_error("missing verdict " + name);
}

}  // namespace

TEST(CTheta, Examples) {
  EXPECT_NEAR(bounds::c_theta(pi / 2), std::sqrt((1.0 + kSqrt5) / 2.0), 1e-12);
  EXPECT_NEAR(bounds::c_theta(std::asin(2.0 / std::sqrt(15.0))), 2.0, 1e-12);
  EXPECT_GT(bounds::c_theta(1e-4), 1e3);
  EXPECT_THROW(bounds::c_theta(0.0), Error);
  EXPECT_THROW(bounds::c_theta(pi), Error);
}

TEST(CTheta, DecreasingTowardRightAngle) {
  const auto g = bounds::linear_grid(0.01, pi / 2, 2000);
  for (std::size_t i = 1; i < g.size(); ++i) EXPECT_LT(bounds::c_theta(g[i]), bounds::c_theta(g[i - 1]));
  for (double t : bounds::linear_grid(0.01, pi - 0.01, 500))
    EXPECT_GE(bounds::c_theta(t), bounds::c_theta(pi / 2) - 1e-15);
}

TEST(B1, Examples) {
  EXPECT_DOUBLE_EQ(bounds::b1(pi / 2), 2.0);
  EXPECT_EQ(bounds::b1_branch(pi / 2), 1);
  EXPECT_EQ(bounds::b1_branch(0.1), 2);
  EXPECT_EQ(bounds::b1_branch(0.8), 3);
}

TEST(B1, ContinuousAtBranchSwitches) {
  const double t1 = theta_b1_tan();
  EXPECT_NEAR(bounds::b1_branch3(t1), 2.0, 1e-12);
  EXPECT_NEAR(bounds::b1_branch1(t1), bounds::b1_branch3(t1), 1e-12);
  const double t2 = theta_b1_small();
  EXPECT_NEAR(bounds::b1_branch2(t2), (3.0 + kSqrt5) / 2.0, 1e-12);
  EXPECT_NEAR(bounds::b1_branch2(t2), bounds::b1_branch3(t2), 1e-12);
  for (double eps : {1e-7, 1e-9}) {
    EXPECT_NEAR(bounds::b1(t1 - eps), bounds::b1(t1 + eps), 1e-5);
    EXPECT_NEAR(bounds::b1(t2 - eps), bounds::b1(t2 + eps), 1e-5);
  }
}

TEST(B1, LiteralConditionJumps) {
  // Reading the small-angle condition on sin(theta) moves the switch to where
  // branches 2 and 3 disagree.
  const double t = std::asin(kSqrt5 - 2.0);
  EXPECT_GT(std::abs(bounds::b1_literal(t - 1e-9) - bounds::b1_literal(t + 1e-9)), 0.05);
  EXPECT_DOUBLE_EQ(bounds::b1_literal(pi / 2), bounds::b1(pi / 2));
}

TEST(B2, Examples) {
  EXPECT_NEAR(bounds::b2(pi / 2), 1.0 + std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(bounds::b2_branch1(pi / 3), 7.0 / 3.0, 1e-12);
  EXPECT_NEAR(bounds::b2_branch2(pi / 3), 7.0 / 3.0, 1e-12);
  EXPECT_NEAR(bounds::b2(pi / 6), 1.0 + 2.0 / (1.0 + std::sin(pi / 12)), 1e-12);
  EXPECT_NEAR(bounds::b2(pi / 6), 2.588791, 1e-6);
  EXPECT_LE(bounds::b1(pi / 6), bounds::b2(pi / 6));
}

TEST(Bounds, SymmetricUnderReflection) {
  for (double t : bounds::linear_grid(0.01, pi / 2, 777)) {
    EXPECT_NEAR(bounds::b1(t), bounds::b1(pi - t), 1e-12);
    EXPECT_NEAR(bounds::b2(t), bounds::b2(pi - t), 1e-12);
    EXPECT_NEAR(bounds::c_theta(t), bounds::c_theta(pi - t), 1e-9 * bounds::c_theta(t));
  }
}

TEST(Bounds, OrderedAndAboveNecessaryValues) {
  for (double t : bounds::linear_grid(1e-4, pi - 1e-4, 20001)) {
    const double b1 = bounds::b1(t), b2 = bounds::b2(t);
    EXPECT_LE(b1, b2 + 1e-12) << t;
    EXPECT_LT(b2, 3.0) << t;
    EXPECT_GT(b1, std::sqrt(2.0)) << t;
    EXPECT_GE(b2, 2.0) << t;
  }
}

TEST(Bounds, TableChecksInvariants) {
  const auto table = bounds::make_table(bounds::linear_grid(0.01, pi - 0.01, 1000));
  ASSERT_EQ(table.rows.size(), 1000u);
  EXPECT_DOUBLE_EQ(table.rows.front().theta, 0.01);
  EXPECT_DOUBLE_EQ(table.rows.back().theta, pi - 0.01);
  EXPECT_THROW(bounds::make_table({0.5, pi}), Error);
  EXPECT_THROW(bounds::linear_grid(0.1, 0.2, 1), Error);
}

TEST(Verdicts, TheoremOneAtThreeAndAHalf) {
  const RotBetaMap map(3.5, Isometry::rotation(0.3), LatticeDomain::unit_cube(2));
  const auto v = applicable_theorems(map, Evidence::Holds, Evidence::Unchecked);
  const auto& t1 = find(v, "Theorem 1");
  EXPECT_EQ(t1.status, Status::Applies);
  EXPECT_NEAR(t1.margin, 0.5, 1e-15);
  EXPECT_EQ(find(v, "Theorem 2").status, Status::EvidenceMissing);
  EXPECT_EQ(find(applicable_theorems(map, Evidence::Unchecked, Evidence::Unchecked), "Theorem 1").status,
            Status::EvidenceMissing);
}

TEST(Verdicts, TheoremBOnUnitSquare) {
  const RotBetaMap map(2.5, Isometry::identity(2), LatticeDomain::unit_cube(2));
  const auto v = applicable_theorems(map, Evidence::Holds, Evidence::Fails);
  const auto& b1 = find(v, "Theorem B (B1)");
  const auto& b2 = find(v, "Theorem B (B2)");
  EXPECT_EQ(b1.status, Status::Applies);
  EXPECT_NEAR(b1.bound, 2.0, 1e-15);
  EXPECT_EQ(b2.status, Status::Applies);
  EXPECT_NEAR(b2.margin, 2.5 - (1 + std::sqrt(2.0)), 1e-12);
  EXPECT_EQ(find(v, "Theorem 2").status, Status::HypothesisFails);
  EXPECT_EQ(find(v, "Theorem 1").status, Status::HypothesisFails);
  EXPECT_EQ(find(v, "Corollary").status, Status::HypothesisFails);
}

TEST(Verdicts, NonStrictAtTwoOnTheLine) {
  const RotBetaMap map(2.0, Isometry::identity(1), LatticeDomain::unit_cube(1));
  const auto v = applicable_theorems(map, Evidence::Holds, Evidence::Holds);
  EXPECT_EQ(find(v, "Theorem 1").status, Status::Applies);
  EXPECT_DOUBLE_EQ(find(v, "Theorem 1").margin, 0.0);
  EXPECT_EQ(find(v, "Theorem 2").status, Status::HypothesisFails);
  EXPECT_EQ(find(v, "Theorem B (B1)").status, Status::HypothesisFails);
}

TEST(Verdicts, CorollaryFamily) {
  const double th = std::asin(2.0 / std::sqrt(15.0));
  const auto map = cases::scheicher_map(2.05, th);
  ASSERT_TRUE(scheicher_surer_angle(map));
  EXPECT_NEAR(*scheicher_surer_angle(map), th, 1e-12);
  const auto& c = find(applicable_theorems(map, Evidence::Unchecked, Evidence::Unchecked), "Corollary");
  EXPECT_EQ(c.status, Status::Applies);
  EXPECT_NEAR(c.margin, 0.05, 1e-12);
  EXPECT_NE(c.note.find("sqrt 2"), std::string::npos);

  const auto& silent = find(applicable_theorems(cases::scheicher_map(1.5, pi / 2), Evidence::Unchecked,
                                                Evidence::Unchecked),
                            "Corollary");
  EXPECT_EQ(silent.status, Status::HypothesisFails);
  EXPECT_FALSE(scheicher_surer_angle(RotBetaMap(2.5, Isometry::rotation(1.0), LatticeDomain::unit_cube(2))));
}

TEST(Verdicts, StatusNames) {
  EXPECT_STREQ(to_string(Status::Applies), "applies");
  EXPECT_STREQ(to_string(Status::HypothesisFails), "hypothesisFails");
  EXPECT_STREQ(to_string(Status::EvidenceMissing), "evidenceMissing");
}
