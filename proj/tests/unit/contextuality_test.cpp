#include "cebench/contextuality.hpp"

#include "cebench/correlations.hpp"
#include "test_support.hpp"

namespace cebench {
namespace {

using testing::kPi;
using testing::kSqrt2;
using testing::kTol;
using testing::Random;
using testing::unit1;
using testing::unit2;

constexpr double kTwoRootTwo = 2.0 * kSqrt2;

TEST(CBar, Examples) {
  EXPECT_NEAR(c_bar(0.0, 0.0), 1.0, kTol);
  EXPECT_NEAR(c_bar(0.0, kPi / 4), kSqrt2 / 2, kTol);
  EXPECT_NEAR(c_bar(kPi / 2, kPi / 2), -1.0, kTol);
}

TEST(CBar, AgreesWithEqualIntensityCorrelation) {
  Random rng;
  for (int i = 0; i < 100; ++i) {
    const PhaseSetting ps = rng.phases();
    EXPECT_NEAR(c_bar(ps.theta1 - ps.theta2, ps.phi1 - ps.phi2), correlation_closed_form(ps, unit1(), unit2()), kTol);
  }
}

TEST(SValue, Examples) {
  EXPECT_NEAR(s_value(0.0, kPi / 2, kPi / 4, -kPi / 4), kTwoRootTwo, kTol);
  EXPECT_NEAR(s_value(0.0, 0.0, 0.0, 0.0), 2.0, kTol);
  // Swapping the two unprimed/primed φ angles of the violating set: direct
  // evaluation of the four cosines gives √2/2 + √2/2 - √2/2 - √2/2 = 0.
  EXPECT_NEAR(s_value(0.0, kPi / 2, -kPi / 4, kPi / 4), 0.0, kTol);
}

TEST(SPrime, ExamplesAndAnchorRequirement) {
  EXPECT_NEAR(s_prime_value(0.0, kPi / 2, -kPi / 4, kPi / 4, 0.0, 0.0), kTwoRootTwo, kTol);
  EXPECT_NEAR(s_prime_value(0.0, 0.0, 0.0, 0.0, 0.0, 0.0), 2.0, kTol);
  EXPECT_THROW(s_prime_value(0.0, 0.0, 0.0, 0.0, 0.2, 0.1), std::invalid_argument);
  EXPECT_NEAR(c_tilde(0.4, 0.1), std::cos(0.3), kTol);
}

TEST(Settings, PublishedViolationsReachTwoRootTwo) {
  EXPECT_NEAR(evaluate(case1_violation()), kTwoRootTwo, kTol);
  Random rng;
  for (int i = 0; i < 10; ++i) {
    const ChshSetting s = case2_violation(rng.angle());
    EXPECT_EQ(s.which, ChshCase::Two);
    EXPECT_DOUBLE_EQ(s.anchors[0], s.anchors[1]);
    EXPECT_NEAR(evaluate(s), kTwoRootTwo, kTol);
  }
}

TEST(ScanMax, FindsTheGlobalMaximumForBothCases) {
  for (auto which : {ChshCase::One, ChshCase::Two}) {
    const ScanResult r = scan_max(which, 64);
    EXPECT_NEAR(r.max_abs, kTwoRootTwo, 1e-4);
    EXPECT_GE(r.max_abs, r.grid_max_abs);
    EXPECT_LE(r.max_abs, kTwoRootTwo + 1e-9);
    EXPECT_NEAR(std::abs(r.value), r.max_abs, kTol);
    const auto& x = r.angles;
    const double at = which == ChshCase::One ? s_value(x[0], x[1], x[2], x[3])
                                             : s_prime_value(x[0], x[1], x[2], x[3], 0.0, 0.0);
    EXPECT_NEAR(std::abs(at), r.max_abs, 1e-12);
  }
}

TEST(ScanMax, CoarseGridStillRefinesAndDominatesFixedSets) {
  const ScanResult r = scan_max(ChshCase::One, 8);
  EXPECT_GE(r.max_abs + 1e-12, evaluate(case1_violation()) - 1e-9);
  EXPECT_LE(r.max_abs, kTwoRootTwo + 1e-9);
  EXPECT_THROW(scan_max(ChshCase::One, 7), std::invalid_argument);
}

TEST(Bound, NoGridPointExceedsTwoRootTwo) {
  constexpr int n = 24;
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const double step = 2.0 * kPi / n;
          worst = std::max(worst, std::abs(s_value(a * step, b * step, c * step, d * step)));
        }
  EXPECT_LE(worst, kTwoRootTwo + 1e-9);
  EXPECT_GT(worst, kNoncontextualBound);
}

}  // namespace
}  // namespace cebench
