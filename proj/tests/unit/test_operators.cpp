#include <gtest/gtest.h>

#include <cmath>

#include "bineuc/error.hpp"
#include "bineuc/operators.hpp"
#include "fixtures.hpp"

namespace bineuc {
namespace {

using testing::fixed_point_level9;
using testing::kLambda;

Density fixed_density() {
  static const DensityGrid grid = DensityGrid::from_fixed_point(fixed_point_level9());
  return grid.as_density();
}

// f(x) = 2x, C(x) = x^2
Density linear_density() {
  return {[](double x) { return 2.0 * x; }, [](double x) { return x * x; }};
}

TEST(Operators, AdditivityPointwise) {
  for (const Density& f : {uniform_density(), linear_density(), fixed_density()}) {
    const Density B = apply_B2(f), U = apply_U2(f), Ut = apply_Utilde2(f);
    for (double x : identity_sample_points()) {
      EXPECT_NEAR(U(x) + Ut(x), B(x), 4e-16 * std::abs(B(x)) + 1e-16) << x;
    }
  }
}

TEST(Operators, HalvesCoincideAtOne) {
  const Density U = apply_U2(uniform_density()), Ut = apply_Utilde2(uniform_density());
  EXPECT_NEAR(U(1.0), Ut(1.0), 1e-16);
}

TEST(Operators, PreservesL1Norm) {
  EXPECT_NEAR(l1_norm(uniform_density()), 1.0, 1e-12);
  EXPECT_NEAR(l1_norm(apply_B2(uniform_density())), 1.0, 1e-8);
  EXPECT_NEAR(l1_norm(apply_B2(linear_density())), 1.0, 1e-8);
}

TEST(Operators, FixedPointResidual) {
  const Density f = fixed_density();
  const Density Bf = apply_B2(f);
  for (double x : {1.0, 0.9, 0.5, 0.2, 0.01}) EXPECT_NEAR(Bf(x), f(x), 1e-9) << x;
  EXPECT_NEAR(f(1.0), kLambda, 1e-9);
}

TEST(Operators, LemmaAndTheoremResiduals) {
  for (const Density& f : {uniform_density(), fixed_density()}) {
    const auto r = operator_residuals(f, identity_sample_points());
    EXPECT_LT(r.additivity, 1e-14);
    EXPECT_LT(r.lemma, 1e-8);
    EXPECT_LT(r.theorem, 1e-8);
  }
}

TEST(Operators, SamplePoints) {
  const auto pts = identity_sample_points();
  ASSERT_EQ(pts.size(), 16U);
  EXPECT_EQ(pts.front(), 0.125);
  EXPECT_EQ(pts.back(), 1.0);
}

TEST(Operators, DomainAndCumulativeChecks) {
  const Density B = apply_B2(uniform_density());
  EXPECT_THROW(B(0.0), ValidationError);
  EXPECT_THROW(B(1.5), ValidationError);
  const Density no_cumulative{[](double) { return 1.0; }, {}};
  try {
    apply_V2(no_cumulative);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.code(), Errc::unavailable);
  }
}

TEST(Operators, FixedPointDensityIsPositive) {
  static const DensityGrid grid = DensityGrid::from_fixed_point(fixed_point_level9());
  EXPECT_GT(grid.min_value(), 0.0);
}

}  // namespace
}  // namespace bineuc
