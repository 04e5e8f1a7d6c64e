#include <gtest/gtest.h>

#include <cmath>

#include "bineuc/error.hpp"
#include "bineuc/mellin.hpp"

namespace bineuc {
namespace {

constexpr BigReal::Precision kBits = 200;

BigReal R(double v) { return BigReal(v, kBits); }

TEST(Mellin, DirectSumLimitAndDomain) {
  EXPECT_NEAR(d1_direct(R(1e-30), R(1e-40)).to_double(), 1.0, 1e-25);
  EXPECT_THROW(d1_direct(R(0.0), R(1e-10)), ValidationError);
  EXPECT_THROW(d1_direct(R(0.5), R(0.0)), ValidationError);
}

TEST(Mellin, CompensatedSumAgrees) {
  const BigReal a = d1_direct(R(1.0), R(1e-30));
  const BigReal b = d1_direct_compensated(R(1.0), R(1e-30));
  EXPECT_LT(abs(a - b).to_double(), 1e-28);
  // Same sum in double precision with a plain loop.
  double s = 0.0;
  for (int k = 1; k < 200; ++k) s += std::ldexp(1.0, -k) / (1.0 + std::ldexp(1.0, k));
  EXPECT_NEAR(a.to_double(), s, 1e-16);
}

TEST(Mellin, PowerCoefficients) {
  EXPECT_EQ(power_coefficient(2, kBits), -2.0);
  EXPECT_LT(abs(power_coefficient(3, kBits) - 4.0 / BigReal(3L, kBits)).to_double(), 1e-50);
  EXPECT_THROW(power_coefficient(1, kBits), ValidationError);
}

TEST(Mellin, PowerCoefficientsMatchTheDirectSum) {
  // Subtract the known leading part and read off c_2 from two small x.
  const ExpansionTerms none{true, 1};
  for (double x : {1e-4, 2e-4}) {
    const BigReal bx = R(x);
    const BigReal rest = d1_direct(bx, R(1e-50)) - d1_expansion(bx, none);
    // rest ~ c_3 x^3
    EXPECT_NEAR((rest / (bx * bx * bx)).to_double(), 4.0 / 3.0, 1e-3) << x;
  }
}

TEST(Mellin, ExpansionWithPeriodicTerm) {
  const BigReal x = R(0.01);
  const BigReal direct = d1_direct(x, R(1e-45));
  const BigReal with_p = d1_expansion(x, {true, 40});
  const BigReal without_p = d1_expansion(x, {false, 40});
  EXPECT_LT(abs(with_p - direct).to_double(), 1e-20);
  const double gap = (without_p - direct).to_double();
  EXPECT_GT(std::abs(gap), 1e-16);
  EXPECT_LT(std::abs(gap), 1e-13);
  EXPECT_NEAR(-gap, (x * periodic_term(log2(x))).to_double(), 1e-20);
}

TEST(Mellin, ResidualWithoutPeriodicTermIsPeriodicInLgX) {
  // x and 2x share the phase of lg x, so the scaled gaps agree.
  const BigReal x1 = R(0.01), x2 = R(0.02), x3 = R(0.015);
  auto scaled_gap = [](const BigReal& x) {
    return ((d1_expansion(x, {false, 60}) - d1_direct(x, R(1e-50))) / x).to_double();
  };
  EXPECT_NEAR(scaled_gap(x1), scaled_gap(x2), 1e-16);
  EXPECT_GT(std::abs(scaled_gap(x1) - scaled_gap(x3)), 1e-13);
}

TEST(Mellin, ExpansionImprovesWithMoreTerms) {
  const BigReal x = R(0.05);
  const BigReal direct = d1_direct(x, R(1e-50));
  double prev = 1.0;
  for (int n : {4, 8, 16}) {
    const double err = abs(d1_expansion(x, {true, n}) - direct).to_double();
    EXPECT_LT(err, prev);
    prev = err;
  }
  EXPECT_THROW(d1_expansion(R(0.5), {}), ValidationError);
  EXPECT_THROW(d1_expansion(R(0.0), {}), ValidationError);
}

TEST(Mellin, PeriodicTermProperties) {
  EXPECT_LT(abs(periodic_term(R(0.0))).to_double(), 1e-50);
  const BigReal second = periodic_amplitude(2, kBits);
  for (double t : {0.1, 0.25, 0.3, 0.77}) {
    const BigReal p = periodic_term(R(t));
    EXPECT_LT(abs(p + periodic_term(R(-t))).to_double(), 1e-40);
    const BigReal first = periodic_amplitude(1, kBits) * sin(2.0 * const_pi(kBits) * t);
    EXPECT_LT(abs(p - first), second);
  }
}

TEST(Mellin, PeriodicMaximum) {
  const double pmax = periodic_max(1024).to_double();
  EXPECT_GT(pmax, 7.0e-12);
  EXPECT_LT(pmax, 7.8e-12);
  EXPECT_THROW(periodic_max(100), ValidationError);
}

TEST(Mellin, FirstDistributionFromD) {
  // 1 + D(1/x) - D(x) against 1 - F~_1, one recurrence step from F~_0(t) = 1 - t.
  for (double xv : {0.2, 0.5, 0.9}) {
    const BigReal x = R(xv);
    const BigReal lhs = 1.0 + d1_direct(1.0 / x, R(1e-50)) - d1_direct(x, R(1e-50));
    BigReal rhs(0L, kBits);
    for (long k = 1; k < 220; ++k) {
      const BigReal pk = ldexp(R(1.0), k);
      rhs += ldexp((1.0 / (1.0 + pk * x)) - (x / (x + pk)), -k);
    }
    EXPECT_LT(abs(lhs - (1.0 - rhs)).to_double(), 1e-40) << xv;
  }
}

}  // namespace
}  // namespace bineuc
