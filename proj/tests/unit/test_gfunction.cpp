#include <gtest/gtest.h>

#include <cmath>

#include "bineuc/constants.hpp"
#include "bineuc/error.hpp"
#include "bineuc/gfunction.hpp"
#include "fixtures.hpp"

namespace bineuc {
namespace {

using testing::fixed_point_level9;
using testing::kBits;
using testing::kK;
using testing::kLambda;

const GFunction& G9() {
  static const GFunction G(fixed_point_level9());
  return G;
}

TEST(GFunction, TendsToOne) {
  EXPECT_LT(std::abs(1.0 - G9()(std::ldexp(1.0, 64))), 1e-15);
  const BigReal big = ldexp(BigReal(1L, kBits), 64);
  EXPECT_LT(std::abs((1.0 - g_value(fixed_point_level9(), big)).to_double()), 1e-15);
  EXPECT_THROW(G9()(0.0), ValidationError);
  EXPECT_THROW(G9()(-1.0), ValidationError);
}

TEST(GFunction, OddFunctionLemma) {
  const auto& F = fixed_point_level9();
  for (double x : {0.25, 0.5, 0.75}) {
    const BigReal bx(x, kBits);
    const BigReal lhs = eval_ftilde(F, bx);
    const BigReal rhs = g_value(F, 1.0 / bx) - g_value(F, bx);
    EXPECT_LT(abs(lhs - rhs).to_double(), 1e-10) << x;
    EXPECT_NEAR(G9()(1.0 / x) - G9()(x), lhs.to_double(), 1e-12) << x;
  }
}

TEST(GFunction, DensityAtOneIsTwiceG1) {
  const auto& F = fixed_point_level9();
  const double g1 = g1_direct(F).to_double();
  EXPECT_NEAR(2.0 * g1, kLambda, 1e-10);
  EXPECT_NEAR(2.0 * g1, density_at(F, BigReal(1L, kBits)).to_double(), 1e-10);
}

TEST(GFunction, WeightIdentityExact) { EXPECT_EQ(weight_identity_failure(1U << 16), 0U); }

TEST(ValleeSum, PartialSumsIncreaseTowardOne) {
  const auto V = vallee_sum(G9(), Natural((1 << 14) - 1));
  EXPECT_TRUE(V.monotone);
  EXPECT_EQ(V.octave_partials.size(), 14U);
  EXPECT_LT(V.partial, 1.0);
  EXPECT_GT(V.raw_remainder, 0.0);
  EXPECT_LT(std::abs(V.corrected_remainder), 1e-9);
  const auto W = vallee_sum(G9(), Natural((1 << 15) - 1));
  EXPECT_LT(W.raw_remainder, V.raw_remainder);
}

TEST(ValleeSum, ProvenFormulaForK) {
  const auto V = vallee_sum(G9(), Natural((1 << 14) - 1));
  const double g1 = g1_direct(fixed_point_level9()).to_double();
  EXPECT_NEAR(k_from_vallee(g1, V.partial + V.tail_estimate), kK, 1e-9);
}

TEST(ValleeSum, Rejections) {
  try {
    vallee_sum(G9(), Natural(1024));
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.code(), Errc::even_input);
  }
  EXPECT_THROW(vallee_sum(G9(), Natural(1)), ValidationError);
}

TEST(GFunction, DoubleSumLemmaAndItsLimit) {
  const auto octaves = OctaveSums::compute(G9(), 14, 80);
  for (double x : {0.5, 1.0, 2.0}) {
    EXPECT_NEAR(gsum_rhs(G9(), octaves, x), G9()(x), 1e-10) << x;
  }
  const double big = std::ldexp(1.0, 32);
  EXPECT_NEAR(gsum_rhs(G9(), octaves, big), G9()(big), 1e-13);
  EXPECT_NEAR(G9()(big), 1.0, 1e-8);
}

}  // namespace
}  // namespace bineuc
