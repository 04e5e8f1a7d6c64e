#include <gtest/gtest.h>

#include "bineuc/error.hpp"
#include "bineuc/richardson.hpp"

namespace bineuc {
namespace {

constexpr BigReal::Precision kBits = 160;

BigReal step(double h) { return BigReal(h, kBits); }

TEST(Richardson, SingleEntryUnchanged) {
  RichardsonTable t;
  t.add(step(0.1), BigReal(1.5, kBits));
  EXPECT_EQ(richardson(t, 2), 1.5);
}

TEST(Richardson, CancelsPureQuadraticError) {
  // A(h) = 3 + 5 h^2
  RichardsonTable t;
  for (double h : {0.125, 0.25}) t.add(step(h), BigReal(3.0 + 5.0 * h * h, kBits));
  EXPECT_EQ(richardson(t, 2), 3.0);
}

TEST(Richardson, RemovesSuccessiveEvenPowers) {
  // A(h) = 1 + h^2 - 2 h^4 + h^6, exact after two columns beyond raw.
  RichardsonTable t;
  for (double h : {1.0 / 64, 1.0 / 32, 1.0 / 16, 1.0 / 8}) {
    BigReal hh = step(h);
    BigReal h2 = hh * hh;
    t.add(hh, 1.0 + h2 - 2.0 * h2 * h2 + h2 * h2 * h2);
  }
  const BigReal best = richardson(t, 2);
  EXPECT_LT(abs(best - 1.0), ldexp(BigReal(1.0, kBits), -150));
  ASSERT_EQ(t.columns.size(), 4U);
  const auto ratios = t.difference_ratios(0);
  ASSERT_EQ(ratios.size(), 2U);
  EXPECT_NEAR(ratios[0], 4.0, 0.1);
}

TEST(Richardson, QuarticLadder) {
  // A(h) = 2 + 3 h^4 + h^8
  RichardsonTable t;
  for (double h : {0.1, 0.2, 0.4}) {
    BigReal hh = step(h);
    BigReal h4 = hh * hh * hh * hh;
    t.add(hh, 2.0 + 3.0 * h4 + h4 * h4);
  }
  EXPECT_LT(abs(richardson(t, 4) - 2.0), ldexp(BigReal(1.0, kBits), -140));
}

TEST(Richardson, RejectsMismatchedSteps) {
  RichardsonTable t;
  t.add(step(0.1), BigReal(1.0, kBits));
  t.add(step(0.3), BigReal(1.0, kBits));
  try {
    richardson(t, 2);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.code(), Errc::grid_mismatch);
  }
}

}  // namespace
}  // namespace bineuc
