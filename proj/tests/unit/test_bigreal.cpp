#include <gtest/gtest.h>

#include <sstream>

#include "bineuc/bigreal.hpp"
#include "bineuc/error.hpp"

namespace bineuc {
namespace {

TEST(BigReal, PrecisionIsCarried) {
  BigReal a(1.0, 200);
  EXPECT_EQ(a.precision(), 200);
  BigReal b = a / 3.0;
  EXPECT_EQ(b.precision(), 200);
  BigReal c(64);
  c = b;
  EXPECT_EQ(c.precision(), 200);
}

TEST(BigReal, MixedPrecisionRejected) {
  BigReal a(1.0, 128), b(1.0, 200);
  try {
    a += b;
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.code(), Errc::precision_mismatch);
  }
  EXPECT_THROW(a * b, ValidationError);
}

TEST(BigReal, StringRoundTrip) {
  for (BigReal::Precision bits : {64, 200, 400}) {
    const BigReal x = const_pi(bits) / 7.0;
    const BigReal y = BigReal::from_string(x.to_string(), bits);
    EXPECT_EQ(x, y) << bits;
  }
  EXPECT_THROW(BigReal::from_string("0.5x", 100), ValidationError);
}

TEST(BigReal, Constants) {
  const auto pi = const_pi(300);
  EXPECT_EQ(pi.to_string(30), "3.14159265358979323846264338328");
  const auto ln2 = const_ln2(300);
  EXPECT_LT(abs(exp(ln2) - 2.0), ldexp(BigReal(1.0, 300), -295));
  EXPECT_NEAR((4.0 * ln2 / (pi * pi)).to_double(), 0.2809219710907315, 1e-15);
}

TEST(BigReal, ElementaryFunctions) {
  const BigReal x(0.25, 200);
  EXPECT_LT(abs(sin(x) * sin(x) + cos(x) * cos(x) - 1.0), ldexp(BigReal(1.0, 200), -195));
  EXPECT_LT(abs(log1p(x) - log(1.0 + x)), ldexp(BigReal(1.0, 200), -195));
  EXPECT_EQ(log2(BigReal(1024L, 200)), 10.0);
  EXPECT_EQ(floor(BigReal(2.75, 64)), 2.0);
  BigReal y(3L, 64);
  y.scale2(-2);
  EXPECT_EQ(y, 0.75);
  EXPECT_EQ(max(BigReal(2L, 64), BigReal(3L, 64)), 3.0);
  EXPECT_EQ((1.0 - BigReal(0.25, 64)), 0.75);
  EXPECT_EQ((1.0 / BigReal(4L, 64)), 0.25);
}

TEST(BigReal, MoveLeavesUsableValue) {
  BigReal a(5L, 128);
  BigReal b(std::move(a));
  EXPECT_EQ(b, 5.0);
  std::ostringstream os;
  os << BigReal(0.5, 64);
  EXPECT_EQ(os.str(), BigReal(0.5, 64).to_string());
}

}  // namespace
}  // namespace bineuc
