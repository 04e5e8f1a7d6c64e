#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "bineuc/binary_cf.hpp"
#include "bineuc/error.hpp"
#include "bineuc/gcd.hpp"

namespace bineuc {
namespace {

template <class F>
void expect_error(Errc code, F&& f) {
  try {
    f();
    FAIL() << "expected ValidationError " << to_string(code);
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

TEST(BinaryCF, Examples) {
  EXPECT_EQ(expand(1, 3), (BinaryCF{{1, 1}}));
  EXPECT_EQ(expand(7, 13), (BinaryCF{{1, 1}, {1, 2}, {1, 1}}));
  EXPECT_TRUE(expand(1, 1).empty());

  EXPECT_EQ(evaluate({{1, 1}}), std::make_pair(Natural(1), Natural(3)));
  EXPECT_EQ(evaluate({}), std::make_pair(Natural(1), Natural(1)));
  EXPECT_EQ(evaluate({{1, 1}, {1, 2}, {1, 1}}), std::make_pair(Natural(7), Natural(13)));

  EXPECT_EQ(stats(expand(7, 13)), (CFStats{3, 3, 4}));
  EXPECT_EQ(stats({}), (CFStats{0, 0, 0}));
  EXPECT_EQ(render(expand(7, 13)), "1/1 + 2/1 + 4/(1+2)");
}

TEST(BinaryCF, TermConstraints) {
  const auto cf = expand(5, 7);
  for (const auto& t : cf) {
    EXPECT_EQ(t.a % 2, 1);
    EXPECT_LT(t.a, Natural(1) << t.k);
  }
  EXPECT_EQ(evaluate(cf), std::make_pair(Natural(5), Natural(7)));

  // 1/7: one inner pass with shifts 1, 1 gives a = 1 + 2, k = 2.
  EXPECT_EQ(expand(1, 7), (BinaryCF{{3, 2}}));
  EXPECT_EQ(render(expand(1, 7)), "1/(3+4)");
}

TEST(BinaryCF, Rejections) {
  expect_error(Errc::even_input, [] { expand(2, 7); });
  expect_error(Errc::not_coprime, [] { expand(3, 9); });
  expect_error(Errc::order, [] { expand(13, 7); });
  expect_error(Errc::zero_input, [] { expand(0, 7); });
  expect_error(Errc::invalid_term, [] { evaluate({{1, 0}}); });
  expect_error(Errc::invalid_term, [] { evaluate({{2, 3}}); });
  expect_error(Errc::invalid_term, [] { evaluate({{5, 2}}); });
}

TEST(BinaryCF, RoundTripExhaustiveSmall) {
  for (unsigned v = 1; v < 200; v += 2) {
    for (unsigned u = 1; u <= v; u += 2) {
      if (std::gcd(u, v) != 1) continue;
      const auto cf = expand(u, v);
      ASSERT_EQ(evaluate(cf), std::make_pair(Natural(u), Natural(v))) << u << "/" << v;
      const auto s = stats(cf);
      ASSERT_EQ(s.depth, cf.size());
      ASSERT_GE(s.ones_total, s.depth);
      ASSERT_GE(s.shifts_total, s.depth);
    }
  }
}

TEST(BinaryCF, RoundTripRandom64Bit) {
  std::mt19937_64 rng(12345);
  int done = 0;
  while (done < 100000) {
    std::uint64_t u = rng() | 1, v = rng() | 1;
    if (u > v) std::swap(u, v);
    if (std::gcd(u, v) != 1) continue;
    const auto cf = expand(Natural(u), Natural(v));
    ASSERT_EQ(evaluate(cf), std::make_pair(Natural(u), Natural(v)));
    ++done;
  }
}

TEST(BinaryCF, StatsMatchAlgorithmBCounters) {
  std::mt19937_64 rng(777);
  int done = 0;
  while (done < 10000) {
    std::uint64_t u = (rng() >> 32) | 1, v = (rng() >> 32) | 1;
    if (u > v) std::swap(u, v);
    if (std::gcd(u, v) != 1) continue;
    const auto s = stats(expand(Natural(u), Natural(v)));
    const auto t = gcd_binary(Natural(u), Natural(v)).trace;
    ASSERT_EQ(s.ones_total, t.b3_count);
    ASSERT_EQ(s.shifts_total, t.shift_total);
    ASSERT_EQ(s.depth, gcd_algorithm_v(Natural(u), Natural(v)).trace.outer_exchanges);
    ++done;
  }
}

TEST(BinaryCF, Deterministic) {
  const Natural u("123456789012345678901234567");
  const Natural v("987654321098765432109876543");
  ASSERT_EQ(gcd_binary(u, v).g, 1);
  EXPECT_EQ(expand(u, v), expand(u, v));
}

}  // namespace
}  // namespace bineuc
