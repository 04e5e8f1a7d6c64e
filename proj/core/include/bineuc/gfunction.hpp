#pragma once

#include <cstdint>
#include <vector>

#include "bineuc/bigreal.hpp"
#include "bineuc/grid.hpp"
#include "bineuc/interpolation.hpp"
#include "bineuc/natural.hpp"

namespace bineuc {

/// G(x) = sum_{k>=1} 2^-k F~(1/(1 + 2^k x)) for any x > 0, at machine
/// precision. With F(1) = 1 this is the cumulative of g = U f, so G(+inf) = 1.
class GFunction {
 public:
  explicit GFunction(const GridFunction& F);
  explicit GFunction(NodalInterpolant ftilde);

  double operator()(double x) const;

  /// F~(exp(-y)), y >= 0.
  double ftilde_y(double y) const;

 private:
  NodalInterpolant ftilde_;
  double z_max2_;
};

/// G(x) at the function's working precision.
BigReal g_value(const GridFunction& F, const BigReal& x);

/// g(1) = U f (1) = sum (1 + 2^k)^-2 f(1/(1 + 2^k)), with f from the
/// interpolant's derivative.
BigReal g1_direct(const GridFunction& F);

/// Sums of G(1/a) over odd a in [2^j, 2^(j+1)), j = 0..size-1. Octaves
/// below 2^exact_exponent are summed term by term; later ones by
/// Euler-Maclaurin from the midpoint rule with Gauss-Legendre integrals.
struct OctaveSums {
  std::vector<double> sums;
  int exact_exponent = 0;

  static OctaveSums compute(const GFunction& G, int exact_exponent = 20, int octaves = 80);
};

/// Sum over odd a in (lo, hi) of G(1/(a + shift)), lo and hi even, by the
/// midpoint Euler-Maclaurin estimate.
double odd_sum_estimate(const GFunction& G, double lo, double hi, double shift);

struct ValleeSum {
  /// Sum over odd a <= a_max of 2^-floor(lg a) G(1/a).
  double partial = 0.0;
  double raw_remainder = 0.0;  // 1 - partial
  /// Estimate of the terms beyond a_max.
  double tail_estimate = 0.0;
  double corrected_remainder = 0.0;  // 1 - partial - tail_estimate
  /// Partial sum after each complete octave.
  std::vector<double> octave_partials;
  bool monotone = true;
};

/// Rejects even a_max and a_max < 3.
ValleeSum vallee_sum(const GFunction& G, const Natural& a_max, int tail_octaves = 80);

/// K = 2 ln 2 / (pi^2 g(1)) * sum_a 2^-floor(lg a) G(1/a).
double k_from_vallee(double g1, double weighted_sum);

/// Checks sum_{k>=1, 2^k>a} 2^-k = 2^-floor(lg a) in exact integer
/// arithmetic for all odd a < limit. Returns the first failing a, or 0.
std::uint64_t weight_identity_failure(std::uint64_t limit);

/// Right side of G(x) = sum_k 2^-k sum_{a odd < 2^k} (G(1/a) - G(1/(a + 2^k x))),
/// truncated after k_max levels. Levels up to exact_levels are summed term
/// by term.
double gsum_rhs(const GFunction& G, const OctaveSums& octaves, double x, int k_max = 55,
                int exact_levels = 14);

}  // namespace bineuc
