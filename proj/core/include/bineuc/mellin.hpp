#pragma once

#include "bineuc/bigreal.hpp"

namespace bineuc {

/// D(x) = sum_{k>=1} 2^-k / (1 + 2^k x), summed until the remaining weight
/// sum_{k>K} 2^-k is below tol. Rejects x <= 0 and tol <= 0.
BigReal d1_direct(const BigReal& x, const BigReal& tol);

/// Same sum with compensated (Kahan) accumulation, for cross-checking.
BigReal d1_direct_compensated(const BigReal& x, const BigReal& tol);

struct ExpansionTerms {
  bool include_periodic = true;
  /// Number of powers x^2, x^3, ... kept.
  int power_terms = 30;
};

/// Coefficient of x^m (m >= 2) in the small-x expansion of D:
/// (-1)^(m+1) 2^(m-1) / (2^(m-1) - 1).
BigReal power_coefficient(int m, BigReal::Precision bits);

/// 1 + x lg x + x/2 [+ x P(lg x)] + sum_{m=2}^{power_terms+1} c_m x^m,
/// for 0 < x < 1/2.
BigReal d1_expansion(const BigReal& x, const ExpansionTerms& terms);

/// P(t) = (2 pi / ln 2) sum_{n>=1} sin(2 n pi t) / sinh(2 n pi^2 / ln 2),
/// summed until the sinh factor exceeds 2^precision.
BigReal periodic_term(const BigReal& t);

/// Magnitude of the n-th term's amplitude (2 pi/ln 2) / sinh(2 n pi^2/ln 2).
BigReal periodic_amplitude(int n, BigReal::Precision bits);

/// max |P(t)| over `resolution` equally spaced samples of [0, 1), refined by
/// golden-section search around the best sample. resolution >= 1024.
BigReal periodic_max(int resolution, BigReal::Precision bits = 128);

}  // namespace bineuc
