#include "bineuc/mellin.hpp"

#include <cmath>

#include "bineuc/error.hpp"

namespace bineuc {

namespace {

int terms_for(const BigReal& x, const BigReal& tol) {
  require_same_precision(x, tol);
  if (!(x > 0.0)) throw ValidationError(Errc::domain, "x must be positive");
  if (!(tol > 0.0)) throw ValidationError(Errc::domain, "tolerance must be positive");
  // sum_{k>K} 2^-k = 2^-K < tol
  const double lg_inv = -log2(tol).to_double();
  const int K = static_cast<int>(std::ceil(lg_inv)) + 1;
  if (K > 100000) throw ValidationError(Errc::domain, "tolerance too small");
  return std::max(K, 1);
}

}  // namespace

BigReal d1_direct(const BigReal& x, const BigReal& tol) {
  const int K = terms_for(x, tol);
  const BigReal one(1L, x.precision());
  BigReal s(x.precision());
  for (int k = 1; k <= K; ++k) {
    BigReal den = ldexp(x, k);
    den += 1.0;
    s += ldexp(one / den, -k);
  }
  return s;
}

BigReal d1_direct_compensated(const BigReal& x, const BigReal& tol) {
  const int K = terms_for(x, tol);
  const BigReal one(1L, x.precision());
  BigReal s(x.precision());
  BigReal c(x.precision());
  for (int k = K; k >= 1; --k) {
    BigReal den = ldexp(x, k);
    den += 1.0;
    BigReal y = ldexp(one / den, -k) - c;
    BigReal t = s + y;
    c = (t - s) - y;
    s = std::move(t);
  }
  return s;
}

BigReal power_coefficient(int m, BigReal::Precision bits) {
  if (m < 2) throw ValidationError(Errc::domain, "power coefficients start at m = 2");
  const BigReal p = ldexp(BigReal(1L, bits), m - 1);
  BigReal c = p / (p - 1.0);
  return m % 2 == 0 ? -c : c;
}

BigReal periodic_amplitude(int n, BigReal::Precision bits) {
  const BigReal pi = const_pi(bits);
  const BigReal ln2 = const_ln2(bits);
  return (pi * 2.0 / ln2) / sinh(pi * pi * (2.0 * n) / ln2);
}

BigReal periodic_term(const BigReal& t) {
  const BigReal::Precision bits = t.precision();
  const BigReal pi = const_pi(bits);
  const BigReal ln2 = const_ln2(bits);
  const BigReal scale = pi * 2.0 / ln2;
  const BigReal limit = ldexp(BigReal(1L, bits), static_cast<long>(bits));
  BigReal s(bits);
  for (int n = 1;; ++n) {
    const BigReal sh = sinh(pi * pi * (2.0 * n) / ln2);
    s += sin(pi * t * (2.0 * n)) / sh;
    if (sh > limit) break;
  }
  return s * scale;
}

BigReal d1_expansion(const BigReal& x, const ExpansionTerms& terms) {
  if (!(x > 0.0) || !(x < 0.5)) {
    throw ValidationError(Errc::domain, "expansion is used only for 0 < x < 1/2");
  }
  if (terms.power_terms < 1) throw ValidationError(Errc::domain, "power_terms must be at least 1");
  const BigReal::Precision bits = x.precision();
  const BigReal lg = log2(x);
  BigReal s = x * lg;
  s += 1.0;
  s += x / 2.0;
  if (terms.include_periodic) s += x * periodic_term(lg);
  BigReal xm = x * x;
  for (int m = 2; m <= terms.power_terms + 1; ++m) {
    s += power_coefficient(m, bits) * xm;
    xm *= x;
  }
  return s;
}

BigReal periodic_max(int resolution, BigReal::Precision bits) {
  if (resolution < 1024) throw ValidationError(Errc::domain, "resolution must be at least 1024");
  BigReal best(bits);
  long best_j = 0;
  for (long j = 0; j < resolution; ++j) {
    const BigReal t = BigReal(static_cast<double>(j), bits) / static_cast<double>(resolution);
    const BigReal v = abs(periodic_term(t));
    if (v > best) {
      best = v;
      best_j = j;
    }
  }
  // Golden-section search for the maximum of |P| in the neighbouring cells.
  const BigReal cell = BigReal(1L, bits) / static_cast<double>(resolution);
  BigReal lo = cell * static_cast<double>(best_j - 1);
  BigReal hi = cell * static_cast<double>(best_j + 1);
  const BigReal ratio = (sqrt(BigReal(5L, bits)) - 1.0) / 2.0;
  BigReal a = hi - ratio * (hi - lo);
  BigReal b = lo + ratio * (hi - lo);
  BigReal fa = abs(periodic_term(a));
  BigReal fb = abs(periodic_term(b));
  for (int it = 0; it < 200; ++it) {
    if (fa < fb) {
      lo = a;
      a = b;
      fa = fb;
      b = lo + ratio * (hi - lo);
      fb = abs(periodic_term(b));
    } else {
      hi = b;
      b = a;
      fb = fa;
      a = hi - ratio * (hi - lo);
      fa = abs(periodic_term(a));
    }
  }
  const BigReal refined = fa > fb ? fa : fb;
  return refined > best ? refined : best;
}

}  // namespace bineuc
