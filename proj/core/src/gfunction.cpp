#include "bineuc/gfunction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>

#include "bineuc/density.hpp"
#include "bineuc/error.hpp"

namespace bineuc {

namespace {

constexpr int kMachineTerms = 64;

double gauss(const auto& fn, double lo, double hi) {
  return boost::math::quadrature::gauss<double, 20>::integrate(fn, lo, hi);
}

/// Integral of fn over [lo, hi] split at powers of two of (v).
template <class Fn>
double geometric_integral(const Fn& fn, double lo, double hi) {
  double s = 0.0;
  for (double a = lo; a < hi;) {
    const double b = std::min(hi, 2.0 * a);
    s += gauss(fn, a, b);
    a = b;
  }
  return s;
}

}  // namespace

GFunction::GFunction(const GridFunction& F) : GFunction(ftilde_interpolant(F)) {}

GFunction::GFunction(NodalInterpolant ftilde)
    : ftilde_(std::move(ftilde)), z_max2_(ftilde_.z_max() * ftilde_.z_max()) {}

double GFunction::ftilde_y(double y) const {
  if (y >= z_max2_) return 1.0;
  return ftilde_(std::sqrt(y));
}

double GFunction::operator()(double x) const {
  if (!(x > 0.0)) throw ValidationError(Errc::domain, "G is defined for x > 0");
  // Past k_last the terms sum to at most 2^-k_last; they are taken as 1.
  const int k_last = kMachineTerms + std::max(0, static_cast<int>(std::ceil(-std::log2(x))));
  double s = 0.0;
  for (int k = 1; k <= k_last; ++k) {
    const double y = std::log1p(std::ldexp(x, k));
    if (y >= z_max2_) {
      // Every remaining term has F~ = 1.
      return s + std::ldexp(1.0, 1 - k);
    }
    s += std::ldexp(ftilde_(std::sqrt(y)), -k);
  }
  return s + std::ldexp(1.0, -k_last);
}

BigReal g_value(const GridFunction& F, const BigReal& x) {
  require_same_precision(x, F.grid.z_max());
  if (!(x > 0.0)) throw ValidationError(Errc::domain, "G is defined for x > 0");
  const BigReal::Precision prec = x.precision();
  const int k_max = static_cast<int>(prec) + 8;
  BigReal s(prec);
  for (int k = 1; k <= k_max; ++k) {
    const BigReal z = sqrt(log1p(ldexp(x, k)));
    if (z >= F.grid.z_max()) return s + ldexp(BigReal(1L, prec), 1 - k);
    s += ldexp(eval_ftilde_z(F, z), -k);
  }
  return s + ldexp(BigReal(1L, prec), -k_max);
}

BigReal g1_direct(const GridFunction& F) {
  const BigReal::Precision prec = F.grid.precision();
  const int k_max = static_cast<int>(prec) / 2 + 16;
  const BigReal one(1L, prec);
  BigReal s(prec);
  for (int k = 1; k <= k_max; ++k) {
    const BigReal p = ldexp(one, k);
    const BigReal w = 1.0 / (p + 1.0);
    s += w * w * density_at_z(F, sqrt(log1p(p)));
  }
  return s;
}

double odd_sum_estimate(const GFunction& G, double lo, double hi, double shift) {
  auto phi = [&](double a) { return G(1.0 / (a + shift)); };
  auto dphi = [&](double a) {
    const double d = 1e-3 * (a + shift);
    return (phi(a + d) - phi(a - d)) / (2.0 * d);
  };
  const double integral = geometric_integral(phi, lo, hi);
  return 0.5 * integral - (dphi(hi) - dphi(lo)) / 12.0;
}

OctaveSums OctaveSums::compute(const GFunction& G, int exact_exponent, int octaves) {
  if (exact_exponent < 1 || exact_exponent > 40 || octaves < exact_exponent || octaves > 1000) {
    throw ValidationError(Errc::domain, "invalid octave range");
  }
  OctaveSums out;
  out.exact_exponent = exact_exponent;
  out.sums.reserve(octaves);
  out.sums.push_back(G(1.0));
  for (int j = 1; j < octaves; ++j) {
    const double lo = std::ldexp(1.0, j);
    const double hi = 2.0 * lo;
    if (j < exact_exponent) {
      double s = 0.0;
      for (std::uint64_t a = (std::uint64_t{1} << j) + 1; a < (std::uint64_t{2} << j); a += 2) {
        s += G(1.0 / static_cast<double>(a));
      }
      out.sums.push_back(s);
    } else {
      out.sums.push_back(odd_sum_estimate(G, lo, hi, 0.0));
    }
  }
  return out;
}

ValleeSum vallee_sum(const GFunction& G, const Natural& a_max, int tail_octaves) {
  if (a_max < 3) throw ValidationError(Errc::domain, "a_max must be at least 3");
  if (!is_odd(a_max)) throw ValidationError(Errc::even_input, "a_max must be odd");
  if (a_max >= (Natural(1) << 40)) throw ValidationError(Errc::domain, "a_max must be below 2^40");
  const std::uint64_t top = a_max.convert_to<std::uint64_t>();

  ValleeSum out;
  double prev = 0.0;
  int octave = 0;
  double weight = 1.0;
  for (std::uint64_t a = 1; a <= top; a += 2) {
    while ((std::uint64_t{2} << octave) <= a) {
      out.octave_partials.push_back(out.partial);
      ++octave;
      weight = std::ldexp(1.0, -octave);
    }
    out.partial += weight * G(1.0 / static_cast<double>(a));
    if (out.partial < prev) out.monotone = false;
    prev = out.partial;
  }
  if (top + 1 == (std::uint64_t{2} << octave)) {
    out.octave_partials.push_back(out.partial);
  }
  for (std::size_t i = 1; i < out.octave_partials.size(); ++i) {
    if (!(out.octave_partials[i] > out.octave_partials[i - 1])) out.monotone = false;
  }

  // Remainder of the current octave, then whole octaves.
  const double next_even = static_cast<double>(top + 1);
  double hi = std::ldexp(1.0, octave + 1);
  if (next_even < hi) out.tail_estimate += std::ldexp(odd_sum_estimate(G, next_even, hi, 0.0), -octave);
  for (int j = octave + 1; j < octave + 1 + tail_octaves; ++j) {
    const double lo = std::ldexp(1.0, j);
    out.tail_estimate += std::ldexp(odd_sum_estimate(G, lo, 2.0 * lo, 0.0), -j);
  }
  out.raw_remainder = 1.0 - out.partial;
  out.corrected_remainder = out.raw_remainder - out.tail_estimate;
  return out;
}

double k_from_vallee(double g1, double weighted_sum) {
  const double pi = std::numbers::pi;
  return 2.0 * std::numbers::ln2 / (pi * pi * g1) * weighted_sum;
}

std::uint64_t weight_identity_failure(std::uint64_t limit) {
  // Scale by 2^K: sum_{k=m}^{K} 2^(K-k) + 2^K * sum_{k>K} 2^-k, the last being 1.
  constexpr unsigned K = 96;
  for (std::uint64_t a = 1; a < limit; a += 2) {
    Natural scaled = 1;
    for (unsigned k = 1; k <= K; ++k) {
      if ((Natural(1) << k) > a) scaled += Natural(1) << (K - k);
    }
    unsigned floor_lg = 0;
    while ((a >> (floor_lg + 1)) != 0) ++floor_lg;
    if (scaled != (Natural(1) << (K - floor_lg))) return a;
  }
  return 0;
}

double gsum_rhs(const GFunction& G, const OctaveSums& octaves, double x, int k_max,
                int exact_levels) {
  if (!(x > 0.0)) throw ValidationError(Errc::domain, "x must be positive");
  if (k_max < 1 || k_max > static_cast<int>(octaves.sums.size())) {
    throw ValidationError(Errc::domain, "k_max exceeds the available octave sums");
  }
  constexpr double kExactBelow = 1024.0;
  double total = 0.0;
  double a_sum = 0.0;  // sum over odd a < 2^k of G(1/a)
  for (int k = 1; k <= k_max; ++k) {
    a_sum += octaves.sums[k - 1];
    const double c = std::ldexp(x, k);
    const double top = std::ldexp(1.0, k);
    double b_sum = 0.0;
    if (k <= exact_levels) {
      for (double a = 1.0; a < top; a += 2.0) b_sum += G(1.0 / (a + c));
    } else {
      for (double a = 1.0; a < kExactBelow; a += 2.0) b_sum += G(1.0 / (a + c));
      b_sum += odd_sum_estimate(G, kExactBelow, top, c);
    }
    total += std::ldexp(a_sum - b_sum, -k);
  }
  return total;
}

}  // namespace bineuc
