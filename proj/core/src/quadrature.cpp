#include "bineuc/constants.hpp"

#include <cmath>
#include <string>

#include "bineuc/density.hpp"
#include "bineuc/error.hpp"

namespace bineuc {

namespace {

bool all_converged(const std::vector<GridFunction>& ladder) {
  for (const auto& F : ladder) {
    if (!F.converged) return false;
  }
  return true;
}

void require_ladder(const std::vector<GridFunction>& ladder, std::size_t min_size) {
  if (ladder.size() < min_size) {
    throw ValidationError(Errc::grid_mismatch, "need at least " + std::to_string(min_size) +
                                                   " nested grids, got " +
                                                   std::to_string(ladder.size()));
  }
  require_nested(ladder);
}

/// Trapezoidal sum over the grid of integrand(i); the z = 0 node is skipped
/// (every integrand used here carries the factor 2z).
template <class Fn>
BigReal trapezoid_z(const Grid& g, Fn&& integrand) {
  BigReal sum(g.precision());
  for (std::size_t i = 1; i < g.size(); ++i) {
    BigReal v = integrand(i);
    if (i == g.last()) v /= 2.0;
    sum += v;
  }
  return sum * g.h();
}

}  // namespace

std::vector<GridFunction> nested_ladder(const GridFunction& fine, int count) {
  if (count < 1 || count > fine.grid.level()) {
    throw ValidationError(Errc::grid_mismatch, "ladder length " + std::to_string(count) +
                                                   " does not fit grid level " +
                                                   std::to_string(fine.grid.level()));
  }
  std::vector<GridFunction> out;
  out.reserve(count);
  out.push_back(fine);
  for (int j = 1; j < count; ++j) out.push_back(fine.restricted(j));
  return out;
}

BigReal compute_b(const GridFunction& F) {
  const Grid& g = F.grid;
  const BigReal sum = trapezoid_z(g, [&](std::size_t i) {
    const BigReal z = g.z(i);
    const BigReal z2 = z * z;
    BigReal one_minus_x(g.precision());
    mpfr_neg(one_minus_x.get(), z2.get(), MPFR_RNDN);
    mpfr_expm1(one_minus_x.get(), one_minus_x.get(), MPFR_RNDN);
    one_minus_x = -one_minus_x;
    BigReal v = F.values[i] / one_minus_x;
    v *= z * 2.0;
    v *= exp(-z2);
    return v;
  });
  return 2.0 + sum / const_ln2(g.precision());
}

ConstantEstimate compute_K(const std::vector<GridFunction>& ladder) {
  require_ladder(ladder, 1);
  ConstantEstimate out{BigReal(ladder.front().grid.precision()), {}, all_converged(ladder)};
  for (const auto& F : ladder) out.table.add(F.grid.h(), 2.0 / compute_b(F));
  out.value = richardson(out.table, 2);
  return out;
}

ConstantEstimate compute_lambda(const std::vector<GridFunction>& ladder) {
  require_ladder(ladder, 1);
  ConstantEstimate out{BigReal(ladder.front().grid.precision()), {}, all_converged(ladder)};
  for (const auto& F : ladder) {
    const BigReal h = F.grid.h();
    out.table.add(h, F.values[1] / (h * h));
  }
  out.value = richardson(out.table, 4);
  return out;
}

BigReal compute_E_inf_raw(const GridFunction& F) {
  const Grid& g = F.grid;
  const BigReal::Precision prec = g.precision();
  const BigReal one(1L, prec);
  const BigReal sum = trapezoid_z(g, [&](std::size_t i) {
    const BigReal z = g.z(i);
    const BigReal x = exp(-(z * z));
    // S(x) = sum_{k>=2} (1 - 2^-k)/(1 + (2^k - 1) x) - 1/(2(1+x))
    BigReal s = -(0.5 / (x + 1.0));
    const double lg_inv_x = (z * z).to_double() / std::log(2.0);
    const int k_last = static_cast<int>(lg_inv_x) + static_cast<int>(prec) + 12;
    for (int k = 2; k <= k_last; ++k) {
      const BigReal pk = ldexp(one, k);
      BigReal num = 1.0 - ldexp(one, -k);
      BigReal den = (pk - 1.0) * x;
      den += 1.0;
      s += num / den;
    }
    BigReal v = s * (1.0 - F.values[i]);
    v *= z * 2.0;
    v *= x;
    return v;
  });
  return const_ln2(prec) + sum;
}

ConstantEstimate compute_E_inf(const std::vector<GridFunction>& ladder) {
  require_ladder(ladder, 1);
  ConstantEstimate out{BigReal(ladder.front().grid.precision()), {}, all_converged(ladder)};
  for (const auto& F : ladder) out.table.add(F.grid.h(), compute_E_inf_raw(F));
  out.value = richardson(out.table, 2);
  return out;
}

DensityRouteB compute_b_from_density(const GridFunction& F, double u_step) {
  if (!(u_step > 0.0) || u_step > 1.0) throw ValidationError(Errc::domain, "u step must be in (0, 1]");
  const BigReal::Precision prec = F.grid.precision();
  const BigReal ln2 = const_ln2(prec);
  const BigReal zmax = F.grid.z_max();
  const BigReal u_hi = log(zmax * zmax);
  const double u_lo = -64.0;
  long n = static_cast<long>(std::ceil((u_hi.to_double() - u_lo) / u_step));
  n += n % 2;
  // Step chosen so both ends land on nodes.
  BigReal du = (u_hi - u_lo) / static_cast<double>(n);
  BigReal fine(prec);
  BigReal coarse(prec);
  for (long j = 0; j <= n; ++j) {
    BigReal u = du * static_cast<double>(j);
    u += u_lo;
    const BigReal y = exp(u);
    const BigReal z = sqrt(y);
    // psi'(y) = dF~/dz / (2z)
    BigReal w = z < zmax ? ftilde_dy(F, z) : BigReal(prec);
    BigReal em1(prec);
    mpfr_neg(em1.get(), y.get(), MPFR_RNDN);
    mpfr_expm1(em1.get(), em1.get(), MPFR_RNDN);
    // -lg(1 - e^-y)
    w *= -(log(-em1) / ln2);
    w *= y;
    if (j == 0 || j == n) w /= 2.0;
    fine += w;
    if (j % 2 == 0) coarse += w;
  }
  return {2.0 + fine * du, 2.0 + coarse * (du * 2.0)};
}

}  // namespace bineuc
