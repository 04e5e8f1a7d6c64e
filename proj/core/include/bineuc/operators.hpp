#pragma once

#include <functional>
#include <vector>

#include "bineuc/grid.hpp"
#include "bineuc/interpolation.hpp"

namespace bineuc {

/// A function on (0, 1] together with its cumulative C(x) = integral of the
/// function from 0 to x, when known. Operators applied to a Density return
/// new Densities that evaluate lazily.
struct Density {
  std::function<double(double)> f;
  std::function<double(double)> cumulative;

  double operator()(double x) const { return f(x); }
  bool has_cumulative() const { return static_cast<bool>(cumulative); }
};

/// f = 1 on [0, 1].
Density uniform_density();

/// Density samples f(exp(-z_i^2)) of the fixed point on its grid, with the
/// distribution F = 1 - F~ alongside, both at machine precision.
struct DensityGrid {
  NodalInterpolant density;       // f in z
  NodalInterpolant distribution;  // F in z

  /// Where F falls below 2^(-precision/3) the density is continued
  /// linearly in y = z^2; that value is also the tail beyond z_max.
  static DensityGrid from_fixed_point(const GridFunction& F);
  Density as_density() const;
  double min_value() const;
};

struct OperatorOptions {
  /// k-sums for B, U and U~ run to max(min_terms, lg(1/x) + extra_terms).
  int min_terms = 64;
  int extra_terms = 40;
  /// V: the odd-a sum is done term by term for k <= exact_levels and by
  /// the midpoint Euler-Maclaurin formula up to max_levels.
  int exact_levels = 12;
  int max_levels = 60;
};

Density apply_B2(const Density& f, const OperatorOptions& opts = {});
Density apply_U2(const Density& f, const OperatorOptions& opts = {});
Density apply_Utilde2(const Density& f, const OperatorOptions& opts = {});
/// Needs f.cumulative for the Euler-Maclaurin tail; the result has none.
Density apply_V2(const Density& f, const OperatorOptions& opts = {});

/// Integral over (0, 1) in z with x = exp(-z^2): 20-point Gauss-Legendre
/// on points/20 equal panels of [0, z_max].
double l1_norm(const Density& f, double z_max = 11.0, int points = 8192);

/// x_j = 1/8 + (7/8) j/15, j = 0..15.
std::vector<double> identity_sample_points();

/// Largest absolute residuals over the sample points.
struct IdentityResiduals {
  double additivity = 0.0;  // (U + U~) f - B f
  double lemma = 0.0;       // V f - V U~ f - U f
  double theorem = 0.0;     // (V - I) U f - V (B - I) f
};
IdentityResiduals operator_residuals(const Density& f, const std::vector<double>& points,
                                     const OperatorOptions& opts = {});

}  // namespace bineuc
