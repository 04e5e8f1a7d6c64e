#pragma once

#include <vector>

#include "bineuc/bigreal.hpp"
#include "bineuc/grid.hpp"
#include "bineuc/richardson.hpp"

namespace bineuc {

struct ConstantEstimate {
  BigReal value;
  RichardsonTable table;
  /// False when any input function was not iterated to its tolerance.
  bool converged = true;
};

/// The fixed point on its own grid followed by count-1 successive
/// restrictions to step sizes 2h, 4h, ...
std::vector<GridFunction> nested_ladder(const GridFunction& fine, int count);

/// Number of ladder entries used for lambda when K uses r extrapolations.
inline int lambda_ladder_length(int extrapolations) { return (extrapolations + 2) / 2; }

/// b = 2 + (1/ln 2) * integral over (0,1) of F~(x)/(1-x) dx, by the
/// trapezoidal rule in z (error O(h^2)).
BigReal compute_b(const GridFunction& F);

/// K = 2/b on each grid, extrapolated on the h^2 ladder.
ConstantEstimate compute_K(const std::vector<GridFunction>& ladder);

/// lambda = f(1) estimated by F~(exp(-h^2))/h^2, extrapolated on the h^4
/// ladder.
ConstantEstimate compute_lambda(const std::vector<GridFunction>& ladder);

/// E_inf = ln 2 + integral of S(x) F(x) dx, trapezoidal in z; the k-sum in
/// S is cut once its remaining terms fall below the working precision.
BigReal compute_E_inf_raw(const GridFunction& F);

/// E_inf extrapolated on the h^2 ladder.
ConstantEstimate compute_E_inf(const std::vector<GridFunction>& ladder);

/// b = 2 - integral of lg(1-x) f(x) dx with f from the interpolant's
/// derivative, integrated in u = ln(-ln x) by the trapezoidal rule with the
/// given step. Also returns the value at twice the step.
struct DensityRouteB {
  BigReal b;
  BigReal b_coarse;
};
DensityRouteB compute_b_from_density(const GridFunction& F, double u_step = 1.0 / 16);

}  // namespace bineuc
