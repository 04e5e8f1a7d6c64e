#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "bineuc/bigreal.hpp"
#include "bineuc/grid.hpp"
#include "bineuc/interpolation.hpp"

namespace bineuc {

struct IterationOptions {
  /// Odd interpolation degree 2r+1.
  int degree = 9;
  /// Stop when the sup-norm change drops below this (ignored when
  /// fixed_iterations > 0).
  double tolerance = 1e-14;
  int max_iterations = 120;
  /// Run exactly this many steps when positive.
  int fixed_iterations = 0;
  unsigned threads = 1;
  /// Called after every step with (step, sup-norm change).
  std::function<void(int, double)> on_step;
};

/// Precomputed argument table for one step of the F~ recurrence on a grid.
///
/// For every grid point and every k up to the truncation index, both
/// recurrence arguments are mapped to z' and stored as (stencil start,
/// offset within the stencil). Arguments at or past z_max contribute the
/// exact tail value 1 and are folded into a per-point constant.
class IterationPlan {
 public:
  IterationPlan(const Grid& grid, int degree, unsigned threads = 1);
  ~IterationPlan();
  IterationPlan(IterationPlan&&) noexcept;
  IterationPlan& operator=(IterationPlan&&) noexcept;

  const Grid& grid() const noexcept;
  int degree() const noexcept;
  /// Largest k kept in the sum; the neglected tail is below 2^-k_max.
  int k_max() const noexcept;
  std::size_t term_count() const noexcept;

  /// One application of the recurrence. Returns the new values and stores
  /// the sup-norm change in *change when given.
  std::vector<BigReal> apply(const std::vector<BigReal>& values, unsigned threads,
                             double* change = nullptr) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// F~_0(x) = 1 - x on the grid.
GridFunction initial_ftilde(const Grid& grid, int degree = 9);

/// F~_steps, starting from F~_0.
GridFunction iterate_ftilde(const Grid& grid, int steps, const IterationOptions& opts = {});

/// Iterates to the fixed point per `opts`. The result's `converged` flag is
/// false when the cap was reached first.
GridFunction solve_fixed_point(const Grid& grid, const IterationOptions& opts = {});

/// Continues iterating from `start` on its own grid.
GridFunction continue_iteration(const GridFunction& start, const IterationOptions& opts);

/// Interpolated F~ at z (any z >= 0); 1 at and beyond z_max. Exact at grid
/// points.
BigReal eval_ftilde_z(const GridFunction& F, const BigReal& z);

/// Value and z-derivative of the interpolant.
LocalFit<BigReal> eval_ftilde_z_slope(const GridFunction& F, const BigReal& z);

/// F~(x) for x in (0, 1].
BigReal eval_ftilde(const GridFunction& F, const BigReal& x);

/// F~ on (0, inf) using F~(1/x) = -F~(x) for x > 1.
BigReal eval_ftilde_extended(const GridFunction& F, const BigReal& x);

/// Density f(x) = F'(x) = -dF~/dx, from the interpolant's derivative.
BigReal density_at(const GridFunction& F, const BigReal& x);

/// dF~/dy at y = z^2, where x = exp(-y).
BigReal ftilde_dy(const GridFunction& F, const BigReal& z);

/// Density expressed in z: f(exp(-z^2)), with its limit lambda at z = 0.
BigReal density_at_z(const GridFunction& F, const BigReal& z);

/// Double-precision interpolant of F~ in z (for the machine-precision
/// modules).
NodalInterpolant ftilde_interpolant(const GridFunction& F);

/// Largest decrease between consecutive samples (0 when non-decreasing in z)
/// and the largest excursion outside [0, 1].
struct ShapeReport {
  double max_decrease = 0.0;
  double max_out_of_range = 0.0;
};
ShapeReport check_shape(const GridFunction& F);

}  // namespace bineuc
