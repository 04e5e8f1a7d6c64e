#pragma once

#include "bineuc/density.hpp"

namespace bineuc::testing {

inline constexpr BigReal::Precision kBits = 128;

/// Converged F~ on a level-9 grid over [0, 11], shared by the test suites.
inline const GridFunction& fixed_point_level9() {
  static const GridFunction F = [] {
    IterationOptions opts;
    opts.threads = 2;
    return solve_fixed_point(Grid(BigReal(11L, kBits), 9), opts);
  }();
  return F;
}

inline constexpr double kK = 0.70597124610191639152;
inline constexpr double kLambda = 0.39792268118831664407;

}  // namespace bineuc::testing
