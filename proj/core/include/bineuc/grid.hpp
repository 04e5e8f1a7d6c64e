#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bineuc/bigreal.hpp"

namespace bineuc {

/// Uniform grid z_i = i*h, i = 0..2^level, h = z_max / 2^level, on which
/// x = exp(-z^2) covers (exp(-z_max^2), 1].
class Grid {
 public:
  static constexpr int kMaxLevel = 24;

  Grid(BigReal z_max, int level);

  const BigReal& z_max() const noexcept { return z_max_; }
  int level() const noexcept { return level_; }
  BigReal::Precision precision() const noexcept { return z_max_.precision(); }

  /// Index of the last point, 2^level.
  std::size_t last() const noexcept { return std::size_t{1} << level_; }
  std::size_t size() const noexcept { return last() + 1; }

  BigReal h() const;
  BigReal z(std::size_t i) const;
  BigReal x(std::size_t i) const;

  /// Grid with 2^j times the step; z_max unchanged.
  Grid coarsened(int j) const;

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.level_ == b.level_ && a.z_max_ == b.z_max_ &&
           a.z_max_.precision() == b.z_max_.precision();
  }

 private:
  BigReal z_max_;
  int level_;
};

/// Samples of the complementary distribution F~ at the points of a grid:
/// values[i] = F~(exp(-z_i^2)).
struct GridFunction {
  Grid grid;
  std::vector<BigReal> values;
  int iterations = 0;
  bool converged = false;
  /// Sup-norm change of the last iteration (0 if none was run).
  double last_change = 0.0;
  /// Interpolation degree the values were produced with (odd, 2r+1).
  int degree = 9;

  /// Same samples restricted to grid.coarsened(j).
  GridFunction restricted(int j) const;
};

/// Throws grid_mismatch unless each grid is the previous one coarsened by 1.
void require_nested(const std::vector<GridFunction>& ladder);

}  // namespace bineuc
