#pragma once

#include <vector>

#include "bineuc/bigreal.hpp"

namespace bineuc {

/// Raw estimates A(h_i) at step sizes h_0 < h_1 < ... with h_{i+1} = 2 h_i,
/// and the triangular array of extrapolants built from them.
///
/// columns[c][i] combines raw[i..i+c] and removes the error terms
/// h^p, h^2p, ..., h^cp, where p is the power step.
struct RichardsonTable {
  std::vector<BigReal> steps;
  std::vector<BigReal> raw;
  int power_step = 2;
  std::vector<std::vector<BigReal>> columns;

  void add(BigReal step, BigReal value);

  /// Top entry of the last column.
  const BigReal& best() const;

  /// For column c: ratios (T[i+2] - T[i+1]) / (T[i+1] - T[i]). Under the
  /// error model these approach 2^(p (c+1)).
  std::vector<double> difference_ratios(int column) const;
};

/// Fills table.columns for the given power step and returns the most
/// extrapolated value. Rejects step sizes not in exact ratio 2.
BigReal richardson(RichardsonTable& table, int power_step);

}  // namespace bineuc
