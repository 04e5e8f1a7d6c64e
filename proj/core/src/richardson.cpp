#include "bineuc/richardson.hpp"

#include <string>
#include <utility>

#include "bineuc/error.hpp"

namespace bineuc {

void RichardsonTable::add(BigReal step, BigReal value) {
  steps.push_back(std::move(step));
  raw.push_back(std::move(value));
}

const BigReal& RichardsonTable::best() const {
  if (columns.empty() || columns.back().empty()) {
    throw ValidationError(Errc::domain, "Richardson table has not been extrapolated");
  }
  return columns.back().front();
}

std::vector<double> RichardsonTable::difference_ratios(int column) const {
  std::vector<double> out;
  if (column < 0 || static_cast<std::size_t>(column) >= columns.size()) return out;
  const auto& col = columns[column];
  for (std::size_t i = 0; i + 2 < col.size(); ++i) {
    const BigReal num = col[i + 2] - col[i + 1];
    const BigReal den = col[i + 1] - col[i];
    out.push_back((num / den).to_double());
  }
  return out;
}

BigReal richardson(RichardsonTable& table, int power_step) {
  if (table.raw.empty() || table.raw.size() != table.steps.size()) {
    throw ValidationError(Errc::domain, "Richardson table needs matching steps and estimates");
  }
  if (power_step < 1 || power_step > 64) {
    throw ValidationError(Errc::domain, "power step must be in [1, 64]");
  }
  for (std::size_t i = 0; i + 1 < table.steps.size(); ++i) {
    const BigReal twice = ldexp(table.steps[i], 1);
    if (!(twice == table.steps[i + 1])) {
      throw ValidationError(Errc::grid_mismatch,
                            "step sizes are not in ratio 2 at entry " + std::to_string(i + 1));
    }
  }
  table.power_step = power_step;
  table.columns.clear();
  table.columns.push_back(table.raw);
  for (std::size_t c = 1; c < table.raw.size(); ++c) {
    const auto& prev = table.columns.back();
    const long shift = static_cast<long>(power_step) * static_cast<long>(c);
    std::vector<BigReal> next;
    next.reserve(prev.size() - 1);
    for (std::size_t i = 0; i + 1 < prev.size(); ++i) {
      // (2^shift T_fine - T_coarse) / (2^shift - 1)
      BigReal num = ldexp(prev[i], shift) - prev[i + 1];
      BigReal den = ldexp(BigReal(1L, num.precision()), shift) - 1.0;
      next.push_back(num / den);
    }
    table.columns.push_back(std::move(next));
  }
  return table.best();
}

}  // namespace bineuc
