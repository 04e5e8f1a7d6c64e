#include "bineuc/grid.hpp"

#include <string>
#include <utility>

#include "bineuc/error.hpp"

namespace bineuc {

Grid::Grid(BigReal z_max, int level) : z_max_(std::move(z_max)), level_(level) {
  if (level_ < 1 || level_ > kMaxLevel) {
    throw ValidationError(Errc::domain, "grid level must be in [1, " +
                                            std::to_string(kMaxLevel) + "], got " +
                                            std::to_string(level_));
  }
  if (!(z_max_ > 0.0)) throw ValidationError(Errc::domain, "z_max must be positive");
}

BigReal Grid::h() const { return ldexp(z_max_, -level_); }

BigReal Grid::z(std::size_t i) const {
  BigReal r = h();
  mpfr_mul_ui(r.get(), r.get(), static_cast<unsigned long>(i), MPFR_RNDN);
  return r;
}

BigReal Grid::x(std::size_t i) const {
  BigReal zi = z(i);
  return exp(-(zi * zi));
}

Grid Grid::coarsened(int j) const {
  if (j < 0 || j >= level_) {
    throw ValidationError(Errc::grid_mismatch, "cannot coarsen level " +
                                                   std::to_string(level_) + " by " +
                                                   std::to_string(j));
  }
  return Grid(z_max_, level_ - j);
}

GridFunction GridFunction::restricted(int j) const {
  GridFunction out{grid.coarsened(j), {}, iterations, converged, last_change, degree};
  const std::size_t stride = std::size_t{1} << j;
  out.values.reserve(out.grid.size());
  for (std::size_t i = 0; i < values.size(); i += stride) out.values.push_back(values[i]);
  return out;
}

void require_nested(const std::vector<GridFunction>& ladder) {
  for (std::size_t i = 0; i + 1 < ladder.size(); ++i) {
    const Grid& fine = ladder[i].grid;
    const Grid& coarse = ladder[i + 1].grid;
    if (coarse.level() + 1 != fine.level() || !(coarse.z_max() == fine.z_max()) ||
        coarse.precision() != fine.precision()) {
      throw ValidationError(Errc::grid_mismatch,
                            "grids are not nested with step ratio 2 at entry " +
                                std::to_string(i + 1));
    }
  }
}

}  // namespace bineuc
