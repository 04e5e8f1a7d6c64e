#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "bineuc/density.hpp"
#include "bineuc/grid.hpp"

namespace bineuc {

/// Versioned text format:
///
///   bineuc-gridfunction 1
///   z_max <decimal>
///   level <int>
///   precision_bits <int>
///   degree <int>
///   iterations <int>
///   converged <0|1>
///   last_change <double>
///   points <count>
///   <z_i> <value_i>      (one line per point)
///
/// Decimals carry enough digits to read back bit-exactly at the recorded
/// precision.
void write_grid_function(std::ostream& os, const GridFunction& F);
GridFunction read_grid_function(std::istream& is);

void save_grid_function(const std::filesystem::path& path, const GridFunction& F);
GridFunction load_grid_function(const std::filesystem::path& path);

/// File name under a cache directory for a fixed point with these
/// parameters.
std::string cache_file_name(const Grid& grid, int degree);

/// Fixed point for `grid` and `opts`, reusing a file under `cache_dir` when
/// one with the same parameters exists. A cached function that meets the
/// request is returned as is; one that falls short is iterated further.
/// The result is written back whenever iterations were run.
GridFunction cached_fixed_point(const std::filesystem::path& cache_dir, const Grid& grid,
                                const IterationOptions& opts);

}  // namespace bineuc
