#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bineuc/bigreal.hpp"
#include "bineuc/density.hpp"
#include "bineuc/grid.hpp"
#include "cli11.hpp"

namespace bineuc::cli {

enum class OutputFormat { json, csv, text };

/// Settings shared by all subcommands. Built-in defaults are overridden by
/// a config file, which is overridden by flags.
struct RunConfig {
  long precision_bits = 200;
  int grid_level = 12;
  std::string z_max = "11";
  int extrapolations = 4;
  /// "auto" iterates to `tolerance`; a number runs exactly that many steps.
  std::string iterations = "auto";
  double tolerance = 1e-14;
  int max_iterations = 120;
  std::uint64_t seed = 1;
  OutputFormat format = OutputFormat::text;
  unsigned threads = 1;
  std::string cache_dir;
  bool reproducible = false;
  bool trace = false;

  Grid grid() const;
  int degree() const { return 2 * extrapolations + 1; }
  /// Fixed iteration count, or nothing for "auto".
  std::optional<int> fixed_iterations() const;
  IterationOptions iteration_options() const;
};

/// Registers the shared flags (and --config) on the top-level app.
void add_run_flags(CLI::App& app, RunConfig& cfg);

}  // namespace bineuc::cli
