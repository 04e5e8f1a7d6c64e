#include "run_config.hpp"

#include <map>

#include "bineuc/error.hpp"

namespace bineuc::cli {

Grid RunConfig::grid() const {
  BigReal zm(precision_bits);
  try {
    zm = BigReal::from_string(z_max, precision_bits);
  } catch (const ValidationError&) {
    throw ValidationError(Errc::config, "--z-max: not a decimal number: " + z_max);
  }
  if (!(zm > 0.0)) throw ValidationError(Errc::config, "--z-max: must be positive");
  return Grid(zm, grid_level);
}

std::optional<int> RunConfig::fixed_iterations() const {
  if (iterations == "auto") return std::nullopt;
  return std::stoi(iterations);
}

IterationOptions RunConfig::iteration_options() const {
  IterationOptions opts;
  opts.degree = degree();
  opts.tolerance = tolerance;
  opts.max_iterations = max_iterations;
  opts.fixed_iterations = fixed_iterations().value_or(0);
  opts.threads = threads;
  return opts;
}

void add_run_flags(CLI::App& app, RunConfig& cfg) {
  app.set_config("--config", "", "Read defaults from a file of 'key = value' lines")
      ->check(CLI::ExistingFile);
  app.allow_config_extras(false);

  app.add_option("--precision-bits", cfg.precision_bits, "Working precision in bits")
      ->check(CLI::Range(64L, 1L << 20))
      ->capture_default_str();
  app.add_option("--grid-level", cfg.grid_level, "Grid has 2^level steps on [0, z_max]")
      ->check(CLI::Range(6, Grid::kMaxLevel))
      ->capture_default_str();
  app.add_option("--z-max", cfg.z_max, "Upper end of the z grid")->capture_default_str();
  app.add_option("--extrapolations", cfg.extrapolations,
                 "Richardson extrapolations r; interpolation degree is 2r+1")
      ->check(CLI::Range(0, 15))
      ->capture_default_str();
  app.add_option("--iterations", cfg.iterations, "Fixed-point iterations: a count or 'auto'")
      ->check(
          [](const std::string& v) -> std::string {
            if (v == "auto") return {};
            try {
              std::size_t used = 0;
              const int n = std::stoi(v, &used);
              if (used == v.size() && n >= 1 && n <= 100000) return {};
            } catch (const std::exception&) {
            }
            return "must be a positive integer or 'auto', got '" + v + "'";
          },
          "COUNT|auto")
      ->capture_default_str();
  app.add_option("--tolerance", cfg.tolerance, "Stop when the sup-norm change is below this")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-iterations", cfg.max_iterations, "Iteration cap under --iterations auto")
      ->check(CLI::Range(1, 100000))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for sampling")->capture_default_str();
  const std::map<std::string, OutputFormat> formats = {
      {"json", OutputFormat::json}, {"csv", OutputFormat::csv}, {"text", OutputFormat::text}};
  app.add_option("--format", cfg.format, "Output format: json, csv or text")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("text");
  app.add_option("--threads", cfg.threads, "Upper bound on worker threads")
      ->check(CLI::Range(1U, 1024U))
      ->capture_default_str();
  app.add_option("--cache-dir", cfg.cache_dir, "Directory for converged grid functions");
  app.add_flag("--reproducible", cfg.reproducible, "Suppress timing lines");
  app.add_flag("--trace", cfg.trace, "Include algorithm traces and iteration progress");
}

}  // namespace bineuc::cli
