#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "bineuc/grid.hpp"
#include "bineuc/interpolation.hpp"

namespace bineuc {

struct SampleConfig {
  /// Inputs are odd and uniform in (0, 2^bound_exponent).
  int bound_exponent = 40;
  std::uint64_t sample_count = 100000;
  std::uint64_t seed = 1;
  /// Ratio snapshots x_0..x_max_step are kept per pair.
  int max_step = 8;
  unsigned threads = 1;
};

/// Throws on bound_exponent < 4, sample_count < 1 or max_step < 0.
void validate(const SampleConfig& cfg);

struct EmpiricalStats {
  double mean_b3 = 0.0;
  double mean_shift_total = 0.0;
  /// Relative frequency of each shift k over all subtract-shift steps.
  std::map<unsigned, double> val2_histogram;
  /// Same, restricted to steps whose smaller operand is at least
  /// 2^ceil(bound_exponent/2).
  std::map<unsigned, double> val2_large_operand;
  std::uint64_t val2_large_operand_count = 0;
  /// 1024-bin relative histograms of x_n, n = 0..max_step.
  std::vector<std::vector<double>> ratio_histograms;
  /// Sorted samples of x_n (pairs still running at step n only).
  std::vector<std::vector<double>> ratio_samples;
  std::uint64_t sample_count = 0;
};

inline constexpr int kRatioBins = 1024;
inline constexpr std::uint64_t kSamplesPerBlock = 8192;

/// Deterministic for a fixed config; independent of cfg.threads. Samples are
/// drawn in blocks of kSamplesPerBlock, each from its own generator seeded by
/// (seed, block index).
EmpiricalStats simulate(const SampleConfig& cfg);

/// Chi-square p-value of a shift histogram against P(k) = 2^-k, k >= 1, with
/// k >= tail_from pooled. `count` is the number of observations.
double val2_chi_square_p(const std::map<unsigned, double>& histogram, std::uint64_t count,
                         unsigned tail_from = 12);

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double shift_slope = 0.0;
  double shift_intercept = 0.0;
  std::vector<int> exponents;
  std::vector<double> mean_b3;
  std::vector<double> mean_shift_total;
};

/// Least-squares line of mean_b3 (and mean_shift_total) against the bound
/// exponent. Rejects fewer than two distinct exponents.
SlopeFit iteration_slope(const std::vector<int>& exponents, const SampleConfig& base);

/// Kolmogorov-Smirnov distance between sorted samples and a distribution
/// function.
template <class Cdf>
double ks_distance(const std::vector<double>& sorted, const Cdf& cdf) {
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double F = cdf(sorted[i]);
    d = std::max({d, F - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - F});
  }
  return d;
}

/// Sup distance between the empirical distribution of x_n in `stats` and the
/// model F_n = 1 - F~_n given on a grid. Rejects n beyond the recorded
/// snapshots.
double compare_distribution(int n, const EmpiricalStats& stats, const GridFunction& model);

/// Runs simulate(cfg) and compares.
double compare_distribution(int n, const SampleConfig& cfg, const GridFunction& model);

/// Asymptotic 1% critical value of the KS statistic, 1.628/sqrt(n).
double ks_critical_1pct(std::uint64_t n);

}  // namespace bineuc
