#include "bineuc/empirics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <thread>

#include <boost/math/distributions/chi_squared.hpp>

#include "bineuc/density.hpp"
#include "bineuc/error.hpp"
#include "bineuc/gcd.hpp"

namespace bineuc {

namespace {

struct BlockTally {
  std::uint64_t samples = 0;
  std::uint64_t b3 = 0;
  std::uint64_t shifts = 0;
  std::map<unsigned, std::uint64_t> val2;
  std::map<unsigned, std::uint64_t> val2_large;
  std::vector<std::vector<double>> ratios;
};

template <GcdWord Word>
Word draw_odd(std::mt19937_64& rng, int e) {
  if constexpr (std::is_same_v<Word, std::uint64_t>) {
    const std::uint64_t mask = (std::uint64_t{1} << e) - 1;
    std::uint64_t u = 0;
    do {
      u = rng() & mask;
    } while (u == 0);
    return u | 1U;
  } else {
    Natural u;
    do {
      u = 0;
      for (int bits = 0; bits < e; bits += 64) u = (u << 64) | Natural(rng());
      u &= (Natural(1) << e) - 1;
    } while (u.is_zero());
    return u | 1;
  }
}

template <GcdWord Word>
double to_double(const Word& w) {
  if constexpr (std::is_same_v<Word, std::uint64_t>) {
    return static_cast<double>(w);
  } else {
    return w.template convert_to<double>();
  }
}

template <GcdWord Word>
void run_block(const SampleConfig& cfg, std::uint64_t block, BlockTally& tally) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  std::mt19937_64 rng(seq);
  const std::uint64_t first = block * kSamplesPerBlock;
  const std::uint64_t count = std::min(kSamplesPerBlock, cfg.sample_count - first);
  const Word large = Word(1) << ((cfg.bound_exponent + 1) / 2);
  tally.ratios.assign(cfg.max_step + 1, {});
  TraceOptions opts;
  opts.max_snapshots = static_cast<std::size_t>(cfg.max_step) + 1;
  opts.record_shifts = true;
  for (std::uint64_t s = 0; s < count; ++s) {
    Word u = draw_odd<Word>(rng, cfg.bound_exponent);
    Word v = draw_odd<Word>(rng, cfg.bound_exponent);
    // Smaller operand before each step, for the large-operand histogram.
    std::vector<bool> big_step;
    {
      Word a = u;
      Word b = v;
      while (a != b) {
        const Word m = a < b ? a : b;
        big_step.push_back(m >= large);
        Word t = a > b ? Word(a - b) : Word(b - a);
        t >>= trailing_zeros(t);
        if (a >= b) {
          a = std::move(t);
        } else {
          b = std::move(t);
        }
      }
    }
    const auto res = binary_gcd_odd<Word>(std::move(u), std::move(v), opts);
    ++tally.samples;
    tally.b3 += res.trace.b3_count;
    tally.shifts += res.trace.shift_total;
    for (std::size_t i = 0; i < res.trace.shifts.size(); ++i) {
      const unsigned k = res.trace.shifts[i];
      ++tally.val2[k];
      if (big_step[i]) ++tally.val2_large[k];
    }
    for (const auto& snap : res.trace.ratio_snapshots) {
      if (snap.step > static_cast<std::uint64_t>(cfg.max_step)) break;
      tally.ratios[snap.step].push_back(to_double(snap.numerator) / to_double(snap.denominator));
    }
  }
}

std::map<unsigned, double> normalize(const std::map<unsigned, std::uint64_t>& counts,
                                     std::uint64_t* total_out) {
  std::uint64_t total = 0;
  for (const auto& [k, c] : counts) total += c;
  std::map<unsigned, double> out;
  for (const auto& [k, c] : counts) out[k] = static_cast<double>(c) / static_cast<double>(total);
  if (total_out != nullptr) *total_out = total;
  return out;
}

}  // namespace

void validate(const SampleConfig& cfg) {
  if (cfg.bound_exponent < 4) throw ValidationError(Errc::config, "bound_exponent must be at least 4");
  if (cfg.bound_exponent > 4096) throw ValidationError(Errc::config, "bound_exponent must be at most 4096");
  if (cfg.sample_count < 1) throw ValidationError(Errc::config, "sample_count must be at least 1");
  if (cfg.max_step < 0 || cfg.max_step > 1000) throw ValidationError(Errc::config, "max_step must be in [0, 1000]");
}

EmpiricalStats simulate(const SampleConfig& cfg) {
  validate(cfg);
  const std::uint64_t blocks = (cfg.sample_count + kSamplesPerBlock - 1) / kSamplesPerBlock;
  std::vector<BlockTally> tallies(blocks);
  const bool small = cfg.bound_exponent <= 62;
  auto work = [&](std::uint64_t b) {
    if (small) {
      run_block<std::uint64_t>(cfg, b, tallies[b]);
    } else {
      run_block<Natural>(cfg, b, tallies[b]);
    }
  };
  const unsigned threads = std::max(1U, cfg.threads);
  if (threads == 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) work(b);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t b = w; b < blocks; b += threads) work(b);
      });
    }
    for (auto& t : pool) t.join();
  }

  // Merge in block order.
  BlockTally all;
  all.ratios.assign(cfg.max_step + 1, {});
  for (auto& t : tallies) {
    all.samples += t.samples;
    all.b3 += t.b3;
    all.shifts += t.shifts;
    for (const auto& [k, c] : t.val2) all.val2[k] += c;
    for (const auto& [k, c] : t.val2_large) all.val2_large[k] += c;
    for (int n = 0; n <= cfg.max_step; ++n) {
      all.ratios[n].insert(all.ratios[n].end(), t.ratios[n].begin(), t.ratios[n].end());
    }
    t = BlockTally{};
  }

  EmpiricalStats out;
  out.sample_count = all.samples;
  out.mean_b3 = static_cast<double>(all.b3) / static_cast<double>(all.samples);
  out.mean_shift_total = static_cast<double>(all.shifts) / static_cast<double>(all.samples);
  out.val2_histogram = normalize(all.val2, nullptr);
  out.val2_large_operand = normalize(all.val2_large, &out.val2_large_operand_count);
  for (auto& xs : all.ratios) {
    std::vector<double> hist(kRatioBins, 0.0);
    for (double x : xs) {
      const int bin = std::min(kRatioBins - 1, static_cast<int>(x * kRatioBins));
      hist[bin] += 1.0;
    }
    if (!xs.empty()) {
      for (double& h : hist) h /= static_cast<double>(xs.size());
    }
    std::sort(xs.begin(), xs.end());
    out.ratio_histograms.push_back(std::move(hist));
    out.ratio_samples.push_back(std::move(xs));
  }
  return out;
}

double val2_chi_square_p(const std::map<unsigned, double>& histogram, std::uint64_t count,
                         unsigned tail_from) {
  if (count == 0 || tail_from < 2) throw ValidationError(Errc::domain, "empty histogram");
  const double n = static_cast<double>(count);
  double stat = 0.0;
  double tail_obs = 0.0;
  for (const auto& [k, freq] : histogram) {
    if (k == 0) throw ValidationError(Errc::domain, "shift 0 cannot occur");
    if (k >= tail_from) tail_obs += freq * n;
  }
  for (unsigned k = 1; k < tail_from; ++k) {
    const auto it = histogram.find(k);
    const double obs = it == histogram.end() ? 0.0 : it->second * n;
    const double exp = n * std::ldexp(1.0, -static_cast<int>(k));
    stat += (obs - exp) * (obs - exp) / exp;
  }
  const double tail_exp = n * std::ldexp(1.0, 1 - static_cast<int>(tail_from));
  stat += (tail_obs - tail_exp) * (tail_obs - tail_exp) / tail_exp;
  const boost::math::chi_squared dist(static_cast<double>(tail_from - 1));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

SlopeFit iteration_slope(const std::vector<int>& exponents, const SampleConfig& base) {
  const std::set<int> distinct(exponents.begin(), exponents.end());
  if (distinct.size() < 2) {
    throw ValidationError(Errc::config, "iteration_slope needs at least two distinct exponents");
  }
  SlopeFit fit;
  for (int e : exponents) {
    SampleConfig cfg = base;
    cfg.bound_exponent = e;
    cfg.max_step = 0;
    const auto stats = simulate(cfg);
    fit.exponents.push_back(e);
    fit.mean_b3.push_back(stats.mean_b3);
    fit.mean_shift_total.push_back(stats.mean_shift_total);
  }
  auto line = [&](const std::vector<double>& ys, double& slope, double& intercept) {
    const double n = static_cast<double>(ys.size());
    double sx = 0;
    double sy = 0;
    double sxx = 0;
    double sxy = 0;
    for (std::size_t i = 0; i < ys.size(); ++i) {
      const double x = fit.exponents[i];
      sx += x;
      sy += ys[i];
      sxx += x * x;
      sxy += x * ys[i];
    }
    slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    intercept = (sy - slope * sx) / n;
  };
  line(fit.mean_b3, fit.slope, fit.intercept);
  line(fit.mean_shift_total, fit.shift_slope, fit.shift_intercept);
  return fit;
}

double compare_distribution(int n, const EmpiricalStats& stats, const GridFunction& model) {
  if (n < 0 || static_cast<std::size_t>(n) >= stats.ratio_samples.size()) {
    throw ValidationError(Errc::domain, "step " + std::to_string(n) + " was not recorded");
  }
  if (stats.ratio_samples[n].empty()) throw ValidationError(Errc::domain, "no pairs reached that step");
  const NodalInterpolant ft = ftilde_interpolant(model);
  const double zmax = ft.z_max();
  auto cdf = [&](double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double z = std::sqrt(-std::log(x));
    return z >= zmax ? 0.0 : 1.0 - ft(z);
  };
  return ks_distance(stats.ratio_samples[n], cdf);
}

double compare_distribution(int n, const SampleConfig& cfg, const GridFunction& model) {
  SampleConfig c = cfg;
  c.max_step = std::max(c.max_step, n);
  return compare_distribution(n, simulate(c), model);
}

double ks_critical_1pct(std::uint64_t n) { return 1.628 / std::sqrt(static_cast<double>(n)); }

}  // namespace bineuc
