// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.
//
//   bineuc_acceptance [--cache-dir DIR] [--threads N]

#include <bit>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bineuc/binary_cf.hpp"
#include "bineuc/constants.hpp"
#include "bineuc/density.hpp"
#include "bineuc/empirics.hpp"
#include "bineuc/gcd.hpp"
#include "bineuc/gfunction.hpp"
#include "bineuc/grid_io.hpp"
#include "bineuc/mellin.hpp"
#include "bineuc/operators.hpp"
#include "bineuc/spectrum.hpp"

using namespace bineuc;

namespace {

constexpr BigReal::Precision kBits = 200;
constexpr int kLevel = 12;
constexpr int kExtrapolations = 4;
const char* const kKDigits = "0.70597124610191639152931";
const char* const kLambdaDigits = "0.39792268118831664407";

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void report(int id, const char* name, const std::function<void(Outcome&)>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!out.pass) ++failures;
  std::printf("%s criterion %d (%s):%s (%.1fs)\n", out.pass ? "PASS" : "FAIL", id, name,
              out.detail.str().c_str(), secs);
  std::fflush(stdout);
}

struct Pipeline {
  std::optional<GridFunction> F;
  BigReal K{kBits};
  BigReal lambda{kBits};
};

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path cache_dir = "gridcache";
  unsigned threads = 1;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--cache-dir" && i + 1 < argc) {
      cache_dir = argv[++i];
    } else if (arg == "--threads" && i + 1 < argc) {
      threads = static_cast<unsigned>(std::stoul(argv[++i]));
    } else {
      std::fprintf(stderr, "usage: %s [--cache-dir DIR] [--threads N]\n", argv[0]);
      return 2;
    }
  }

  const BigReal K_ref = BigReal::from_string(kKDigits, kBits);
  const BigReal lambda_ref = BigReal::from_string(kLambdaDigits, kBits);
  const BigReal pi = const_pi(kBits);
  const BigReal vallee_const = 4.0 * const_ln2(kBits) / (pi * pi);

  Pipeline p;
  report(1, "K at level 12, 4 extrapolations, 200 bits", [&](Outcome& o) {
    IterationOptions opts;
    opts.threads = threads;
    p.F.emplace(cached_fixed_point(cache_dir, Grid(BigReal(11L, kBits), kLevel), opts));
    o.check(p.F->converged, "fixed point converged");
    const auto K = compute_K(nested_ladder(*p.F, kExtrapolations + 1));
    p.K = K.value;
    const double err = (K.value - K_ref).to_double();
    o.detail << " K = " << K.value.to_string(22) << " error " << err << " after "
             << p.F->iterations << " iterations";
    o.check(std::abs(err) < 1e-10, "|K - ref| < 1e-10");
  });

  report(2, "lambda on the h^4 ladder", [&](Outcome& o) {
    const auto ladder = nested_ladder(*p.F, lambda_ladder_length(kExtrapolations));
    p.lambda = compute_lambda(ladder).value;
    const double err = (p.lambda - lambda_ref).to_double();
    o.detail << " lambda = " << p.lambda.to_string(22) << " error " << err;
    o.check(std::abs(err) < 1e-8, "|lambda - ref| < 1e-8");
  });

  report(3, "K*lambda = 4 ln 2 / pi^2", [&](Outcome& o) {
    const double diff = (p.K * p.lambda - vallee_const).to_double();
    o.detail << " K*lambda - 4ln2/pi^2 = " << diff;
    o.check(std::abs(diff) < 1e-10, "|difference| < 1e-10");
  });

  report(4, "operator identities", [&](Outcome& o) {
    const auto grid = DensityGrid::from_fixed_point(*p.F);
    const std::vector<std::pair<const char*, Density>> densities = {
        {"uniform", uniform_density()}, {"fixed point", grid.as_density()}};
    for (const auto& [name, f] : densities) {
      const auto r = operator_residuals(f, identity_sample_points());
      o.detail << " " << name << ": additivity " << r.additivity << ", lemma " << r.lemma
               << ", theorem " << r.theorem << ";";
      o.check(r.lemma < 1e-8 && r.theorem < 1e-8, std::string(name) + " residuals < 1e-8");
      o.check(r.additivity < 1e-14, std::string(name) + " additivity to rounding");
    }
  });

  report(5, "G-function lemmas", [&](Outcome& o) {
    const BigReal big = ldexp(BigReal(1L, kBits), 64);
    const BigReal gap = 1.0 - g_value(*p.F, big);
    const double lg_gap = log2(abs(gap)).to_double();
    o.detail << " lg|1 - G(2^64)| = " << lg_gap << ";";
    o.check(lg_gap < -60.0, "G(2^64) within 2^-60 of 1");

    double worst = 0.0;
    for (double x : {0.25, 0.5, 0.75}) {
      const BigReal bx(x, kBits);
      const BigReal d = eval_ftilde(*p.F, bx) - (g_value(*p.F, 1.0 / bx) - g_value(*p.F, bx));
      worst = std::max(worst, std::abs(d.to_double()));
    }
    o.detail << " odd-function residual " << worst << ";";
    o.check(worst < 1e-10, "F~(x) = G(1/x) - G(x) to 10 digits");

    const BigReal g1 = g1_direct(*p.F);
    const double rel = ((2.0 * g1 - p.lambda) / p.lambda).to_double();
    o.detail << " (2 g(1) - f(1))/f(1) = " << rel << ";";
    o.check(std::abs(rel) < 1e-10, "f(1) = 2 g(1) to 10 digits");

    const GFunction G(*p.F);
    const auto V = vallee_sum(G, Natural((1 << 20) - 1));
    o.detail << " vallee partial " << V.partial << ", raw remainder " << V.raw_remainder
             << ", measured tail " << V.tail_estimate << ", after tail " << V.corrected_remainder
             << (V.monotone ? ", increasing" : ", NOT increasing");
    o.check(V.monotone && V.raw_remainder > 0.0, "partial sums increase toward 1");
    o.check(std::abs(V.corrected_remainder) < 1e-6, "1 - partial - tail < 1e-6");
  });

  report(6, "spectrum", [&](Outcome& o) {
    std::vector<SpectrumResult> runs;
    for (int dim : {512, 1024}) {
      SpectrumOptions so;
      so.threads = threads;
      runs.push_back(spectrum(build_B2_matrix(dim, so), 3, so));
      const auto& s = runs.back();
      o.check(s.settled && s.eigenvalues.size() == 3, "eigenvalues settled at dim " + std::to_string(dim));
      if (s.eigenvalues.size() < 3) return;
      const auto l1 = s.eigenvalues[0];
      const auto l2 = s.eigenvalues[1].imag() > 0 ? s.eigenvalues[1] : s.eigenvalues[2];
      o.detail << " dim " << dim << ": " << l1.real() << ", " << l2.real() << " +- " << l2.imag()
               << "i, |l2| " << std::abs(l2) << ";";
      o.check(std::abs(l1 - 1.0) < 5e-4, "dominant 1 +- 5e-4");
      o.check(std::abs(l2.real() - 0.1735) < 5e-3 && std::abs(l2.imag() - 0.0884) < 5e-3,
              "subdominant pair within 5e-3");
      o.check(std::abs(std::abs(l2) - 0.1948) < 2e-3, "|l2| within 2e-3");
    }
    if (runs.size() == 2 && runs[0].eigenvalues.size() == 3 && runs[1].eigenvalues.size() == 3) {
      double shift = 0.0;
      for (int i = 0; i < 3; ++i) {
        shift = std::max(shift, std::abs(runs[0].eigenvalues[i] - runs[1].eigenvalues[i]));
      }
      o.detail << " change 512 -> 1024: " << shift;
      o.check(shift < 1e-3, "stable under dim doubling");
    }
  });

  report(7, "Mellin expansion", [&](Outcome& o) {
    const double pmax = periodic_max(4096).to_double();
    o.detail << " max|P| = " << pmax << ";";
    o.check(pmax > 7.0e-12 && pmax < 7.8e-12, "max|P| in (7.0e-12, 7.8e-12)");

    const BigReal tol(1e-50, kBits);
    auto gap = [&](double xv, bool with_p) {
      const BigReal x(xv, kBits);
      return (d1_expansion(x, {with_p, 40}) - d1_direct(x, tol)).to_double();
    };
    const double with_p = gap(0.01, true);
    const double without_p = gap(0.01, false);
    o.detail << " with P " << with_p << ", without P " << without_p;
    o.check(std::abs(with_p) < 1e-20, "with P < 1e-20");
    o.check(std::abs(without_p) > 1e-15 && std::abs(without_p) < 1e-13, "without P of order 1e-14");
    const double periodic = std::abs(without_p / 0.01 - gap(0.02, false) / 0.02) +
                            std::abs(without_p / 0.01 - gap(0.04, false) / 0.04);
    o.detail << ", scaled residual spread over x, 2x, 4x " << periodic;
    o.check(periodic < 1e-15, "residual/x periodic in lg x");
  });

  report(8, "exact algorithms", [&](Outcome& o) {
    std::uint64_t checked = 0;
    for (std::uint64_t u = 1; u <= 512; ++u) {
      for (std::uint64_t v = 1; v <= 512; ++v) {
        const std::uint64_t g = std::gcd(u, v);
        bool ok = gcd_binary(u, v).g == g;
        if (u % 2 == 1 && v % 2 == 1) ok = ok && gcd_algorithm_v(u, v).g == g;
        if (u <= 256 && v <= 256) {
          const auto e = gcd_extended(u, v);
          ok = ok && e.g == g && e.alpha * Integer(u) + e.beta * Integer(v) == e.g;
        } else {
          ok = ok && gcd_extended(u, v).g == g;
        }
        if (!ok) o.check(false, "oracle at " + std::to_string(u) + "," + std::to_string(v));
        ++checked;
      }
    }
    o.detail << " " << checked << " oracle pairs;";

    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::uint64_t> half(0, (1U << 15) - 1);
    for (int i = 0; i < 100000; ++i) {
      const std::uint64_t u = 2 * half(rng) + 1, v = 2 * half(rng) + 1;
      const auto t = binary_gcd_odd<std::uint64_t>(u, v).trace;
      const unsigned lg_sum = 63U - static_cast<unsigned>(std::countl_zero(u + v));
      const std::uint64_t m = std::max(u, v);
      const unsigned ceil_lg = m <= 1 ? 0U : 64U - static_cast<unsigned>(std::countl_zero(m - 1));
      if (t.b3_count > lg_sum || t.shift_total > 2 * ceil_lg + 2) {
        o.check(false, "bounds at " + std::to_string(u) + "," + std::to_string(v));
        break;
      }
    }
    o.detail << " bounds on 1e5 pairs;";

    std::uint64_t round_trips = 0;
    for (unsigned v = 1; v < 200; v += 2) {
      for (unsigned u = 1; u <= v; u += 2) {
        if (std::gcd(u, v) != 1) continue;
        if (evaluate(expand(u, v)) != std::make_pair(Natural(u), Natural(v))) {
          o.check(false, "round trip " + std::to_string(u) + "/" + std::to_string(v));
        }
        ++round_trips;
      }
    }
    int random_trips = 0, stat_pairs = 0;
    while (random_trips < 100000) {
      std::uint64_t u = rng() | 1, v = rng() | 1;
      if (u > v) std::swap(u, v);
      if (std::gcd(u, v) != 1) continue;
      const auto cf = expand(Natural(u), Natural(v));
      if (evaluate(cf) != std::make_pair(Natural(u), Natural(v))) {
        o.check(false, "random round trip");
        break;
      }
      if (stat_pairs < 10000) {
        const auto s = stats(cf);
        const auto t = gcd_binary(Natural(u), Natural(v)).trace;
        if (s.ones_total != t.b3_count || s.shifts_total != t.shift_total) {
          o.check(false, "CF stats vs Algorithm B counters");
        }
        ++stat_pairs;
      }
      ++random_trips;
    }
    o.detail << " " << round_trips << " + " << random_trips << " CF round trips; " << stat_pairs
             << " stats pairs";
  });

  report(9, "empirics", [&](Outcome& o) {
    SampleConfig cfg;
    cfg.threads = threads;
    const auto stats = simulate(cfg);
    const double p_large = val2_chi_square_p(stats.val2_large_operand, stats.val2_large_operand_count);
    const auto steps =
        static_cast<std::uint64_t>(stats.mean_b3 * static_cast<double>(stats.sample_count) + 0.5);
    const double p_all = val2_chi_square_p(stats.val2_histogram, steps);
    o.detail << " Val2 chi-square p = " << p_large << " on " << stats.val2_large_operand_count
             << " large-operand steps (all steps: p = " << p_all << ", P(1) = "
             << stats.val2_histogram.at(1) << ");";
    o.check(p_large > 0.001, "chi-square p > 0.001");

    const auto fit = iteration_slope({20, 28, 36, 44}, cfg);
    const double rel = fit.slope / K_ref.to_double() - 1.0;
    o.detail << " slope " << fit.slope << " (" << 100.0 * rel << "%);";
    o.check(std::abs(rel) < 0.02, "slope within 2% of K");

    const Grid model_grid(BigReal(11L, 64), 10);
    IterationOptions mo;
    mo.threads = threads;
    for (int n : {0, 1, 5}) {
      const GridFunction model = n == 0 ? initial_ftilde(model_grid) : iterate_ftilde(model_grid, n, mo);
      const double d = compare_distribution(n, stats, model);
      o.detail << " KS n=" << n << " " << d;
      o.check(d < 0.01, "KS distance < 0.01 at n = " + std::to_string(n));
    }
  });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
