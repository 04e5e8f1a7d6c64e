#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>

#include "bineuc/binary_cf.hpp"
#include "bineuc/constants.hpp"
#include "bineuc/density.hpp"
#include "bineuc/empirics.hpp"
#include "bineuc/error.hpp"
#include "bineuc/gcd.hpp"
#include "bineuc/gfunction.hpp"
#include "bineuc/grid_io.hpp"
#include "bineuc/mellin.hpp"
#include "bineuc/operators.hpp"
#include "bineuc/spectrum.hpp"

namespace bineuc::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Natural operand(const std::string& text, const char* name) {
  try {
    return parse_natural(text);
  } catch (const ValidationError& e) {
    throw ValidationError(e.code(), std::string(name) + ": " + e.what());
  }
}

Json json_natural(const Natural& n) { return to_string(n); }

GridFunction fixed_point(const RunConfig& cfg) {
  IterationOptions opts = cfg.iteration_options();
  if (cfg.trace) {
    opts.on_step = [](int n, double change) {
      std::cerr << "iteration " << n << ": change " << change << '\n';
    };
  }
  const Grid grid = cfg.grid();
  if (!cfg.cache_dir.empty()) return cached_fixed_point(cfg.cache_dir, grid, opts);
  return solve_fixed_point(grid, opts);
}

void describe_grid(Report& r, const RunConfig& cfg, const GridFunction& F) {
  r.set("z_max", cfg.z_max);
  r.set("grid_level", F.grid.level());
  r.set("precision_bits", F.grid.precision());
  r.set("degree", F.degree);
  r.set("iterations", F.iterations);
  r.set("last_change", F.last_change);
  r.set("converged", F.converged);
}

void require_converged(Report& r, const RunConfig& cfg, const GridFunction& F) {
  if (F.converged) return;
  std::ostringstream msg;
  msg << "fixed point not converged after " << F.iterations << " iterations (last change "
      << F.last_change << ", tolerance " << cfg.tolerance << ")";
  r.quality_failure = msg.str();
}

}  // namespace

Report run_gcd(const RunConfig& cfg, const PairArgs& args) {
  const Natural u = operand(args.u, "U"), v = operand(args.v, "V");
  Report r;
  GcdResult res;
  if (args.algorithm == "v") {
    res = gcd_algorithm_v(u, v);
  } else {
    res = gcd_binary(u, v);
  }
  r.headline.push_back(to_string(res.g));
  if (cfg.format != OutputFormat::text) r.set("gcd", json_natural(res.g));
  if (cfg.trace) {
    r.set("algorithm", args.algorithm == "v" ? "V" : "B");
    r.set("b3_count", res.trace.b3_count);
    r.set("shift_total", res.trace.shift_total);
    r.set("shift_events", res.trace.shift_events);
    if (args.algorithm == "v") r.set("outer_exchanges", res.trace.outer_exchanges);
  }
  return r;
}

Report run_xgcd(const RunConfig&, const PairArgs& args) {
  const Natural u = operand(args.u, "U"), v = operand(args.v, "V");
  const auto e = gcd_extended(u, v);
  Report r;
  r.set("gcd", json_natural(e.g));
  r.set("alpha", e.alpha.str());
  r.set("beta", e.beta.str());
  return r;
}

Report run_cf(const RunConfig& cfg, const PairArgs& args) {
  const Natural u = operand(args.u, "U"), v = operand(args.v, "V");
  const BinaryCF cf = expand(u, v);
  const CFStats s = stats(cf);
  Report r;
  const std::string text = render(cf);
  r.headline.push_back(text);
  if (cfg.format == OutputFormat::text) {
    r.headline.push_back("r=" + std::to_string(s.depth) + " ones=" + std::to_string(s.ones_total) +
                         " shifts=" + std::to_string(s.shifts_total));
  } else {
    r.set("expansion", text);
    r.set("depth", s.depth);
    r.set("ones_total", s.ones_total);
    r.set("shifts_total", s.shifts_total);
    r.table_name = "terms";
    r.columns = {"a", "k"};
    for (const auto& t : cf) r.add_row({json_natural(t.a), t.k});
  }
  return r;
}

Report run_simulate(const RunConfig& cfg, const SimulateArgs& args) {
  const auto t0 = Clock::now();
  SampleConfig sc;
  sc.bound_exponent = args.bound_exponent;
  sc.sample_count = args.samples;
  sc.seed = cfg.seed;
  sc.max_step = args.max_step;
  sc.threads = cfg.threads;
  for (int n : args.ks_steps) {
    if (n < 0 || n > args.max_step) {
      throw ValidationError(Errc::config, "--ks-steps: " + std::to_string(n) +
                                              " is outside [0, --max-step]");
    }
  }
  const EmpiricalStats st = simulate(sc);

  Report r;
  r.set("bound_exponent", sc.bound_exponent);
  r.set("sample_count", st.sample_count);
  r.set("seed", sc.seed);
  r.set("mean_b3", st.mean_b3);
  r.set("mean_b3_over_bound", st.mean_b3 / sc.bound_exponent);
  r.set("mean_shift_total", st.mean_shift_total);
  const auto steps = static_cast<std::uint64_t>(st.mean_b3 * static_cast<double>(st.sample_count) + 0.5);
  r.set("val2_chi_square_p", val2_chi_square_p(st.val2_histogram, steps));
  r.set("val2_large_operand_steps", st.val2_large_operand_count);
  if (st.val2_large_operand_count > 0) {
    r.set("val2_large_operand_chi_square_p",
          val2_chi_square_p(st.val2_large_operand, st.val2_large_operand_count));
  }
  if (!args.slope_exponents.empty()) {
    const SlopeFit fit = iteration_slope(args.slope_exponents, sc);
    r.set("slope", fit.slope);
    r.set("intercept", fit.intercept);
    r.set("shift_slope", fit.shift_slope);
    r.set("shift_intercept", fit.shift_intercept);
  }
  if (!args.ks_steps.empty()) {
    const Grid model_grid(BigReal(11L, 64), 10);
    IterationOptions mo;
    mo.threads = cfg.threads;
    for (int n : args.ks_steps) {
      const GridFunction model = n == 0 ? initial_ftilde(model_grid) : iterate_ftilde(model_grid, n, mo);
      r.set("ks_distance_" + std::to_string(n), compare_distribution(n, st, model));
    }
    r.set("ks_critical_1pct", ks_critical_1pct(st.sample_count));
  }
  r.table_name = "val2";
  r.columns = {"k", "frequency", "large_operand_frequency", "geometric"};
  for (const auto& [k, p] : st.val2_histogram) {
    const auto it = st.val2_large_operand.find(k);
    r.add_row({k, p, it == st.val2_large_operand.end() ? 0.0 : it->second,
               std::ldexp(1.0, -static_cast<int>(k))});
  }
  r.elapsed = seconds_since(t0);
  return r;
}

Report run_density(const RunConfig& cfg, const DensityArgs& args) {
  const auto t0 = Clock::now();
  const auto fixed = cfg.fixed_iterations();
  const GridFunction F = fixed && cfg.cache_dir.empty()
                             ? iterate_ftilde(cfg.grid(), *fixed, cfg.iteration_options())
                             : fixed_point(cfg);
  Report r;
  describe_grid(r, cfg, F);
  const ShapeReport shape = check_shape(F);
  r.set("max_decrease", shape.max_decrease);
  r.set("max_out_of_range", shape.max_out_of_range);
  r.set("density_at_1", big(density_at_z(F, BigReal(0L, F.grid.precision())), 30));
  if (!fixed) require_converged(r, cfg, F);

  const std::size_t stride =
      args.stride > 0 ? args.stride : std::max<std::size_t>(1, F.grid.last() / 64);
  r.table_name = "samples";
  r.columns = {"i", "z", "x", "ftilde", "density"};
  const auto dens = DensityGrid::from_fixed_point(F);
  for (std::size_t i = 0; i <= F.grid.last(); i += stride) {
    const BigReal z = F.grid.z(i);
    r.add_row({i, z.to_double(), F.grid.x(i).to_double(), big(F.values[i], 30),
               dens.density.values()[i]});
  }
  r.elapsed = seconds_since(t0);
  return r;
}

Report run_constants(RunConfig cfg, const ConstantsArgs& args) {
  const auto t0 = Clock::now();
  if (args.full_scale) {
    cfg.grid_level = 15;
    cfg.extrapolations = 7;
    cfg.iterations = "81";
    cfg.precision_bits = std::max(cfg.precision_bits, 400L);
  }
  const GridFunction F = fixed_point(cfg);
  const auto ladder = nested_ladder(F, cfg.extrapolations + 1);
  const ConstantEstimate K = compute_K(ladder);
  const std::vector<GridFunction> lambda_ladder(
      ladder.begin(), ladder.begin() + lambda_ladder_length(cfg.extrapolations));
  const ConstantEstimate lambda = compute_lambda(lambda_ladder);
  const ConstantEstimate E = compute_E_inf(ladder);

  const auto prec = F.grid.precision();
  const BigReal pi = const_pi(prec);
  const BigReal ln2 = const_ln2(prec);
  const BigReal target = 4.0 * ln2 / (pi * pi);
  const BigReal product = K.value * lambda.value;

  Report r;
  r.set("K", big(K.value));
  r.set("lambda", big(lambda.value));
  r.set("K_lambda", big(product));
  r.set("four_ln2_over_pi2", big(target));
  r.set("difference", big(product - target, 6));
  r.set("K_from_E_inf", big(ln2 / E.value));
  r.set("E_inf", big(E.value));
  r.set("b", big(2.0 / K.value));
  if (K.table.columns.size() >= 2) {
    const auto& prev = K.table.columns[K.table.columns.size() - 2];
    r.set("K_last_correction", big(abs(K.value - prev.front()), 3));
  }
  describe_grid(r, cfg, F);
  r.set("extrapolations", cfg.extrapolations);
  require_converged(r, cfg, F);

  r.table_name = "ladder";
  r.columns = {"level", "h", "K_raw", "lambda_raw"};
  for (std::size_t j = 0; j < ladder.size(); ++j) {
    r.add_row({ladder[j].grid.level(), big(ladder[j].grid.h(), 17), big(K.table.raw[j], 30),
               j < lambda.table.raw.size() ? big(lambda.table.raw[j], 30) : Json(nullptr)});
  }
  r.elapsed = seconds_since(t0);
  return r;
}

Report run_spectrum(const RunConfig& cfg, const SpectrumArgs& args) {
  const auto t0 = Clock::now();
  if (args.method != "arnoldi" && args.method != "dense") {
    throw ValidationError(Errc::config, "--method: expected arnoldi or dense");
  }
  SpectrumOptions so;
  so.z_max = std::stod(cfg.z_max);
  so.degree = cfg.degree();
  so.threads = cfg.threads;
  const Eigen::MatrixXd M = build_B2_matrix(args.dim, so);
  const SpectrumResult s =
      args.method == "dense" ? spectrum_dense(M, args.count) : spectrum(M, args.count, so);
  Report r;
  r.set("matrix_dim", s.matrix_dim);
  r.set("method", s.method);
  r.set("krylov_dim", s.krylov_dim);
  r.set("settled", s.settled);
  r.set("degree", so.degree);
  if (!s.settled) r.quality_failure = "Ritz values did not settle within the Krylov range";
  r.table_name = "eigenvalues";
  r.columns = {"index", "real", "imag", "modulus", "residual"};
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
    const auto e = s.eigenvalues[i];
    r.add_row({i + 1, e.real(), e.imag(), std::abs(e),
               i < s.residual_norms.size() ? Json(s.residual_norms[i]) : Json(nullptr)});
  }
  r.elapsed = seconds_since(t0);
  return r;
}

Report run_vallee(const RunConfig& cfg, const ValleeArgs& args) {
  const auto t0 = Clock::now();
  const Natural a_max = operand(args.a_max, "--a-max");
  const GridFunction F = fixed_point(cfg);
  const GFunction G(F);
  const ValleeSum V = vallee_sum(G, a_max);
  const double g1 = g1_direct(F).to_double();

  Report r;
  r.set("a_max", json_natural(a_max));
  r.set("partial", V.partial);
  r.set("raw_remainder", V.raw_remainder);
  r.set("tail_estimate", V.tail_estimate);
  r.set("corrected_remainder", V.corrected_remainder);
  r.set("monotone", V.monotone);
  r.set("g1", g1);
  r.set("half_density_at_1", density_at_z(F, BigReal(0L, F.grid.precision())).to_double() / 2.0);
  r.set("K_from_vallee", k_from_vallee(g1, V.partial + V.tail_estimate));
  describe_grid(r, cfg, F);
  require_converged(r, cfg, F);
  r.table_name = "octaves";
  r.columns = {"octave", "partial"};
  for (std::size_t j = 0; j < V.octave_partials.size(); ++j) r.add_row({j, V.octave_partials[j]});
  r.elapsed = seconds_since(t0);
  return r;
}

Report run_mellin(const RunConfig& cfg, const MellinArgs& args) {
  const auto t0 = Clock::now();
  const auto prec = cfg.precision_bits;
  const BigReal x(args.x, prec);
  const BigReal tol = ldexp(BigReal(1L, prec), -static_cast<long>(prec) + 8);
  const BigReal direct = d1_direct(x, tol);
  const BigReal with_p = d1_expansion(x, {true, args.power_terms});
  const BigReal without_p = d1_expansion(x, {false, args.power_terms});

  Report r;
  r.set("x", args.x);
  r.set("power_terms", args.power_terms);
  r.set("d1_direct", big(direct));
  r.set("expansion_with_P", big(with_p));
  r.set("expansion_without_P", big(without_p));
  r.set("discrepancy_with_P", big(with_p - direct, 6));
  r.set("discrepancy_without_P", big(without_p - direct, 6));
  r.set("x_P_lg_x", big(x * periodic_term(log2(x)), 6));
  r.set("P_max", big(periodic_max(args.resolution, prec), 10));
  r.elapsed = seconds_since(t0);
  return r;
}

}  // namespace bineuc::cli
