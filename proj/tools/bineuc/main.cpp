#include <functional>
#include <iostream>

#include "bineuc/error.hpp"
#include "cli11.hpp"
#include "commands.hpp"
#include "report.hpp"
#include "run_config.hpp"

using namespace bineuc;
using namespace bineuc::cli;

namespace {

constexpr int kExitQuality = 1;
constexpr int kExitValidation = 2;

void add_pair(CLI::App& sub, PairArgs& args) {
  sub.add_option("U", args.u, "First operand")->required();
  sub.add_option("V", args.v, "Second operand")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary Euclidean algorithm: exact GCD tools, empirics and constants"};
  app.require_subcommand(1);
  RunConfig cfg;
  add_run_flags(app, cfg);

  std::function<Report()> action;

  PairArgs gcd_args;
  auto* gcd = app.add_subcommand("gcd", "GCD by Algorithm B (or V with --algorithm v)");
  add_pair(*gcd, gcd_args);
  gcd->add_option("--algorithm", gcd_args.algorithm, "b or v")
      ->check(CLI::IsMember({"b", "v"}))
      ->capture_default_str();
  gcd->callback([&] { action = [&] { return run_gcd(cfg, gcd_args); }; });

  PairArgs xgcd_args;
  auto* xgcd = app.add_subcommand("xgcd", "Extended binary GCD: alpha*U + beta*V = g");
  add_pair(*xgcd, xgcd_args);
  xgcd->callback([&] { action = [&] { return run_xgcd(cfg, xgcd_args); }; });

  PairArgs cf_args;
  auto* cf = app.add_subcommand("cf", "Binary continued fraction of U/V (U, V odd, U <= V)");
  add_pair(*cf, cf_args);
  cf->callback([&] { action = [&] { return run_cf(cfg, cf_args); }; });

  SimulateArgs sim_args;
  auto* sim = app.add_subcommand("simulate", "Monte-Carlo statistics of Algorithm B");
  sim->add_option("--bound-exponent", sim_args.bound_exponent, "Operands below 2^E")
      ->check(CLI::Range(4, 4096))
      ->capture_default_str();
  sim->add_option("--samples", sim_args.samples, "Number of random odd pairs")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40))
      ->capture_default_str();
  sim->add_option("--max-step", sim_args.max_step, "Ratio snapshots kept per pair")
      ->check(CLI::Range(0, 1000))
      ->capture_default_str();
  sim->add_option("--slope-exponents", sim_args.slope_exponents,
                  "Fit mean B3 count against these bound exponents")
      ->delimiter(',');
  sim->add_option("--ks-steps", sim_args.ks_steps, "Compare x_n with the model for these n")
      ->delimiter(',');
  sim->callback([&] { action = [&] { return run_simulate(cfg, sim_args); }; });

  DensityArgs dens_args;
  auto* dens = app.add_subcommand("density", "Fixed point (or n-th iterate) of the F~ recurrence");
  dens->add_option("--stride", dens_args.stride, "Print every n-th grid point");
  dens->callback([&] { action = [&] { return run_density(cfg, dens_args); }; });

  ConstantsArgs const_args;
  auto* cons = app.add_subcommand("constants", "K, lambda, E_inf and the K*lambda check");
  cons->add_flag("--full-scale", const_args.full_scale,
                 "Level 15, r = 7, 81 iterations, at least 400 bits");
  cons->callback([&] { action = [&] { return run_constants(cfg, const_args); }; });

  SpectrumArgs spec_args;
  auto* spec = app.add_subcommand("spectrum", "Leading eigenvalues of the discretized operator");
  spec->add_option("--dim", spec_args.dim, "Matrix dimension")
      ->check(CLI::Range(64, 16384))
      ->capture_default_str();
  spec->add_option("--count", spec_args.count, "Eigenvalues to report")
      ->check(CLI::Range(1, 6))
      ->capture_default_str();
  spec->add_option("--method", spec_args.method, "arnoldi or dense")
      ->check(CLI::IsMember({"arnoldi", "dense"}))
      ->capture_default_str();
  spec->callback([&] { action = [&] { return run_spectrum(cfg, spec_args); }; });

  ValleeArgs vallee_args;
  auto* vallee = app.add_subcommand("vallee-sum", "Weighted sum of G(1/a) over odd a <= a_max");
  vallee->add_option("--a-max", vallee_args.a_max, "Largest odd a")->capture_default_str();
  vallee->callback([&] { action = [&] { return run_vallee(cfg, vallee_args); }; });

  MellinArgs mellin_args;
  auto* mellin = app.add_subcommand("mellin-check", "Direct sum versus small-x expansion");
  mellin->add_option("--x", mellin_args.x, "Evaluation point in (0, 1/2)")->capture_default_str();
  mellin->add_option("--power-terms", mellin_args.power_terms, "Powers x^2, x^3, ... kept")
      ->check(CLI::Range(1, 1000))
      ->capture_default_str();
  mellin->add_option("--resolution", mellin_args.resolution, "Samples for max |P|")
      ->check(CLI::Range(1024, 1 << 24))
      ->capture_default_str();
  mellin->callback([&] { action = [&] { return run_mellin(cfg, mellin_args); }; });

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    const Report report = action();
    render(std::cout, report, cfg.format, cfg.reproducible);
    if (!report.quality_failure.empty()) {
      std::cerr << "quality failure: " << report.quality_failure << '\n';
      return kExitQuality;
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const QualityError& e) {
    std::cerr << "quality failure: " << e.what() << '\n';
    return kExitQuality;
  }
  return 0;
}
