#pragma once

#include <string>
#include <vector>

#include "report.hpp"
#include "run_config.hpp"

namespace bineuc::cli {

struct PairArgs {
  std::string u;
  std::string v;
  std::string algorithm = "b";
};

struct SimulateArgs {
  int bound_exponent = 40;
  std::uint64_t samples = 100000;
  int max_step = 8;
  std::vector<int> slope_exponents;
  std::vector<int> ks_steps;
};

struct DensityArgs {
  std::size_t stride = 0;  // 0: about 64 rows
};

struct ConstantsArgs {
  bool full_scale = false;
};

struct SpectrumArgs {
  int dim = 512;
  int count = 3;
  std::string method = "arnoldi";
};

struct ValleeArgs {
  std::string a_max = "1048575";
};

struct MellinArgs {
  double x = 0.01;
  int power_terms = 40;
  int resolution = 4096;
};

Report run_gcd(const RunConfig& cfg, const PairArgs& args);
Report run_xgcd(const RunConfig& cfg, const PairArgs& args);
Report run_cf(const RunConfig& cfg, const PairArgs& args);
Report run_simulate(const RunConfig& cfg, const SimulateArgs& args);
Report run_density(const RunConfig& cfg, const DensityArgs& args);
Report run_constants(RunConfig cfg, const ConstantsArgs& args);
Report run_spectrum(const RunConfig& cfg, const SpectrumArgs& args);
Report run_vallee(const RunConfig& cfg, const ValleeArgs& args);
Report run_mellin(const RunConfig& cfg, const MellinArgs& args);

}  // namespace bineuc::cli
