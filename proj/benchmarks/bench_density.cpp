#include <benchmark/benchmark.h>

#include "bineuc/density.hpp"
#include "bineuc/spectrum.hpp"

namespace {

using namespace bineuc;

void BM_IterationPlan(benchmark::State& state) {
  const Grid g(BigReal(11L, state.range(1)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(IterationPlan(g, 9).term_count());
}
BENCHMARK(BM_IterationPlan)->Args({8, 200})->Args({10, 200})->Unit(benchmark::kMillisecond);

void BM_IterationStep(benchmark::State& state) {
  const Grid g(BigReal(11L, state.range(1)), static_cast<int>(state.range(0)));
  const IterationPlan plan(g, 9);
  const GridFunction F0 = initial_ftilde(g);
  for (auto _ : state) benchmark::DoNotOptimize(plan.apply(F0.values, 1).size());
  state.counters["terms"] = static_cast<double>(plan.term_count());
  state.counters["ns_per_term"] = benchmark::Counter(
      static_cast<double>(plan.term_count()), benchmark::Counter::kIsIterationInvariantRate |
                                                  benchmark::Counter::kInvert);
}
BENCHMARK(BM_IterationStep)
    ->Args({8, 128})
    ->Args({8, 200})
    ->Args({10, 200})
    ->Unit(benchmark::kMillisecond);

void BM_EvalFtilde(benchmark::State& state) {
  static const GridFunction F = [] {
    IterationOptions o;
    o.fixed_iterations = 5;
    return solve_fixed_point(Grid(BigReal(11L, 200), 9), o);
  }();
  const BigReal x(0.3141592653589793, 200);
  for (auto _ : state) benchmark::DoNotOptimize(eval_ftilde(F, x));
}
BENCHMARK(BM_EvalFtilde);

void BM_BuildMatrix(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_B2_matrix(static_cast<int>(state.range(0))).sum());
}
BENCHMARK(BM_BuildMatrix)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace
