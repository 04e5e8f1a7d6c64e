#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "bineuc/binary_cf.hpp"
#include "bineuc/gcd.hpp"

namespace {

using namespace bineuc;

std::vector<std::pair<std::uint64_t, std::uint64_t>> odd_pairs(int bits, std::size_t n) {
  std::mt19937_64 rng(3);
  const std::uint64_t mask = bits >= 64 ? ~0ULL : (1ULL << bits) - 1;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out(n);
  for (auto& p : out) p = {(rng() & mask) | 1, (rng() & mask) | 1};
  return out;
}

void BM_BinaryGcdWord(benchmark::State& state) {
  const auto pairs = odd_pairs(static_cast<int>(state.range(0)), 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [u, v] = pairs[i++ & 1023];
    benchmark::DoNotOptimize(binary_gcd_odd<std::uint64_t>(u, v).g);
  }
}
BENCHMARK(BM_BinaryGcdWord)->Arg(16)->Arg(40)->Arg(62);

void BM_BinaryGcdWordTraced(benchmark::State& state) {
  const auto pairs = odd_pairs(40, 1024);
  TraceOptions opts;
  opts.max_snapshots = 9;
  opts.record_shifts = true;
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [u, v] = pairs[i++ & 1023];
    benchmark::DoNotOptimize(binary_gcd_odd<std::uint64_t>(u, v, opts).trace.b3_count);
  }
}
BENCHMARK(BM_BinaryGcdWordTraced);

void BM_BinaryGcdNatural(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const auto words = state.range(0) / 64;
  Natural u = 1, v = 1;
  for (int w = 0; w < words; ++w) {
    u = (u << 64) | Natural(rng());
    v = (v << 64) | Natural(rng());
  }
  u |= 1;
  v |= 1;
  for (auto _ : state) benchmark::DoNotOptimize(gcd_binary(u, v).g);
}
BENCHMARK(BM_BinaryGcdNatural)->Arg(128)->Arg(1024)->Arg(4096);

void BM_ExtendedGcd(benchmark::State& state) {
  const auto pairs = odd_pairs(62, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [u, v] = pairs[i++ & 255];
    benchmark::DoNotOptimize(gcd_extended(Natural(u), Natural(v)).g);
  }
}
BENCHMARK(BM_ExtendedGcd);

void BM_ExpandCF(benchmark::State& state) {
  const auto pairs = odd_pairs(62, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    auto [u, v] = pairs[i++ & 255];
    if (u > v) std::swap(u, v);
    const Natural g = gcd_binary(u, v).g;
    benchmark::DoNotOptimize(expand(Natural(u) / g, Natural(v) / g).size());
  }
}
BENCHMARK(BM_ExpandCF);

}  // namespace
