#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "bineuc/error.hpp"
#include "bineuc/natural.hpp"

namespace bineuc {

/// x = numerator / denominator = min(u,v) / max(u,v) after `step` B3 steps.
template <GcdWord Word>
struct RatioSnapshot {
  std::uint64_t step = 0;
  Word numerator{};
  Word denominator{};
};

/// Counters from one run of the odd-operand phase of a binary GCD.
///
/// `b3_count` counts subtract-shift events (step B3 of Algorithm B, or one
/// pass of the inner loop of Algorithm V). `shift_total` is the sum of the
/// dyadic valuations removed by those events, i.e. the number of one-bit
/// shifts; `shift_events` counts the shift-until-odd operations themselves,
/// so both cost models for the shift can be evaluated.
template <GcdWord Word>
struct BasicGcdTrace {
  std::uint64_t b3_count = 0;
  std::uint64_t shift_total = 0;
  std::uint64_t shift_events = 0;
  std::uint64_t outer_exchanges = 0;
  std::vector<RatioSnapshot<Word>> ratio_snapshots;
  /// Valuation of each subtract-shift event, in execution order.
  std::vector<std::uint32_t> shifts;
};

using GcdTrace = BasicGcdTrace<Natural>;

struct TraceOptions {
  std::size_t max_snapshots = std::numeric_limits<std::size_t>::max();
  bool record_shifts = false;
};

template <GcdWord Word>
struct BasicGcdResult {
  Word g{};
  BasicGcdTrace<Word> trace;
};

using GcdResult = BasicGcdResult<Natural>;

struct ExtendedGcd {
  Natural g;
  Integer alpha;
  Integer beta;
};

/// Dyadic valuation: the largest j with 2^j | u. Rejects u = 0.
unsigned val2(const Natural& u);

namespace detail {

template <GcdWord Word>
void snapshot(BasicGcdTrace<Word>& trace, const TraceOptions& opts,
              const Word& u, const Word& v) {
  if (trace.ratio_snapshots.size() >= opts.max_snapshots) return;
  const bool u_small = u < v;
  trace.ratio_snapshots.push_back(
      {trace.b3_count, u_small ? u : v, u_small ? v : u});
}

}  // namespace detail

/// Algorithm B on odd operands, instrumented. Both inputs must be odd.
template <GcdWord Word>
BasicGcdResult<Word> binary_gcd_odd(Word u, Word v,
                                    const TraceOptions& opts = {}) {
  BasicGcdResult<Word> result;
  auto& trace = result.trace;
  detail::snapshot(trace, opts, u, v);
  for (;;) {
    // B1
    if (u == v) break;
    Word t = u > v ? Word(u - v) : Word(v - u);
    // B2
    const unsigned j = trailing_zeros(t);
    t >>= j;
    trace.shift_total += j;
    ++trace.shift_events;
    if (opts.record_shifts) trace.shifts.push_back(j);
    // B3
    if (u >= v) {
      u = std::move(t);
    } else {
      v = std::move(t);
    }
    ++trace.b3_count;
    detail::snapshot(trace, opts, u, v);
  }
  result.g = std::move(u);
  return result;
}

/// Algorithm V: explicit inner subtract-shift loop and outer exchange loop.
/// Operands must be odd; they are ordered so that u <= v on entry.
template <GcdWord Word>
BasicGcdResult<Word> algorithm_v_odd(Word u, Word v,
                                     const TraceOptions& opts = {}) {
  BasicGcdResult<Word> result;
  auto& trace = result.trace;
  if (u > v) std::swap(u, v);
  detail::snapshot(trace, opts, u, v);
  while (u != v) {
    while (u < v) {
      Word t = v - u;
      const unsigned j = trailing_zeros(t);
      t >>= j;
      v = std::move(t);
      trace.shift_total += j;
      ++trace.shift_events;
      ++trace.b3_count;
      if (opts.record_shifts) trace.shifts.push_back(j);
      detail::snapshot(trace, opts, u, v);
    }
    std::swap(u, v);
    ++trace.outer_exchanges;
  }
  result.g = std::move(u);
  return result;
}

/// GCD by Algorithm B. Even inputs are reduced to odd ones by extracting the
/// common power of two, which is folded back into g; trace counters refer to
/// the odd phase only. Rejects zero inputs.
GcdResult gcd_binary(const Natural& u, const Natural& v,
                     const TraceOptions& opts = {});

/// GCD by Algorithm V. Rejects zero inputs and (with a different code) even
/// inputs.
GcdResult gcd_algorithm_v(const Natural& u, const Natural& v,
                          const TraceOptions& opts = {});

/// Extended binary GCD: alpha*u + beta*v = g, normalized so that
/// 0 <= alpha < v/g (alpha = 0 when v divides u) and |beta| <= u/g.
ExtendedGcd gcd_extended(const Natural& u, const Natural& v);

}  // namespace bineuc
