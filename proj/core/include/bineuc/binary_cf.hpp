#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bineuc/natural.hpp"

namespace bineuc {

/// One partial quotient a + 2^k of a binary continued fraction:
/// a odd, k >= 1, 0 < a < 2^k.
struct CfTerm {
  Natural a;
  std::uint32_t k = 0;

  friend bool operator==(const CfTerm&, const CfTerm&) = default;
};

/// u/v = 1/a1 + 2^k1/a2 + ... + 2^k(r-1)/(ar + 2^kr).
/// The empty expansion denotes 1/1.
using BinaryCF = std::vector<CfTerm>;

struct CFStats {
  std::uint64_t depth = 0;       // r
  std::uint64_t ones_total = 0;  // popcount(a1) + ... + popcount(ar)
  std::uint64_t shifts_total = 0;  // k1 + ... + kr

  friend bool operator==(const CFStats&, const CFStats&) = default;
};

/// Expansion of the reduced fraction u/v, u and v odd, 1 <= u <= v.
/// Built from the inner-loop shift sequences of Algorithm V.
BinaryCF expand(const Natural& u, const Natural& v);

/// Reduced fraction represented by `cf`. Rejects terms violating the
/// a odd, k >= 1, a < 2^k constraints.
std::pair<Natural, Natural> evaluate(const BinaryCF& cf);

CFStats stats(const BinaryCF& cf);

/// Linear notation, e.g. "1/1 + 2/1 + 4/(1+2)".
std::string render(const BinaryCF& cf);

}  // namespace bineuc
