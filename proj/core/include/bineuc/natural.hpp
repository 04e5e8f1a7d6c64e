#pragma once

#include <bit>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace bineuc {

/// Arbitrary-precision integer. `Natural` is used where the value must be
/// nonnegative; the APIs that take one validate that on entry.
using Integer = boost::multiprecision::mpz_int;
using Natural = Integer;

/// Word types the instrumented GCD kernels run on: a machine word for the
/// sampling hot path, or a Natural.
template <class T>
concept GcdWord = std::same_as<T, std::uint64_t> || std::same_as<T, Natural>;

inline unsigned trailing_zeros(std::uint64_t x) noexcept {
  return static_cast<unsigned>(std::countr_zero(x));
}

inline unsigned trailing_zeros(const Natural& x) {
  return static_cast<unsigned>(boost::multiprecision::lsb(x));
}

inline bool is_odd(std::uint64_t x) noexcept { return (x & 1U) != 0; }
inline bool is_odd(const Natural& x) { return boost::multiprecision::bit_test(x, 0); }

inline bool is_zero(std::uint64_t x) noexcept { return x == 0; }
inline bool is_zero(const Natural& x) { return x.is_zero(); }

/// Number of one bits.
unsigned popcount(const Natural& x);

/// Parses a nonnegative decimal (or 0x-prefixed hexadecimal) integer.
Natural parse_natural(std::string_view text);

std::string to_string(const Natural& x);

}  // namespace bineuc
