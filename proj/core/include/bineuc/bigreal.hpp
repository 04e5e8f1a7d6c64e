#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <mpfr.h>

namespace bineuc {

/// Extended-precision real backed by MPFR, round-to-nearest.
///
/// Every value carries its own precision. Arithmetic between two BigReals
/// of different precision is rejected with Errc::precision_mismatch; mixing
/// with machine scalars is allowed and computed at the BigReal's precision.
/// Assignment adopts the precision of the source.
class BigReal {
 public:
  using Precision = mpfr_prec_t;
  static constexpr Precision kDefaultPrecision = 200;

  BigReal() : BigReal(Precision{53}) {}
  explicit BigReal(Precision bits);
  BigReal(double value, Precision bits);
  BigReal(long value, Precision bits);

  static BigReal from_string(std::string_view text, Precision bits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  Precision precision() const noexcept { return mpfr_get_prec(value_); }

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Shortest decimal that reads back to the same value at this precision
  /// when `digits` is 0; otherwise `digits` significant digits.
  std::string to_string(int digits = 0) const;

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_nan() const noexcept { return mpfr_nan_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator+=(double rhs);
  BigReal& operator-=(double rhs);
  BigReal& operator*=(double rhs);
  BigReal& operator/=(double rhs);

  /// Multiplies by 2^e exactly.
  BigReal& scale2(long e);

  friend BigReal operator-(const BigReal& x);

  friend bool operator==(const BigReal& a, const BigReal& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
  friend bool operator==(const BigReal& a, double b) { return mpfr_cmp_d(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, double b);

 private:
  mpfr_t value_;
};

void require_same_precision(const BigReal& a, const BigReal& b);

inline BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
inline BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
inline BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
inline BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }
inline BigReal operator+(BigReal a, double b) { return a += b; }
inline BigReal operator-(BigReal a, double b) { return a -= b; }
inline BigReal operator*(BigReal a, double b) { return a *= b; }
inline BigReal operator/(BigReal a, double b) { return a /= b; }
inline BigReal operator+(double a, BigReal b) { return b += a; }
inline BigReal operator*(double a, BigReal b) { return b *= a; }
BigReal operator-(double a, const BigReal& b);
BigReal operator/(double a, const BigReal& b);

BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log1p(const BigReal& x);
BigReal log2(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal abs(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal sinh(const BigReal& x);
BigReal floor(const BigReal& x);
BigReal ldexp(const BigReal& x, long e);
BigReal max(const BigReal& a, const BigReal& b);

BigReal const_pi(BigReal::Precision bits);
BigReal const_ln2(BigReal::Precision bits);

/// Number of decimal digits that round-trip a value of the given precision.
int round_trip_digits(BigReal::Precision bits);

std::ostream& operator<<(std::ostream& os, const BigReal& x);

}  // namespace bineuc
