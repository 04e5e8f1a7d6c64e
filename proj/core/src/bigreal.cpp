#include "bineuc/bigreal.hpp"

#include <cstring>
#include <ostream>
#include <string>

#include "bineuc/error.hpp"

namespace bineuc {

BigReal::BigReal(Precision bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(double value, Precision bits) {
  mpfr_init2(value_, bits);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigReal::BigReal(long value, Precision bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal BigReal::from_string(std::string_view text, Precision bits) {
  BigReal r(bits);
  const std::string s(text);
  char* end = nullptr;
  mpfr_strtofr(r.value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0') {
    throw ValidationError(Errc::format, "not a real number: '" + s + "'");
  }
  return r;
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  std::memcpy(value_, other.value_, sizeof(mpfr_t));
  other.value_->_mpfr_d = nullptr;
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this == &other) return *this;
  if (value_->_mpfr_d == nullptr) {
    mpfr_init2(value_, other.precision());
  } else if (precision() != other.precision()) {
    mpfr_set_prec(value_, other.precision());
  }
  mpfr_set(value_, other.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) {
    if (value_->_mpfr_d != nullptr) mpfr_clear(value_);
    std::memcpy(value_, other.value_, sizeof(mpfr_t));
    other.value_->_mpfr_d = nullptr;
  }
  return *this;
}

BigReal::~BigReal() {
  if (value_->_mpfr_d != nullptr) mpfr_clear(value_);
}

void require_same_precision(const BigReal& a, const BigReal& b) {
  if (a.precision() != b.precision()) {
    throw ValidationError(Errc::precision_mismatch,
                          "mixed-precision arithmetic: " + std::to_string(a.precision()) +
                              " vs " + std::to_string(b.precision()) + " bits");
  }
}

int round_trip_digits(BigReal::Precision bits) {
  return static_cast<int>(mpfr_get_str_ndigits(10, bits));
}

std::string BigReal::to_string(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
  if (digits <= 0) digits = round_trip_digits(precision());
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, "%.*Rg", digits, value_) < 0) return "?";
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  require_same_precision(*this, rhs);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator-=(const BigReal& rhs) {
  require_same_precision(*this, rhs);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(const BigReal& rhs) {
  require_same_precision(*this, rhs);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(const BigReal& rhs) {
  require_same_precision(*this, rhs);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator+=(double rhs) {
  mpfr_add_d(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator-=(double rhs) {
  mpfr_sub_d(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(double rhs) {
  mpfr_mul_d(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(double rhs) {
  mpfr_div_d(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::scale2(long e) {
  mpfr_mul_2si(value_, value_, e, MPFR_RNDN);
  return *this;
}

BigReal operator-(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_neg(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal operator-(double a, const BigReal& b) {
  BigReal r(b.precision());
  mpfr_d_sub(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}

BigReal operator/(double a, const BigReal& b) {
  BigReal r(b.precision());
  mpfr_d_div(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const BigReal& a, double b) {
  if (mpfr_nan_p(a.value_) || b != b) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_d(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

namespace {

template <int (*Fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)>
BigReal unary(const BigReal& x) {
  BigReal r(x.precision());
  Fn(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

BigReal exp(const BigReal& x) { return unary<mpfr_exp>(x); }
BigReal log(const BigReal& x) { return unary<mpfr_log>(x); }
BigReal log1p(const BigReal& x) { return unary<mpfr_log1p>(x); }
BigReal log2(const BigReal& x) { return unary<mpfr_log2>(x); }
BigReal sqrt(const BigReal& x) { return unary<mpfr_sqrt>(x); }
BigReal abs(const BigReal& x) { return unary<mpfr_abs>(x); }
BigReal sin(const BigReal& x) { return unary<mpfr_sin>(x); }
BigReal cos(const BigReal& x) { return unary<mpfr_cos>(x); }
BigReal sinh(const BigReal& x) { return unary<mpfr_sinh>(x); }

BigReal floor(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_floor(r.get(), x.get());
  return r;
}

BigReal ldexp(const BigReal& x, long e) {
  BigReal r = x;
  return r.scale2(e);
}

BigReal max(const BigReal& a, const BigReal& b) {
  require_same_precision(a, b);
  return a < b ? b : a;
}

BigReal const_pi(BigReal::Precision bits) {
  BigReal r(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

BigReal const_ln2(BigReal::Precision bits) {
  BigReal r(bits);
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

std::ostream& operator<<(std::ostream& os, const BigReal& x) { return os << x.to_string(); }

}  // namespace bineuc
