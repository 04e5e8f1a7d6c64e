#include "bineuc/binary_cf.hpp"

#include <boost/multiprecision/integer.hpp>

#include "bineuc/error.hpp"
#include "bineuc/gcd.hpp"

namespace bineuc {

namespace {

void validate_term(const CfTerm& t) {
  if (t.k == 0) throw ValidationError(Errc::invalid_term, "binary CF term needs k >= 1");
  if (t.a.sign() <= 0 || !is_odd(t.a)) {
    throw ValidationError(Errc::invalid_term, "binary CF term needs a positive odd a");
  }
  if (t.a >= (Natural(1) << t.k)) {
    throw ValidationError(Errc::invalid_term, "binary CF term needs a < 2^k");
  }
}

}  // namespace

BinaryCF expand(const Natural& u_in, const Natural& v_in) {
  if (u_in.sign() <= 0 || v_in.sign() <= 0) {
    throw ValidationError(Errc::zero_input, "expand needs positive operands");
  }
  if (!is_odd(u_in) || !is_odd(v_in)) {
    throw ValidationError(Errc::even_input, "expand needs odd operands");
  }
  if (u_in > v_in) throw ValidationError(Errc::order, "expand needs u <= v");
  if (boost::multiprecision::gcd(u_in, v_in) != 1) {
    throw ValidationError(Errc::not_coprime, "expand needs a reduced fraction");
  }

  BinaryCF cf;
  Natural u = u_in;
  Natural v = v_in;
  while (u != v) {
    // Inner loop: v -> u + 2^b1 v1, v1 -> u + 2^b2 v2, ... until v_m <= u.
    // a = 1 + 2^b1 + 2^(b1+b2) + ... + 2^(b1+...+b(m-1)), k = b1 + ... + bm.
    Natural a = 0;
    std::uint32_t k = 0;
    while (u < v) {
      Natural t = v - u;
      const unsigned j = trailing_zeros(t);
      bit_set(a, k);
      k += j;
      v = t >> j;
    }
    cf.push_back({std::move(a), k});
    std::swap(u, v);
  }
  return cf;
}

std::pair<Natural, Natural> evaluate(const BinaryCF& cf) {
  for (const auto& t : cf) validate_term(t);
  // Fold from the tail: x_r = 1, x_(i-1) = 1/(a_i + 2^k_i x_i).
  Natural p = 1;
  Natural q = 1;
  for (auto it = cf.rbegin(); it != cf.rend(); ++it) {
    Natural denom = it->a * q + (p << it->k);
    p = std::move(q);
    q = std::move(denom);
  }
  const Natural g = boost::multiprecision::gcd(p, q);
  if (g != 1) {
    p /= g;
    q /= g;
  }
  return {std::move(p), std::move(q)};
}

CFStats stats(const BinaryCF& cf) {
  CFStats s;
  s.depth = cf.size();
  for (const auto& t : cf) {
    s.ones_total += popcount(t.a);
    s.shifts_total += t.k;
  }
  return s;
}

std::string render(const BinaryCF& cf) {
  if (cf.empty()) return "1";
  const auto pow2 = [](std::uint32_t k) { return to_string(Natural(1) << k); };
  std::string out;
  for (std::size_t i = 0; i < cf.size(); ++i) {
    const std::string numer = i == 0 ? std::string("1") : pow2(cf[i - 1].k);
    if (i > 0) out += " + ";
    out += numer + "/";
    if (i + 1 == cf.size()) {
      out += "(" + to_string(cf[i].a) + "+" + pow2(cf[i].k) + ")";
    } else {
      out += to_string(cf[i].a);
    }
  }
  return out;
}

}  // namespace bineuc
