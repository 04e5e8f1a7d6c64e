#include "bineuc/gcd.hpp"

#include <algorithm>
#include <cctype>

namespace bineuc {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::zero_input: return "zero_input";
    case Errc::even_input: return "even_input";
    case Errc::negative_input: return "negative_input";
    case Errc::not_coprime: return "not_coprime";
    case Errc::order: return "order";
    case Errc::invalid_term: return "invalid_term";
    case Errc::domain: return "domain";
    case Errc::precision_mismatch: return "precision_mismatch";
    case Errc::grid_mismatch: return "grid_mismatch";
    case Errc::stencil: return "stencil";
    case Errc::config: return "config";
    case Errc::format: return "format";
    case Errc::unavailable: return "unavailable";
  }
  return "unknown";
}

unsigned popcount(const Natural& x) {
  return static_cast<unsigned>(mpz_popcount(x.backend().data()));
}

Natural parse_natural(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return c == '_' || c == '\''; }),
          s.end());
  if (s.empty()) throw ValidationError(Errc::format, "empty integer");
  if (s.front() == '-') {
    throw ValidationError(Errc::negative_input, "expected a nonnegative integer, got '" + s + "'");
  }
  const bool hex = s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X');
  const std::size_t start = hex ? 2 : 0;
  for (std::size_t i = start; i < s.size(); ++i) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (!(hex ? std::isxdigit(c) : std::isdigit(c))) {
      throw ValidationError(Errc::format, "not an integer: '" + std::string(text) + "'");
    }
  }
  return Natural(s);
}

std::string to_string(const Natural& x) { return x.str(); }

namespace {

void require_positive(const Natural& x, const char* name) {
  if (x.sign() < 0) {
    throw ValidationError(Errc::negative_input, std::string(name) + " must be nonnegative");
  }
  if (x.is_zero()) {
    throw ValidationError(Errc::zero_input, std::string(name) + " must be positive");
  }
}

}  // namespace

unsigned val2(const Natural& u) {
  require_positive(u, "u");
  return trailing_zeros(u);
}

GcdResult gcd_binary(const Natural& u, const Natural& v, const TraceOptions& opts) {
  require_positive(u, "u");
  require_positive(v, "v");
  const unsigned su = trailing_zeros(u);
  const unsigned sv = trailing_zeros(v);
  GcdResult r = binary_gcd_odd<Natural>(u >> su, v >> sv, opts);
  r.g <<= std::min(su, sv);
  return r;
}

GcdResult gcd_algorithm_v(const Natural& u, const Natural& v, const TraceOptions& opts) {
  require_positive(u, "u");
  require_positive(v, "v");
  if (!is_odd(u) || !is_odd(v)) {
    throw ValidationError(Errc::even_input, "Algorithm V requires odd operands");
  }
  return algorithm_v_odd<Natural>(u, v, opts);
}

ExtendedGcd gcd_extended(const Natural& u_in, const Natural& v_in) {
  require_positive(u_in, "u");
  require_positive(v_in, "v");

  const unsigned s = std::min(trailing_zeros(u_in), trailing_zeros(v_in));
  const Natural x = u_in >> s;
  const Natural y = v_in >> s;

  // Invariants: a*x + b*y = p and c*x + d*y = q.
  Natural p = x;
  Natural q = y;
  Integer a = 1, b = 0, c = 0, d = 1;
  auto halve = [&](Natural& w, Integer& e, Integer& f) {
    while (!is_odd(w)) {
      w >>= 1;
      if (!is_odd(e) && !is_odd(f)) {
        e >>= 1;
        f >>= 1;
      } else {
        e = (e + y) / 2;
        f = (f - x) / 2;
      }
    }
  };
  for (;;) {
    halve(p, a, b);
    halve(q, c, d);
    if (p >= q) {
      p -= q;
      a -= c;
      b -= d;
    } else {
      q -= p;
      c -= a;
      d -= b;
    }
    if (p.is_zero()) break;
  }

  ExtendedGcd out;
  out.g = q << s;
  // c*u + d*v = g; move to the representative with 0 <= alpha < v/g.
  const Natural v_red = v_in / out.g;
  Integer alpha = c % v_red;
  if (alpha.sign() < 0) alpha += v_red;
  out.beta = (Integer(out.g) - alpha * u_in) / v_in;
  out.alpha = std::move(alpha);
  return out;
}

}  // namespace bineuc
