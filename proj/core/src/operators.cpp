#include "bineuc/operators.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <utility>

#include <boost/math/quadrature/gauss.hpp>

#include "bineuc/density.hpp"
#include "bineuc/error.hpp"

namespace bineuc {

namespace {

int term_count(double x, const OperatorOptions& o) {
  const double extra = x > 0 ? std::log2(1.0 / x) + o.extra_terms : 1000.0;
  return std::max(o.min_terms, static_cast<int>(std::ceil(extra)));
}

void check_x(double x) {
  if (!(x > 0.0) || x > 1.0) throw ValidationError(Errc::domain, "operators act on x in (0, 1]");
}

double z_of(double x) { return std::sqrt(-std::log(x)); }

// The Euler-Maclaurin tail of V is used only once 2^k x reaches this.
constexpr double kMinTailShift = 64.0;
constexpr int kMaxExactLevel = 24;

}  // namespace

Density uniform_density() {
  return {[](double) { return 1.0; }, [](double x) { return x; }};
}

DensityGrid DensityGrid::from_fixed_point(const GridFunction& F) {
  std::vector<double> dens;
  std::vector<double> dist;
  dens.reserve(F.values.size());
  dist.reserve(F.values.size());
  // Once F = 1 - F~ is this small its derivative is dominated by the
  // discretization error of the fixed point; f grows linearly in y = z^2
  // there and is continued that way.
  const double reliable = std::ldexp(1.0, -static_cast<int>(F.grid.precision() / 3));
  const double h = F.grid.h().to_double();
  std::size_t cut = F.values.size();
  for (std::size_t i = 0; i < F.values.size(); ++i) {
    const double Fi = (1.0 - F.values[i]).to_double();
    dist.push_back(Fi);
    if (cut == F.values.size() && Fi < reliable) cut = i;
    if (cut == F.values.size()) dens.push_back(density_at_z(F, F.grid.z(i)).to_double());
  }
  if (cut < F.values.size()) {
    const std::size_t back = std::max<std::size_t>(1, cut / 4);
    if (cut < back + 1) throw ValidationError(Errc::domain, "fixed point has no reliable density samples");
    const std::size_t a = cut - 1 - back, b = cut - 1;
    const auto y = [h](std::size_t i) { return (h * i) * (h * i); };
    const double slope = (dens[b] - dens[a]) / (y(b) - y(a));
    for (std::size_t i = cut; i < F.values.size(); ++i) dens.push_back(dens[b] + slope * (y(i) - y(b)));
  }
  const double tail_density = dens.back();
  DensityGrid out{NodalInterpolant(std::move(dens), h, F.degree, tail_density),
                  NodalInterpolant(std::move(dist), h, F.degree, 0.0)};
  return out;
}

Density DensityGrid::as_density() const {
  auto self = std::make_shared<DensityGrid>(*this);
  return {[self](double x) { return self->density(z_of(x)); },
          [self](double x) { return x >= 1.0 ? self->distribution(0.0) : self->distribution(z_of(x)); }};
}

double DensityGrid::min_value() const {
  const auto& v = density.values();
  return *std::min_element(v.begin(), v.end());
}

Density apply_U2(const Density& f, const OperatorOptions& o) {
  Density out;
  out.f = [f, o](double x) {
    check_x(x);
    double s = 0.0;
    const int n = term_count(x, o);
    for (int k = 1; k <= n; ++k) {
      const double w = 1.0 / (1.0 + std::ldexp(x, k));
      s += w * w * f(w);
    }
    return s;
  };
  if (f.has_cumulative()) {
    out.cumulative = [f, o](double x) {
      if (x <= 0.0) return 0.0;
      const double top = f.cumulative(1.0);
      double s = 0.0;
      const int n = term_count(x, o);
      for (int k = 1; k <= n; ++k) {
        s += std::ldexp(top - f.cumulative(1.0 / (1.0 + std::ldexp(x, k))), -k);
      }
      return s;
    };
  }
  return out;
}

Density apply_Utilde2(const Density& f, const OperatorOptions& o) {
  // (1/x)^2 U[f](1/x) = sum (x + 2^k)^-2 f(x/(x + 2^k))
  Density out;
  out.f = [f, o](double x) {
    check_x(x);
    double s = 0.0;
    for (int k = 1; k <= o.min_terms; ++k) {
      const double d = x + std::ldexp(1.0, k);
      s += f(x / d) / (d * d);
    }
    return s;
  };
  if (f.has_cumulative()) {
    out.cumulative = [f, o](double x) {
      if (x <= 0.0) return 0.0;
      double s = 0.0;
      for (int k = 1; k <= o.min_terms; ++k) {
        s += std::ldexp(f.cumulative(x / (x + std::ldexp(1.0, k))), -k);
      }
      return s;
    };
  }
  return out;
}

Density apply_B2(const Density& f, const OperatorOptions& o) {
  Density out;
  out.f = [f, o](double x) {
    check_x(x);
    double s = 0.0;
    const int n = term_count(x, o);
    for (int k = 1; k <= n; ++k) {
      const double p = std::ldexp(1.0, k);
      const double d = x + p;
      const double w = 1.0 / (1.0 + p * x);
      s += f(x / d) / (d * d) + w * w * f(w);
    }
    return s;
  };
  if (f.has_cumulative()) {
    out.cumulative = [f, o](double x) {
      if (x <= 0.0) return 0.0;
      const double top = f.cumulative(1.0);
      double s = 0.0;
      const int n = term_count(x, o);
      for (int k = 1; k <= n; ++k) {
        const double p = std::ldexp(1.0, k);
        s += std::ldexp(top - f.cumulative(1.0 / (1.0 + p * x)) + f.cumulative(x / (x + p)), -k);
      }
      return s;
    };
  }
  return out;
}

Density apply_V2(const Density& f, const OperatorOptions& o) {
  if (!f.has_cumulative()) {
    throw ValidationError(Errc::unavailable,
                          "V needs the cumulative of its argument for the large-k tail");
  }
  if (o.exact_levels < 1 || o.max_levels < o.exact_levels || o.max_levels > 1000) {
    throw ValidationError(Errc::domain, "invalid V truncation levels");
  }
  Density out;
  out.f = [f, o](double x) {
    check_x(x);
    double s = 0.0;
    for (int k = 1; k <= o.max_levels; ++k) {
      const double c = std::ldexp(x, k);
      const double top = std::ldexp(1.0, k);
      if (k <= o.exact_levels || (c < kMinTailShift && k <= kMaxExactLevel)) {
        double level = 0.0;
        for (double a = 1.0; a < top; a += 2.0) {
          const double w = 1.0 / (a + c);
          level += w * w * f(w);
        }
        s += level;
        continue;
      }
      if (c < kMinTailShift) {
        throw ValidationError(Errc::domain, "x too small for the truncated V sum");
      }
      // Odd a are midpoints of [2j, 2j+2]; with phi(a) = (a+c)^-2 f(1/(a+c)),
      //   sum phi(odd a) = (1/2) int_0^{2^k} phi - (1/12)(phi'(2^k) - phi'(0)) + ...
      // and the integral equals C(1/c) - C(1/(2^k + c)).
      auto phi = [&](double a) {
        const double w = 1.0 / (a + c);
        return w * w * f(w);
      };
      auto dphi = [&](double a) {
        const double d = 1e-3 * (a + c);
        return (phi(a + d) - phi(a - d)) / (2.0 * d);
      };
      const double integral = f.cumulative(1.0 / c) - f.cumulative(1.0 / (top + c));
      s += 0.5 * integral - (dphi(top) - dphi(0.0)) / 12.0;
    }
    return s;
  };
  return out;
}

double l1_norm(const Density& f, double z_max, int points) {
  if (points < 20) throw ValidationError(Errc::domain, "need at least 20 quadrature points");
  const int panels = points / 20;
  const double w = z_max / panels;
  double s = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = w * p;
    s += boost::math::quadrature::gauss<double, 20>::integrate(
        [&](double z) {
          const double x = std::exp(-z * z);
          return f(x) * 2.0 * z * x;
        },
        lo, lo + w);
  }
  return s;
}

std::vector<double> identity_sample_points() {
  std::vector<double> pts;
  for (int j = 0; j < 16; ++j) pts.push_back(0.125 + 0.875 * j / 15.0);
  return pts;
}

IdentityResiduals operator_residuals(const Density& f, const std::vector<double>& points,
                                     const OperatorOptions& o) {
  const Density Uf = apply_U2(f, o);
  const Density Utf = apply_Utilde2(f, o);
  const Density Bf = apply_B2(f, o);
  const Density Vf = apply_V2(f, o);
  const Density VUtf = apply_V2(Utf, o);
  const Density VUf = apply_V2(Uf, o);
  const Density VBf = apply_V2(Bf, o);
  IdentityResiduals r;
  for (double x : points) {
    const double u = Uf(x);
    const double b = Bf(x);
    const double v = Vf(x);
    r.additivity = std::max(r.additivity, std::abs(u + Utf(x) - b));
    r.lemma = std::max(r.lemma, std::abs(v - VUtf(x) - u));
    // (V - I) U f - V (B - I) f = VUf - Uf - VBf + Vf
    r.theorem = std::max(r.theorem, std::abs(VUf(x) - u - (VBf(x) - v)));
  }
  return r;
}

}  // namespace bineuc
