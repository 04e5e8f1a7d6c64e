#include "bineuc/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <utility>

#include "bineuc/error.hpp"

namespace bineuc {

namespace {

/// Runs fn(begin, end, worker) over [first, last) split into contiguous
/// chunks, one per worker. Chunk boundaries only affect scheduling.
template <class Fn>
void parallel_chunks(std::size_t first, std::size_t last, unsigned threads, Fn&& fn) {
  const std::size_t n = last - first;
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
    fn(first, last, 0U);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    const std::size_t b = first + n * w / threads;
    const std::size_t e = first + n * (w + 1) / threads;
    pool.emplace_back([&fn, b, e, w] { fn(b, e, w); });
  }
  for (auto& t : pool) t.join();
}

void require_degree(int degree, const Grid& grid) {
  if (degree < 1 || degree % 2 == 0 || degree > 31) {
    throw ValidationError(Errc::stencil,
                          "interpolation degree must be odd in [1, 31], got " + std::to_string(degree));
  }
  if (grid.last() < static_cast<std::size_t>(degree) + 1) {
    throw ValidationError(Errc::stencil, "grid too coarse for interpolation degree " +
                                             std::to_string(degree));
  }
}

}  // namespace

struct IterationPlan::Impl {
  Grid grid;
  int degree;
  int k_max;
  mpfr_prec_t prec;
  std::size_t limbs_per_value;

  std::vector<std::size_t> begin;   // per point, into the term arrays
  std::vector<std::int32_t> start;  // stencil start (may be negative)
  std::vector<std::int16_t> signed_k;
  std::vector<std::int8_t> kind;
  std::vector<mpfr_exp_t> exps;
  std::vector<mp_limb_t> limbs;
  std::vector<BigReal> tail;  // contributions of arguments past z_max

  Impl(const Grid& g, int d) : grid(g), degree(d) {}

  struct Chunk {
    std::vector<std::size_t> counts;
    std::vector<std::int32_t> start;
    std::vector<std::int16_t> signed_k;
    std::vector<std::int8_t> kind;
    std::vector<mpfr_exp_t> exps;
    std::vector<mp_limb_t> limbs;
    std::vector<BigReal> tail;
  };

  void push_term(Chunk& c, const BigReal& zp, const BigReal& h, int sk) const {
    const long last = static_cast<long>(grid.last());
    BigReal t = zp / h;
    const long fl = mpfr_get_si(t.get(), MPFR_RNDD);
    const long s = stencil_start(fl, degree, last);
    t -= static_cast<double>(s);
    const std::size_t at = c.limbs.size();
    c.limbs.resize(at + limbs_per_value);
    mpfr_t view;
    mpfr_custom_init(c.limbs.data() + at, prec);
    mpfr_custom_init_set(view, MPFR_ZERO_KIND, 0, prec, c.limbs.data() + at);
    mpfr_set(view, t.get(), MPFR_RNDN);
    const int k = mpfr_custom_get_kind(view);
    c.kind.push_back(static_cast<std::int8_t>(k));
    c.exps.push_back(k == MPFR_REGULAR_KIND ? mpfr_custom_get_exp(view) : 0);
    c.start.push_back(static_cast<std::int32_t>(s));
    c.signed_k.push_back(static_cast<std::int16_t>(sk));
  }

  void build_chunk(std::size_t first, std::size_t last_point, Chunk& c) const {
    const BigReal h = grid.h();
    const BigReal ln2 = const_ln2(prec);
    BigReal zmax2 = grid.z_max() * grid.z_max();
    for (std::size_t i = first; i < last_point; ++i) {
      std::size_t before = c.start.size();
      BigReal tail_i(prec);
      if (i != 0) {
        const BigReal zi = grid.z(i);
        const BigReal zi2 = zi * zi;
        const BigReal xi = exp(-zi2);
        for (int k = 1; k <= k_max; ++k) {
          // 1/(1 + 2^k/x): -ln = z^2 + k ln2 + log1p(x 2^-k)
          BigReal y = ln2 * static_cast<double>(k);
          y += zi2;
          if (y >= zmax2) {
            tail_i += ldexp(BigReal(1L, prec), -k);
          } else {
            y += log1p(ldexp(xi, -k));
            const BigReal zp = sqrt(y);
            if (zp >= grid.z_max()) {
              tail_i += ldexp(BigReal(1L, prec), -k);
            } else {
              push_term(c, zp, h, k);
            }
          }
          // 1/(1 + 2^k x): -ln = log1p(2^k x)
          const BigReal zp = sqrt(log1p(ldexp(xi, k)));
          if (zp >= grid.z_max()) {
            tail_i -= ldexp(BigReal(1L, prec), -k);
          } else {
            push_term(c, zp, h, -k);
          }
        }
      }
      c.counts.push_back(c.start.size() - before);
      c.tail.push_back(std::move(tail_i));
    }
  }
};

IterationPlan::IterationPlan(const Grid& grid, int degree, unsigned threads)
    : impl_(std::make_unique<Impl>(grid, degree)) {
  require_degree(degree, grid);
  Impl& p = *impl_;
  p.prec = grid.precision();
  p.k_max = static_cast<int>(p.prec) + 8;
  if (p.k_max > 32000) throw ValidationError(Errc::domain, "precision too large");
  p.limbs_per_value = mpfr_custom_get_size(p.prec) / sizeof(mp_limb_t);

  threads = std::max(1U, threads);
  std::vector<Impl::Chunk> chunks(threads);
  parallel_chunks(0, grid.size(), threads, [&](std::size_t b, std::size_t e, unsigned w) {
    p.build_chunk(b, e, chunks[w]);
  });

  p.begin.reserve(grid.size() + 1);
  p.begin.push_back(0);
  for (auto& c : chunks) {
    for (std::size_t n : c.counts) p.begin.push_back(p.begin.back() + n);
    p.start.insert(p.start.end(), c.start.begin(), c.start.end());
    p.signed_k.insert(p.signed_k.end(), c.signed_k.begin(), c.signed_k.end());
    p.kind.insert(p.kind.end(), c.kind.begin(), c.kind.end());
    p.exps.insert(p.exps.end(), c.exps.begin(), c.exps.end());
    p.limbs.insert(p.limbs.end(), c.limbs.begin(), c.limbs.end());
    for (auto& t : c.tail) p.tail.push_back(std::move(t));
    c = Impl::Chunk{};
  }
}

IterationPlan::~IterationPlan() = default;
IterationPlan::IterationPlan(IterationPlan&&) noexcept = default;
IterationPlan& IterationPlan::operator=(IterationPlan&&) noexcept = default;

const Grid& IterationPlan::grid() const noexcept { return impl_->grid; }
int IterationPlan::degree() const noexcept { return impl_->degree; }
int IterationPlan::k_max() const noexcept { return impl_->k_max; }
std::size_t IterationPlan::term_count() const noexcept { return impl_->start.size(); }

std::vector<BigReal> IterationPlan::apply(const std::vector<BigReal>& values, unsigned threads,
                                          double* change) const {
  const Impl& p = *impl_;
  const long last = static_cast<long>(p.grid.last());
  if (values.size() != p.grid.size()) {
    throw ValidationError(Errc::grid_mismatch, "value count does not match the plan's grid");
  }
  for (const auto& v : values) require_same_precision(v, p.tail.front());

  // Scaled forward differences over the mirrored range [-r, last].
  const int d = p.degree;
  const long r = (d - 1) / 2;
  const std::size_t width = static_cast<std::size_t>(last + r + 1);
  std::vector<std::vector<BigReal>> diff(d + 1);
  diff[0].reserve(width);
  for (long j = -r; j <= last; ++j) diff[0].push_back(mirrored(values, j));
  for (int m = 1; m <= d; ++m) {
    const auto& prev = diff[m - 1];
    auto& cur = diff[m];
    cur.reserve(width - m);
    for (std::size_t j = 0; j + 1 < prev.size(); ++j) {
      BigReal v = prev[j + 1] - prev[j];
      v /= static_cast<double>(m);
      cur.push_back(std::move(v));
    }
  }

  std::vector<BigReal> out(values.size(), BigReal(p.prec));
  parallel_chunks(1, values.size(), threads, [&](std::size_t b, std::size_t e, unsigned) {
    mpfr_t acc, poly, step, tau;
    mpfr_inits2(p.prec, acc, poly, step, static_cast<mpfr_ptr>(nullptr));
    for (std::size_t i = b; i < e; ++i) {
      mpfr_set(acc, p.tail[i].get(), MPFR_RNDN);
      for (std::size_t n = p.begin[i]; n < p.begin[i + 1]; ++n) {
        mpfr_custom_init_set(tau, p.kind[n], p.exps[n], p.prec,
                             const_cast<mp_limb_t*>(p.limbs.data() + n * p.limbs_per_value));
        const std::size_t s = static_cast<std::size_t>(p.start[n] + r);
        mpfr_set(poly, diff[d][s].get(), MPFR_RNDN);
        for (int m = d - 1; m >= 0; --m) {
          mpfr_sub_ui(step, tau, static_cast<unsigned long>(m), MPFR_RNDN);
          mpfr_mul(poly, poly, step, MPFR_RNDN);
          mpfr_add(poly, poly, diff[m][s].get(), MPFR_RNDN);
        }
        const int sk = p.signed_k[n];
        mpfr_mul_2si(poly, poly, -std::abs(sk), MPFR_RNDN);
        if (sk > 0) {
          mpfr_add(acc, acc, poly, MPFR_RNDN);
        } else {
          mpfr_sub(acc, acc, poly, MPFR_RNDN);
        }
      }
      mpfr_set(out[i].get(), acc, MPFR_RNDN);
    }
    mpfr_clears(acc, poly, step, static_cast<mpfr_ptr>(nullptr));
  });
  mpfr_set_zero(out[0].get(), 1);

  if (change != nullptr) {
    double worst = 0.0;
    BigReal diff_i(p.prec);
    for (std::size_t i = 0; i < out.size(); ++i) {
      mpfr_sub(diff_i.get(), out[i].get(), values[i].get(), MPFR_RNDN);
      worst = std::max(worst, std::abs(diff_i.to_double()));
    }
    *change = worst;
  }
  return out;
}

GridFunction initial_ftilde(const Grid& grid, int degree) {
  require_degree(degree, grid);
  GridFunction F{grid, {}, 0, false, 0.0, degree};
  F.values.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) F.values.push_back(1.0 - grid.x(i));
  mpfr_set_zero(F.values[0].get(), 1);
  return F;
}

GridFunction continue_iteration(const GridFunction& start, const IterationOptions& opts) {
  if (opts.degree != start.degree) {
    throw ValidationError(Errc::stencil, "iteration degree differs from the stored function's");
  }
  const IterationPlan plan(start.grid, opts.degree, opts.threads);
  GridFunction F = start;
  const bool fixed = opts.fixed_iterations > 0;
  const int steps = fixed ? opts.fixed_iterations : opts.max_iterations;
  F.converged = false;
  for (int n = 0; n < steps; ++n) {
    double change = 0.0;
    F.values = plan.apply(F.values, opts.threads, &change);
    ++F.iterations;
    F.last_change = change;
    if (opts.on_step) opts.on_step(F.iterations, change);
    if (!fixed && change < opts.tolerance) break;
  }
  F.converged = F.last_change < opts.tolerance;
  return F;
}

GridFunction iterate_ftilde(const Grid& grid, int steps, const IterationOptions& opts) {
  if (steps < 1) throw ValidationError(Errc::domain, "iteration count must be at least 1");
  IterationOptions o = opts;
  o.fixed_iterations = steps;
  return continue_iteration(initial_ftilde(grid, opts.degree), o);
}

GridFunction solve_fixed_point(const Grid& grid, const IterationOptions& opts) {
  return continue_iteration(initial_ftilde(grid, opts.degree), opts);
}

LocalFit<BigReal> eval_ftilde_z_slope(const GridFunction& F, const BigReal& z) {
  const Grid& g = F.grid;
  require_same_precision(z, g.z_max());
  if (z.sign() < 0 || z.is_nan()) throw ValidationError(Errc::domain, "z must be nonnegative");
  const BigReal::Precision prec = g.precision();
  if (z >= g.z_max()) return {BigReal(1L, prec), BigReal(prec)};
  const BigReal h = g.h();
  const BigReal t = z / h;
  const long last = static_cast<long>(g.last());
  const long fl = mpfr_get_si(t.get(), MPFR_RNDD);
  const long s = stencil_start(fl, F.degree, last);
  std::vector<BigReal> y;
  y.reserve(F.degree + 1);
  for (int j = 0; j <= F.degree; ++j) y.push_back(mirrored(F.values, s + j));
  BigReal tau = t - static_cast<double>(s);
  auto fit = newton_forward(y, tau);
  fit.slope /= h;
  if (mpfr_integer_p(t.get())) fit.value = F.values[static_cast<std::size_t>(fl)];
  return fit;
}

BigReal eval_ftilde_z(const GridFunction& F, const BigReal& z) {
  return eval_ftilde_z_slope(F, z).value;
}

BigReal eval_ftilde(const GridFunction& F, const BigReal& x) {
  require_same_precision(x, F.grid.z_max());
  if (!(x > 0.0) || x > 1.0) throw ValidationError(Errc::domain, "x must lie in (0, 1]");
  BigReal z = sqrt(-log(x));
  // Snap to a node when z agrees with it to rounding, so stored values
  // come back unchanged.
  const BigReal h = F.grid.h();
  BigReal t = z / h;
  BigReal nearest(t.precision());
  mpfr_round(nearest.get(), t.get());
  BigReal gap = abs(t - nearest);
  if (gap < ldexp(BigReal(1L, t.precision()), 24 - static_cast<long>(t.precision())) &&
      nearest <= static_cast<double>(F.grid.last())) {
    return F.values[static_cast<std::size_t>(mpfr_get_si(nearest.get(), MPFR_RNDN))];
  }
  return eval_ftilde_z(F, z);
}

BigReal eval_ftilde_extended(const GridFunction& F, const BigReal& x) {
  if (!(x > 0.0)) throw ValidationError(Errc::domain, "x must be positive");
  if (x > 1.0) return -eval_ftilde(F, 1.0 / x);
  return eval_ftilde(F, x);
}

BigReal ftilde_dy(const GridFunction& F, const BigReal& z) {
  const BigReal h = F.grid.h();
  if (z >= h) return eval_ftilde_z_slope(F, z).slope / (z * 2.0);
  // Near z = 0 the data are even in z, so interpolate in y = z^2 through
  // y_j = (j h)^2, j = 0..(degree+1)/2, and differentiate in y directly.
  const BigReal::Precision prec = F.grid.precision();
  const int m = (F.degree + 1) / 2;
  std::vector<BigReal> ys;
  std::vector<BigReal> c;
  for (int j = 0; j <= m; ++j) {
    BigReal yj = h * static_cast<double>(j);
    ys.push_back(yj * yj);
    c.push_back(F.values[static_cast<std::size_t>(j)]);
  }
  for (int order = 1; order <= m; ++order) {
    for (int j = m; j >= order; --j) c[j] = (c[j] - c[j - 1]) / (ys[j] - ys[j - order]);
  }
  const BigReal y = z * z;
  BigReal p = c[m];
  BigReal dp(prec);
  for (int j = m - 1; j >= 0; --j) {
    const BigReal step = y - ys[j];
    dp = p + step * dp;
    p = c[j] + step * p;
  }
  return dp;
}

BigReal density_at_z(const GridFunction& F, const BigReal& z) {
  require_same_precision(z, F.grid.z_max());
  if (z.sign() < 0) throw ValidationError(Errc::domain, "z must be nonnegative");
  // f(x) = -dF~/dx = (dF~/dy) / x with y = -ln x
  return ftilde_dy(F, z) / exp(-(z * z));
}

BigReal density_at(const GridFunction& F, const BigReal& x) {
  require_same_precision(x, F.grid.z_max());
  if (!(x > 0.0) || x > 1.0) throw ValidationError(Errc::domain, "x must lie in (0, 1]");
  return density_at_z(F, sqrt(-log(x)));
}

NodalInterpolant ftilde_interpolant(const GridFunction& F) {
  std::vector<double> v;
  v.reserve(F.values.size());
  for (const auto& b : F.values) v.push_back(b.to_double());
  return NodalInterpolant(std::move(v), F.grid.h().to_double(), F.degree, 1.0);
}

ShapeReport check_shape(const GridFunction& F) {
  ShapeReport rep;
  for (std::size_t i = 0; i < F.values.size(); ++i) {
    const double v = F.values[i].to_double();
    rep.max_out_of_range = std::max({rep.max_out_of_range, -v, v - 1.0});
    if (i > 0) {
      const BigReal d = F.values[i - 1] - F.values[i];
      rep.max_decrease = std::max(rep.max_decrease, d.to_double());
    }
  }
  return rep;
}

}  // namespace bineuc
