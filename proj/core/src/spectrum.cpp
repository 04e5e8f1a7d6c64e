#include "bineuc/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include <Eigen/Eigenvalues>

#include "bineuc/error.hpp"

namespace bineuc {

namespace {

constexpr int kMinDim = 64;
constexpr int kMaxCount = 6;

void check_request(int dim, int count) {
  if (dim < kMinDim) {
    throw ValidationError(Errc::domain, "matrix dimension must be at least 64");
  }
  if (count < 1 || count > kMaxCount || count >= dim) {
    throw ValidationError(Errc::domain, "eigenvalue count must be in [1, 6] and below the dimension");
  }
}

void sort_by_modulus(std::vector<std::complex<double>>& v) {
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
    return a.imag() > b.imag();
  });
}

}  // namespace

Eigen::MatrixXd build_B2_matrix(int dim, const SpectrumOptions& opts) {
  if (dim < kMinDim) throw ValidationError(Errc::domain, "matrix dimension must be at least 64");
  if (opts.degree < 1 || opts.degree % 2 == 0 || opts.degree > 31 || opts.degree >= dim) {
    throw ValidationError(Errc::stencil, "interpolation degree must be odd and below the dimension");
  }
  const double h = opts.z_max / dim;
  const int r = (opts.degree - 1) / 2;
  const double ln2 = std::numbers::ln2;
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(dim, dim);

  auto add = [&](int row, double zq, double coef) {
    if (zq >= opts.z_max) {
      M(row, dim - 1) += coef;
      return;
    }
    const double t = zq / h;
    const long s = static_cast<long>(std::floor(t)) - r;
    for (int j = 0; j <= opts.degree; ++j) {
      double w = 1.0;
      for (int m = 0; m <= opts.degree; ++m) {
        if (m != j) w *= (t - static_cast<double>(s + m)) / static_cast<double>(j - m);
      }
      const long idx = std::min<long>(std::labs(s + j), dim);
      if (idx == 0) continue;
      M(row, idx - 1) += coef * w;
    }
  };

  auto rows = [&](int first, int last) {
    for (int i = first; i < last; ++i) {
      const double z = h * (i + 1);
      const double x = std::exp(-z * z);
      for (int k = 1; k <= 60; ++k) {
        const double c = std::ldexp(1.0, -k);
        add(i, std::sqrt(z * z + k * ln2 + std::log1p(std::ldexp(x, -k))), c);
        add(i, std::sqrt(std::log1p(std::ldexp(x, k))), -c);
      }
    }
  };
  const unsigned threads = std::max(1U, opts.threads);
  if (threads == 1) {
    rows(0, dim);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      const int b = static_cast<int>(static_cast<long>(dim) * w / threads);
      const int e = static_cast<int>(static_cast<long>(dim) * (w + 1) / threads);
      pool.emplace_back(rows, b, e);
    }
    for (auto& t : pool) t.join();
  }
  return M;
}

SpectrumResult spectrum(const Eigen::MatrixXd& matrix, int count, const SpectrumOptions& opts) {
  const int n = static_cast<int>(matrix.rows());
  if (matrix.cols() != n) throw ValidationError(Errc::domain, "matrix must be square");
  check_request(n, count);
  const int m_max = std::min(opts.max_krylov, n - 1);
  if (opts.min_krylov < count || m_max < opts.min_krylov) {
    throw ValidationError(Errc::domain, "Krylov range cannot resolve the requested count");
  }
  const double h = opts.z_max / n;

  // Arnoldi with repeated Gram-Schmidt.
  Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(n, m_max + 1);
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(m_max + 1, m_max);
  Eigen::VectorXd v0(n);
  for (int i = 0; i < n; ++i) {
    const double z = h * (i + 1);
    v0(i) = 1.0 - std::exp(-z * z);
  }
  Q.col(0) = v0.normalized();

  SpectrumResult out;
  out.matrix_dim = n;
  out.method = "arnoldi";
  std::vector<std::complex<double>> previous;
  for (int j = 0; j < m_max; ++j) {
    Eigen::VectorXd w = matrix * Q.col(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i <= j; ++i) {
        const double c = Q.col(i).dot(w);
        H(i, j) += c;
        w -= c * Q.col(i);
      }
    }
    H(j + 1, j) = w.norm();
    const bool breakdown = H(j + 1, j) < 1e-14;
    if (!breakdown) Q.col(j + 1) = w / H(j + 1, j);

    const int m = j + 1;
    Eigen::EigenSolver<Eigen::MatrixXd> es(H.topLeftCorner(m, m), true);
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      const auto ea = es.eigenvalues()(a);
      const auto eb = es.eigenvalues()(b);
      if (std::abs(ea) != std::abs(eb)) return std::abs(ea) > std::abs(eb);
      return ea.imag() > eb.imag();
    });
    // Keep the Ritz values that reappear from the previous dimension.
    std::vector<int> settled_idx;
    for (int i : order) {
      const auto value = es.eigenvalues()(i);
      for (const auto& p : previous) {
        if (std::abs(value - p) < opts.settle_tolerance) {
          settled_idx.push_back(i);
          break;
        }
      }
    }
    const bool enough = static_cast<int>(settled_idx.size()) >= count;
    const std::vector<int>& chosen = enough ? settled_idx : order;
    out.eigenvalues.clear();
    out.residual_norms.clear();
    for (int i = 0; i < std::min<int>(count, static_cast<int>(chosen.size())); ++i) {
      out.eigenvalues.push_back(es.eigenvalues()(chosen[i]));
      const Eigen::VectorXcd s = es.eigenvectors().col(chosen[i]).normalized();
      out.residual_norms.push_back(std::abs(H(j + 1, j) * s(m - 1)));
    }
    out.krylov_dim = m;
    previous.assign(es.eigenvalues().data(), es.eigenvalues().data() + m);
    if ((enough && m >= opts.min_krylov) || breakdown) {
      out.settled = enough;
      break;
    }
  }
  return out;
}

SpectrumResult spectrum_dense(const Eigen::MatrixXd& matrix, int count) {
  const int n = static_cast<int>(matrix.rows());
  if (matrix.cols() != n) throw ValidationError(Errc::domain, "matrix must be square");
  check_request(n, count);
  Eigen::EigenSolver<Eigen::MatrixXd> es(matrix, false);
  std::vector<std::complex<double>> all(es.eigenvalues().data(), es.eigenvalues().data() + n);
  sort_by_modulus(all);
  SpectrumResult out;
  out.eigenvalues.assign(all.begin(), all.begin() + count);
  out.matrix_dim = n;
  out.krylov_dim = n;
  out.settled = es.info() == Eigen::Success;
  out.method = "dense";
  return out;
}

}  // namespace bineuc
