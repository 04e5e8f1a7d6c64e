#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "bineuc/error.hpp"

namespace bineuc {

/// First node of the (degree+1)-point stencil used around t (t in units of
/// the grid step). Centered, shifted back near the last node. Starts below
/// zero are resolved by mirroring the data about node 0.
inline long stencil_start(long floor_t, int degree, long last) {
  const long s = floor_t - (degree - 1) / 2;
  return std::min(s, last - degree);
}

template <class T>
const T& mirrored(const std::vector<T>& v, long j) {
  return v[static_cast<std::size_t>(j < 0 ? -j : j)];
}

template <class T>
struct LocalFit {
  T value;
  T slope;  // derivative with respect to t
};

/// Evaluates the interpolating polynomial through (m, y[m]), m = 0..d, at
/// tau, in Newton forward form. `y` is overwritten with the scaled forward
/// differences D_m = Delta^m y_0 / m!.
template <class T>
LocalFit<T> newton_forward(std::vector<T>& y, const T& tau) {
  const int d = static_cast<int>(y.size()) - 1;
  for (int m = 1; m <= d; ++m) {
    for (int j = d; j >= m; --j) {
      y[j] -= y[j - 1];
      y[j] /= static_cast<double>(m);
    }
  }
  T p = y[d];
  T q = y[d];
  q -= q;  // zero at the right precision
  for (int m = d - 1; m >= 0; --m) {
    T step = tau;
    step -= static_cast<double>(m);
    q *= step;
    q += p;
    p *= step;
    p += y[m];
  }
  return {std::move(p), std::move(q)};
}

/// Machine-precision local interpolant of nodal data v[i] at z_i = i*h,
/// mirrored about z = 0. Beyond the last node it returns `beyond`.
class NodalInterpolant {
 public:
  NodalInterpolant() = default;
  NodalInterpolant(std::vector<double> values, double h, int degree, double beyond)
      : v_(std::move(values)), h_(h), degree_(degree), beyond_(beyond) {
    if (degree_ < 1 || degree_ > 31 || v_.size() < static_cast<std::size_t>(degree_) + 1) {
      throw ValidationError(Errc::stencil, "interpolation degree does not fit the data");
    }
  }

  double h() const noexcept { return h_; }
  double z_max() const noexcept { return h_ * static_cast<double>(v_.size() - 1); }
  const std::vector<double>& values() const noexcept { return v_; }

  double operator()(double z) const { return eval(z, nullptr); }

  /// Value and derivative in z.
  double eval(double z, double* dz) const {
    const long last = static_cast<long>(v_.size()) - 1;
    const double t = std::abs(z) / h_;
    if (t >= static_cast<double>(last)) {
      if (dz != nullptr) *dz = 0.0;
      return beyond_;
    }
    const long fl = static_cast<long>(t);
    const long s = stencil_start(fl, degree_, last);
    double y[32];
    for (int j = 0; j <= degree_; ++j) y[j] = mirrored(v_, s + j);
    for (int m = 1; m <= degree_; ++m) {
      for (int j = degree_; j >= m; --j) y[j] = (y[j] - y[j - 1]) / m;
    }
    const double tau = t - static_cast<double>(s);
    double p = y[degree_];
    double q = 0.0;
    for (int m = degree_ - 1; m >= 0; --m) {
      const double step = tau - m;
      q = p + step * q;
      p = y[m] + step * p;
    }
    if (dz != nullptr) *dz = (z < 0 ? -q : q) / h_;
    return p;
  }

 private:
  std::vector<double> v_;
  double h_ = 1.0;
  int degree_ = 9;
  double beyond_ = 0.0;
};

}  // namespace bineuc
