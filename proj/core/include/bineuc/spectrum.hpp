#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace bineuc {

struct SpectrumOptions {
  double z_max = 11.0;
  int degree = 9;
  /// Krylov dimensions tried, from min_krylov up to max_krylov.
  int min_krylov = 4;
  int max_krylov = 16;
  /// A Ritz value counts as settled when it moves less than this between
  /// consecutive Krylov dimensions.
  double settle_tolerance = 1e-5;
  unsigned threads = 1;
};

/// Nodal matrix of one step of the F~ recurrence at machine precision.
/// Unknowns are F~ at z_j = j h, j = 1..dim, h = z_max/dim; F~ at z = 0 is 0
/// and nodes past z_max take the value at z_max.
Eigen::MatrixXd build_B2_matrix(int dim, const SpectrumOptions& opts = {});

struct SpectrumResult {
  /// Ordered by descending modulus.
  std::vector<std::complex<double>> eigenvalues;
  std::vector<double> residual_norms;
  int matrix_dim = 0;
  int krylov_dim = 0;
  bool settled = false;
  std::string method;
};

/// Leading eigenvalues from Arnoldi started at the smooth vector 1 - x.
SpectrumResult spectrum(const Eigen::MatrixXd& matrix, int count,
                        const SpectrumOptions& opts = {});

/// All eigenvalues of the matrix by a dense solver, top `count` returned.
SpectrumResult spectrum_dense(const Eigen::MatrixXd& matrix, int count);

}  // namespace bineuc
