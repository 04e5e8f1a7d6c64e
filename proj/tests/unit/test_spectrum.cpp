#include <gtest/gtest.h>

#include <cmath>

#include "bineuc/error.hpp"
#include "bineuc/spectrum.hpp"

namespace bineuc {
namespace {

TEST(Spectrum, Rejections) {
  EXPECT_THROW(build_B2_matrix(32), ValidationError);
  const auto M = build_B2_matrix(64);
  EXPECT_THROW(spectrum(M, 0), ValidationError);
  EXPECT_THROW(spectrum(M, 7), ValidationError);
  EXPECT_THROW(spectrum_dense(M, 7), ValidationError);
  EXPECT_THROW(spectrum(Eigen::MatrixXd::Identity(64, 32), 1), ValidationError);
}

TEST(Spectrum, ConstantTailIsPreserved) {
  // Rows act on F~; the constant 1 beyond z_max is reproduced at the last node.
  const auto M = build_B2_matrix(256);
  EXPECT_EQ(M.rows(), 256);
  Eigen::VectorXd ones = Eigen::VectorXd::Ones(256);
  EXPECT_NEAR((M * ones)(255), 1.0, 1e-12);
}

TEST(Spectrum, LeadingEigenvaluesAtModerateDimension) {
  const auto M = build_B2_matrix(256);
  const auto s = spectrum(M, 3);
  ASSERT_TRUE(s.settled);
  ASSERT_EQ(s.eigenvalues.size(), 3U);
  EXPECT_NEAR(s.eigenvalues[0].real(), 1.0, 5e-4);
  EXPECT_NEAR(std::abs(s.eigenvalues[0].imag()), 0.0, 1e-12);
  EXPECT_NEAR(s.eigenvalues[1].real(), 0.1735, 5e-3);
  EXPECT_NEAR(std::abs(s.eigenvalues[1].imag()), 0.0884, 5e-3);
  EXPECT_NEAR(s.eigenvalues[1].imag(), -s.eigenvalues[2].imag(), 1e-9);
  EXPECT_NEAR(std::abs(s.eigenvalues[1]), 0.1948, 2e-3);
  for (double r : s.residual_norms) EXPECT_LT(r, 1e-6);
}

TEST(Spectrum, ThreadCountDoesNotChangeMatrix) {
  SpectrumOptions one, four;
  four.threads = 4;
  EXPECT_EQ(build_B2_matrix(128, one), build_B2_matrix(128, four));
}

TEST(Spectrum, DenseSolverFindsTheDominantEigenvalue) {
  const auto s = spectrum_dense(build_B2_matrix(128), 6);
  ASSERT_EQ(s.eigenvalues.size(), 6U);
  EXPECT_NEAR(s.eigenvalues[0].real(), 1.0, 5e-4);
  for (std::size_t i = 1; i < s.eigenvalues.size(); ++i) {
    EXPECT_LE(std::abs(s.eigenvalues[i]), std::abs(s.eigenvalues[i - 1]) + 1e-12);
  }
}

}  // namespace
}  // namespace bineuc
