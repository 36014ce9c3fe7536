// SPDX-License-Identifier: Apache-2.0
//
// rc-symdet: complex linear-algebra and transform primitives.

#pragma once

#include <Eigen/Dense>
#include <complex>

namespace rcsd {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using cx = std::complex<double>;

/// Unnormalized forward DFT: X[k] = sum_t x[t] exp(-j 2 pi k t / N).
ComplexVector fft(const ComplexVector& v);

/// Inverse DFT with 1/N scaling; exact inverse of fft().
ComplexVector ifft(const ComplexVector& v);

/// Column-wise fft/ifft of a matrix (each column transformed independently).
ComplexMatrix fft_cols(const ComplexMatrix& m);
ComplexMatrix ifft_cols(const ComplexMatrix& m);

/// Moore-Penrose pseudo-inverse via SVD. Singular values below
/// rel_tol * sigma_max are truncated to zero.
ComplexMatrix pseudo_inverse(const ComplexMatrix& a, double rel_tol = 1e-10);

/// Least-squares solve W = pinv(A) * B without materializing pinv(A).
/// Identical truncation rule as pseudo_inverse.
ComplexMatrix pinv_solve(const ComplexMatrix& a, const ComplexMatrix& b,
                         double rel_tol = 1e-10, bool* rank_deficient = nullptr);

/// Ridge-regularized least squares: (A^H A + ridge I) W = A^H B.
ComplexMatrix ridge_solve(const ComplexMatrix& a, const ComplexMatrix& b, double ridge);

/// Factored pseudo-inverse for repeated solves against one matrix.
class PinvOperator {
  public:
    PinvOperator(const ComplexMatrix& a, double rel_tol = 1e-10);
    ComplexMatrix solve(const ComplexMatrix& b) const;
    bool rank_deficient() const { return rank_deficient_; }

  private:
    ComplexMatrix u_, v_;
    Eigen::VectorXd inv_sv_;
    bool rank_deficient_ = false;
};

/// Largest eigenvalue magnitude of a square matrix.
double spectral_radius(const ComplexMatrix& a);
double spectral_radius(const RealMatrix& a);

/// Relative normal-equation residual ||A^H (A W - B)||_F / ||A^H B||_F.
double normal_equation_residual(const ComplexMatrix& a, const ComplexMatrix& w,
                                const ComplexMatrix& b);

}  // namespace rcsd
