// SPDX-License-Identifier: Apache-2.0

#include "rcsd/numerics.hpp"

#include <limits>
#include <stdexcept>
#include <unsupported/Eigen/FFT>

namespace rcsd {

ComplexVector fft(const ComplexVector& v) {
    if (v.size() < 1) throw std::invalid_argument("fft: empty input");
    if (!v.allFinite()) throw std::domain_error("fft: non-finite input");
    Eigen::FFT<double> engine;
    ComplexVector out(v.size());
    engine.fwd(out, v);
    return out;
}

ComplexVector ifft(const ComplexVector& v) {
    if (v.size() < 1) throw std::invalid_argument("ifft: empty input");
    if (!v.allFinite()) throw std::domain_error("ifft: non-finite input");
    Eigen::FFT<double> engine;
    ComplexVector out(v.size());
    engine.inv(out, v);
    return out;
}

ComplexMatrix fft_cols(const ComplexMatrix& m) {
    ComplexMatrix out(m.rows(), m.cols());
    Eigen::FFT<double> engine;
    ComplexVector col(m.rows()), t(m.rows());
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        col = m.col(j);
        engine.fwd(t, col);
        out.col(j) = t;
    }
    return out;
}

ComplexMatrix ifft_cols(const ComplexMatrix& m) {
    ComplexMatrix out(m.rows(), m.cols());
    Eigen::FFT<double> engine;
    ComplexVector col(m.rows()), t(m.rows());
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        col = m.col(j);
        engine.inv(t, col);
        out.col(j) = t;
    }
    return out;
}

namespace {

Eigen::JacobiSVD<ComplexMatrix> svd_of(const ComplexMatrix& a) {
    if (!a.allFinite()) throw std::domain_error("pseudo_inverse: non-finite input");
    return Eigen::JacobiSVD<ComplexMatrix>(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
}

}  // namespace

ComplexMatrix pseudo_inverse(const ComplexMatrix& a, double rel_tol) {
    const auto svd = svd_of(a);
    const auto& sv = svd.singularValues();
    const double cutoff = rel_tol * (sv.size() > 0 ? sv(0) : 0.0);
    Eigen::VectorXd inv_sv = Eigen::VectorXd::Zero(sv.size());
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff && sv(i) > 0.0) inv_sv(i) = 1.0 / sv(i);
    return svd.matrixV() * inv_sv.asDiagonal() * svd.matrixU().adjoint();
}

ComplexMatrix pinv_solve(const ComplexMatrix& a, const ComplexMatrix& b, double rel_tol,
                         bool* rank_deficient) {
    if (a.rows() != b.rows()) throw std::invalid_argument("pinv_solve: row mismatch");
    const auto svd = svd_of(a);
    const auto& sv = svd.singularValues();
    const double cutoff = rel_tol * (sv.size() > 0 ? sv(0) : 0.0);
    Eigen::VectorXd inv_sv = Eigen::VectorXd::Zero(sv.size());
    bool truncated = false;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff && sv(i) > 0.0)
            inv_sv(i) = 1.0 / sv(i);
        else
            truncated = true;
    }
    if (rank_deficient) *rank_deficient = truncated;
    return svd.matrixV() * (inv_sv.asDiagonal() * (svd.matrixU().adjoint() * b));
}

ComplexMatrix ridge_solve(const ComplexMatrix& a, const ComplexMatrix& b, double ridge) {
    if (a.rows() != b.rows()) throw std::invalid_argument("ridge_solve: row mismatch");
    if (ridge <= 0.0) return pinv_solve(a, b);
    ComplexMatrix gram = a.adjoint() * a;
    gram.diagonal().array() += ridge;
    return gram.ldlt().solve(a.adjoint() * b);
}

PinvOperator::PinvOperator(const ComplexMatrix& a, double rel_tol) {
    const auto svd = svd_of(a);
    const auto& sv = svd.singularValues();
    const double cutoff = rel_tol * (sv.size() > 0 ? sv(0) : 0.0);
    inv_sv_ = Eigen::VectorXd::Zero(sv.size());
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff && sv(i) > 0.0)
            inv_sv_(i) = 1.0 / sv(i);
        else
            rank_deficient_ = true;
    }
    u_ = svd.matrixU();
    v_ = svd.matrixV();
}

ComplexMatrix PinvOperator::solve(const ComplexMatrix& b) const {
    if (b.rows() != u_.rows()) throw std::invalid_argument("PinvOperator: row mismatch");
    return v_ * (inv_sv_.asDiagonal() * (u_.adjoint() * b));
}

double spectral_radius(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("spectral_radius: non-square matrix");
    if (a.size() == 0) throw std::invalid_argument("spectral_radius: empty matrix");
    if (!a.allFinite()) throw std::domain_error("spectral_radius: non-finite input");
    if (a.isZero(0.0)) return 0.0;
    Eigen::ComplexEigenSolver<ComplexMatrix> es(a, /*computeEigenvectors=*/false);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

double spectral_radius(const RealMatrix& a) { return spectral_radius(ComplexMatrix(a.cast<cx>())); }

double normal_equation_residual(const ComplexMatrix& a, const ComplexMatrix& w,
                                const ComplexMatrix& b) {
    const double denom = (a.adjoint() * b).norm();
    const double num = (a.adjoint() * (a * w - b)).norm();
    if (denom == 0.0) return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return num / denom;
}

}  // namespace rcsd
