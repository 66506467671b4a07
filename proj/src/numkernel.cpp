#include "biframe/numkernel.hpp"

#include "biframe/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <string>

namespace biframe {

namespace {

void require_square(const Matrix& m, const char* where) {
    if (m.rows() != m.cols()) {
        throw NonSquareError(std::string(where) + ": matrix is " + std::to_string(m.rows()) +
                             "x" + std::to_string(m.cols()));
    }
}

// Scale each column so its largest-magnitude entry is real positive. Keeps
// columns orthonormal and makes the basis independent of SVD phase choices.
void normalize_column_phases(Matrix& q) {
    for (Index j = 0; j < q.cols(); ++j) {
        Index imax = 0;
        q.col(j).cwiseAbs().maxCoeff(&imax);
        const Complex pivot = q(imax, j);
        const double mag = std::abs(pivot);
        if (mag > 0.0) {
            q.col(j) *= std::conj(pivot) / mag;
        }
    }
}

}  // namespace

Matrix orthonormalize(const Matrix& columns, double rank_tol) {
    if (columns.cols() < 1 || columns.rows() < 1) {
        throw InvariantViolationError("orthonormalize: input needs at least one column");
    }
    if (!(rank_tol > 0.0)) {
        throw InvariantViolationError("orthonormalize: rank_tol must be positive");
    }
    Eigen::JacobiSVD<Matrix> svd(columns, Eigen::ComputeThinU);
    const auto& sigma = svd.singularValues();
    const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
    const double cutoff =
        rank_tol * sigma_max * static_cast<double>(std::max(columns.rows(), columns.cols()));
    Index rank = 0;
    while (rank < sigma.size() && sigma(rank) > cutoff && sigma(rank) > 0.0) {
        ++rank;
    }
    if (rank == 0) {
        throw AllColumnsNegligibleError("orthonormalize: numerical rank is zero");
    }
    Matrix q = svd.matrixU().leftCols(rank);
    normalize_column_phases(q);
    return q;
}

SpectralInterval spectral_interval(const Matrix& m) {
    require_square(m, "spectral_interval");
    const Matrix herm = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
    SpectralInterval out;
    out.lo = es.eigenvalues().minCoeff();
    out.hi = es.eigenvalues().maxCoeff();
    out.hermitian_deviation = operator_norm(0.5 * (m - m.adjoint()));
    return out;
}

double operator_norm(const Matrix& m) {
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
}

double smallest_singular_value(const Matrix& m) {
    Eigen::JacobiSVD<Matrix> svd(m);
    const auto& sigma = svd.singularValues();
    if (sigma.size() == 0) return 0.0;
    return sigma(sigma.size() - 1);  // sorted descending
}

double hermitian_deviation(const Matrix& m) {
    require_square(m, "hermitian_deviation");
    return operator_norm(m - m.adjoint());
}

Matrix kron(const Matrix& q, const Matrix& t) {
    Matrix out(q.rows() * t.rows(), q.cols() * t.cols());
    for (Index i = 0; i < q.rows(); ++i) {
        for (Index j = 0; j < q.cols(); ++j) {
            out.block(i * t.rows(), j * t.cols(), t.rows(), t.cols()) = q(i, j) * t;
        }
    }
    return out;
}

Matrix pseudo_inverse(const Matrix& m, double rank_tol) {
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sigma = svd.singularValues();
    const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
    const double cutoff =
        rank_tol * sigma_max * static_cast<double>(std::max(m.rows(), m.cols()));
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(sigma.size());
    for (Index k = 0; k < sigma.size(); ++k) {
        if (sigma(k) > cutoff && sigma(k) > 0.0) inv(k) = 1.0 / sigma(k);
    }
    return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

DouglasFactorization douglas_factor(const Matrix& u, const Matrix& v, double tol) {
    if (u.rows() != v.rows()) {
        throw DimensionMismatchError("douglas_factor: U and V must share their row count");
    }
    DouglasFactorization out;
    out.factor = pseudo_inverse(v) * u;
    out.residual = operator_norm(v * out.factor - u);
    const double bound = tol * (1.0 + operator_norm(u));
    if (out.residual > bound) {
        throw RangeNotContainedError("douglas_factor: residual " + std::to_string(out.residual) +
                                     " exceeds " + std::to_string(bound) +
                                     "; range(U) is not contained in range(V)");
    }
    return out;
}

}  // namespace biframe
