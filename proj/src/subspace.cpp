#include "biframe/subspace.hpp"

#include "biframe/errors.hpp"

#include <string>
#include <utility>

namespace biframe {

Subspace::Subspace(Matrix orthonormal_basis) : basis_(std::move(orthonormal_basis)) {
    const Index n = basis_.rows();
    const Index k = basis_.cols();
    if (n < 1 || k < 1) {
        throw InvariantViolationError("Subspace: basis must have at least one column");
    }
    if (k > n) {
        throw InvariantViolationError("Subspace: " + std::to_string(k) +
                                      " columns exceed ambient dimension " + std::to_string(n));
    }
    if (!basis_.allFinite()) {
        throw InvariantViolationError("Subspace: basis has non-finite entries");
    }
    const Matrix gram = basis_.adjoint() * basis_;
    const double defect = operator_norm(gram - Matrix::Identity(k, k));
    if (defect > 1e-10) {
        throw InvariantViolationError("Subspace: basis is not orthonormal (defect " +
                                      std::to_string(defect) + ")");
    }
}

Subspace Subspace::span_of(const Matrix& columns, double rank_tol) {
    return Subspace(orthonormalize(columns, rank_tol));
}

Matrix projector(const Subspace& v) { return v.basis() * v.basis().adjoint(); }

double projector_distance(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) {
        throw DimensionMismatchError("projector_distance: ambient dimensions differ");
    }
    return operator_norm(projector(a) - projector(b));
}

bool same_subspace(const Subspace& a, const Subspace& b, double tol) {
    return projector_distance(a, b) <= tol;
}

Subspace image_subspace(const Matrix& t, const Subspace& v, double rank_tol) {
    if (t.rows() != t.cols() || t.cols() != v.ambient_dim()) {
        throw DimensionMismatchError("image_subspace: operator must be square of side " +
                                     std::to_string(v.ambient_dim()));
    }
    const Matrix image = t * v.basis();
    // The rank cutoff inside orthonormalize is relative to the image itself;
    // annihilation has to be judged against the scale of T.
    const double scale = operator_norm(t) * static_cast<double>(t.rows());
    if (operator_norm(image) <= rank_tol * scale) {
        throw AllColumnsNegligibleError("image_subspace: operator annihilates the subspace");
    }
    return Subspace(orthonormalize(image, rank_tol));
}

TransportReport verify_projection_transport(const Matrix& t, const Subspace& v, double tol) {
    if (t.rows() != t.cols() || t.cols() != v.ambient_dim()) {
        throw DimensionMismatchError("verify_projection_transport: dimension mismatch");
    }
    const Index n = v.ambient_dim();
    const Matrix pv = projector(v);
    Matrix ptv = Matrix::Zero(n, n);  // TV = {0} projects to nothing
    try {
        ptv = projector(image_subspace(t, v));
    } catch (const AllColumnsNegligibleError&) {
    }

    TransportReport report;
    report.r1 = operator_norm(pv * t.adjoint() - pv * t.adjoint() * ptv);
    report.unitarity_defect = operator_norm(t.adjoint() * t - Matrix::Identity(n, n));
    if (report.unitarity_defect <= tol) {
        report.r2 = operator_norm(ptv * t - t * pv);
    }
    report.pass = report.r1 <= tol && (!report.r2 || *report.r2 <= tol);
    return report;
}

}  // namespace biframe
