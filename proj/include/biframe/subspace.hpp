#pragma once

#include "biframe/numkernel.hpp"
#include "biframe/types.hpp"

#include <optional>

namespace biframe {

/// Closed subspace of a finite-dimensional ambient space, stored as an
/// orthonormal column basis. Zero subspaces are rejected: the basis always
/// has between 1 and ambient_dim columns.
class Subspace {
public:
    /// Wraps an already-orthonormal basis. Validates ||B* B - I|| <= 1e-10
    /// and 1 <= cols <= rows; throws InvariantViolationError otherwise.
    explicit Subspace(Matrix orthonormal_basis);

    /// Orthonormalizes arbitrary spanning columns first.
    static Subspace span_of(const Matrix& columns, double rank_tol = kDefaultRankTol);

    Index ambient_dim() const { return basis_.rows(); }
    Index dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }

private:
    Matrix basis_;
};

/// Orthogonal projection P = B B* onto the subspace; Hermitian idempotent.
Matrix projector(const Subspace& v);

/// Operator-norm distance between the projectors of two subspaces.
double projector_distance(const Subspace& a, const Subspace& b);

/// Subspace equality at tolerance: projector distance <= tol.
bool same_subspace(const Subspace& a, const Subspace& b, double tol = 1e-9);

/// Image T V as a subspace: the orthonormalized column space of T * basis(V).
/// Throws DimensionMismatchError for a non-matching T and
/// AllColumnsNegligibleError when T annihilates V numerically.
Subspace image_subspace(const Matrix& t, const Subspace& v, double rank_tol = kDefaultRankTol);

/// Residuals of the projection-transport identities.
///
/// r1 = ||P_V T* - P_V T* P_{TV}|| holds for every bounded T; r2 is checked
/// only when T is unitary within tol (defect ||T* T - I|| <= tol) and then
/// equals ||P_{TV} T - T P_V||.
struct TransportReport {
    double r1 = 0.0;
    std::optional<double> r2;
    double unitarity_defect = 0.0;
    bool pass = false;
};

TransportReport verify_projection_transport(const Matrix& t, const Subspace& v,
                                            double tol = kDefaultTol);

}  // namespace biframe
