#pragma once

#include "biframe/types.hpp"

namespace biframe {

/// Extreme eigenvalues [lo, hi] of the Hermitian part (M + M*)/2 together
/// with the operator norm of the anti-Hermitian part (M - M*)/2. For a
/// Hermitian M the interval realizes lo*I <= M <= hi*I in the Loewner order
/// and the deviation vanishes.
struct SpectralInterval {
    double lo = 0.0;
    double hi = 0.0;
    double hermitian_deviation = 0.0;
};

/// Solution W of U = V W obtained through the pseudo-inverse, together with
/// the achieved residual ||V W - U||.
struct DouglasFactorization {
    Matrix factor;
    double residual = 0.0;
};

/// Orthonormal basis of the numerical column space of `columns`.
///
/// Rank is decided by the singular values: sigma_k is kept when
/// sigma_k > rank_tol * sigma_max * max(rows, cols). Column phases are
/// normalized (largest-magnitude entry made real positive) so the result is
/// deterministic. Throws AllColumnsNegligibleError on numerical rank zero.
Matrix orthonormalize(const Matrix& columns, double rank_tol = kDefaultRankTol);

/// Spectral interval of the Hermitian part of a square matrix.
/// Throws NonSquareError.
SpectralInterval spectral_interval(const Matrix& m);

/// Largest singular value.
double operator_norm(const Matrix& m);

/// Smallest singular value (0 for a rank-deficient matrix).
double smallest_singular_value(const Matrix& m);

/// ||M - M*||, the certificate-level self-adjointness defect.
/// Throws NonSquareError.
double hermitian_deviation(const Matrix& m);

/// Kronecker product with row-major index pairing:
/// (Q (x) T)[(i*tr + k), (j*tc + l)] = Q(i,j) * T(k,l).
Matrix kron(const Matrix& q, const Matrix& t);

/// Moore-Penrose pseudo-inverse with the same relative rank cutoff as
/// orthonormalize.
Matrix pseudo_inverse(const Matrix& m, double rank_tol = kDefaultRankTol);

/// Factor W with U = V W, where W = pinv(V) U. Requires matching row
/// counts. Throws RangeNotContainedError when the residual exceeds
/// tol * (1 + ||U||), i.e. when range(U) is not contained in range(V)
/// numerically.
DouglasFactorization douglas_factor(const Matrix& u, const Matrix& v, double tol);

}  // namespace biframe
