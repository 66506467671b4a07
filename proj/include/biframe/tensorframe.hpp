#pragma once

#include "biframe/bifusion.hpp"

namespace biframe {

/// Pair of factor frames on spaces of dimension n and m together with the
/// assembled frame on the n*m tensor space. Assembled items are indexed by
/// (i, j) in row-major order: subspace basis kron(B_{V_i}, B_{W_j}),
/// operator kron(Lambda_i, Gamma_j), weight v_i * w_j, on both sides of the
/// pair.
struct TensorBiPair {
    BiGFusionPair left;
    BiGFusionPair right;
    BiGFusionPair assembled;
};

struct TensorCertificates {
    BoundsCertificate left;
    BoundsCertificate right;
    BoundsCertificate assembled;
};

/// The assembled operator computed along two independent routes: direct
/// (i, j) summation versus the Kronecker product of the factor operators.
struct FrameOperatorFactorization {
    Matrix direct;
    Matrix factored;
    double frobenius_error = 0.0;
};

/// Containment of the assembled spectral interval in the product envelope
/// [A*C, B*D] of the factor bounds.
struct LoewnerCheck {
    bool pass = false;
    SpectralInterval assembled;
    double product_lower = 0.0;
    double product_upper = 0.0;
};

/// Assembles the tensor frame on the product space.
TensorBiPair tensor_pair(const BiGFusionPair& left, const BiGFusionPair& right);

/// Certifies both factors and the assembled pair; the assembled certificate
/// is always computed from the assembled operator directly, never inferred
/// from the factors.
TensorCertificates certify_tensor(const TensorBiPair& tp, double tol = kDefaultTol);

FrameOperatorFactorization tensor_frame_operator_factorization(const TensorBiPair& tp);

/// ||S_assembled^-1 - kron(S_left^-1, S_right^-1)||. Both factor operators
/// must be invertible (smallest singular value > tol); throws
/// SingularFactorError otherwise.
double tensor_inverse_factorization(const TensorBiPair& tp, double tol = kDefaultTol);

/// Checks A*C - tol <= lo(S_assembled) <= hi(S_assembled) <= B*D + tol.
/// Requires both factors to certify as Frames with nonnegative bounds;
/// throws NotAFrameError otherwise.
LoewnerCheck tensor_loewner_check(const TensorBiPair& tp, double tol = kDefaultTol);

/// Transport by U1 (x) U2, realized factor-wise; commutes with assembly.
/// Throws SingularOperatorError for a non-invertible factor.
TensorBiPair tensor_transport(const TensorBiPair& tp, const Matrix& u1, const Matrix& u2,
                              double tol = kDefaultTol);

}  // namespace biframe
