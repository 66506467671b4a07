#pragma once

#include "biframe/gfusion.hpp"
#include "biframe/types.hpp"

#include <vector>

namespace biframe {

/// Two aligned weighted families (Lambda, Gamma) over the same ambient
/// space: items (V_i, Lambda_i, v_i) and (W_i, Gamma_i, v_i) share the index
/// set, the weights, and the per-index codomain dimension d_i, so the mixed
/// sum sum_i v_i^2 <Lambda_i P_{V_i} f, Gamma_i P_{W_i} f> typechecks.
class BiGFusionPair {
public:
    BiGFusionPair(GFusionSystem lambda_sys, GFusionSystem gamma_sys);

    Index ambient_dim() const { return lambda_.ambient_dim(); }
    Index size() const { return lambda_.size(); }
    const GFusionSystem& lambda_sys() const { return lambda_; }
    const GFusionSystem& gamma_sys() const { return gamma_; }

private:
    GFusionSystem lambda_;
    GFusionSystem gamma_;
};

/// Weighted pair of vector families ({f_i}, {g_i}) whose mixed scalar sum
/// sum_i v_i^2 <f, f_i><g_i, f> is the object of interest.
struct ScalarBiframe {
    Index ambient_dim = 0;
    std::vector<Vector> f_vectors;
    std::vector<Vector> g_vectors;
    std::vector<double> weights;
};

/// Operator family {T_i} with sum_i T_i = I up to the stored residual.
struct ResolutionFamily {
    std::vector<Matrix> terms;
    double residual = 0.0;
};

/// Reconstruction of f through the inverse of the pair frame operator.
/// value applies S^-1 after the sum; the *_inner residual checks the form
/// with S^-1 applied before the sum. Both are relative to ||f||.
struct Reconstruction {
    Vector value;
    double residual_sinv_outer = 0.0;
    double residual_sinv_inner = 0.0;
};

/// Pair frame operator S = sum_i v_i^2 P_{W_i} Gamma_i* Lambda_i P_{V_i}.
/// Not Hermitian in general.
Matrix bi_frame_operator(const BiGFusionPair& pair);

/// Bounds of the pair. The defining sum is real for all f exactly when S is
/// self-adjoint, so hermitian_deviation = ||S - S*|| gates the verdict.
BoundsCertificate certify_bi_gfusion(const BiGFusionPair& pair, double tol = kDefaultTol);

/// The reversed pair (Gamma, Lambda). Its operator is S* and its
/// certificate coincides with the original's.
BiGFusionPair swap(const BiGFusionPair& pair);

/// Recovers f via both orderings of the inversion formula. Requires a Frame
/// verdict; throws NotAFrameError otherwise.
Reconstruction reconstruct(const BiGFusionPair& pair, const Vector& f, double tol = kDefaultTol);

/// Largest alpha with S >= alpha I, i.e. the certified lower bound. Requires
/// ||S - S*|| <= tol; throws NonHermitianOperatorError otherwise.
double alpha_lower_bound(const BiGFusionPair& pair, double tol = kDefaultTol);

/// Resolution of the identity T_i = v_i^2 K P_{W_i} Gamma_i* Lambda_i P_{V_i}
/// with K = S^-1. Requires S bounded below (smallest singular value > tol);
/// throws NotBoundedBelowError otherwise.
ResolutionFamily resolution_of_identity(const BiGFusionPair& pair, double tol = kDefaultTol);

/// Image of the pair under an invertible operator:
/// {(U V_i, Lambda_i P_{V_i} U*, v_i)} on both sides. Preserves the frame
/// property with bounds [A ||U^-1||^-2, B ||U||^2].
BiGFusionPair transport(const BiGFusionPair& pair, const Matrix& u, double tol = kDefaultTol);

/// Canonical dual pair {(S^-1 V_i, Lambda_i P_{V_i} S^-1, v_i)} and the
/// Gamma-side analogue. Requires a Frame verdict.
BiGFusionPair canonical_dual_bi(const BiGFusionPair& pair, double tol = kDefaultTol);

/// Lift of a scalar biframe: V_i = span f_i, W_i = span g_i, and the rank-one
/// functionals Lambda_i = <., f_i>, Gamma_i = <., g_i>, so the pair's
/// quadratic form equals sum_i v_i^2 <f, f_i><g_i, f>. Throws
/// ZeroGeneratorError when any generator vanishes.
BiGFusionPair lift_biframe(const ScalarBiframe& bf);

}  // namespace biframe
