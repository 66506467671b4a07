#pragma once

#include "biframe/subspace.hpp"
#include "biframe/types.hpp"

#include <string>
#include <vector>

namespace biframe {

/// One weighted triple (V_i, Lambda_i, v_i): a subspace of the ambient
/// space, an operator from the ambient space into a d_i-dimensional
/// codomain (d_i x n matrix), and a positive weight.
struct GFusionItem {
    Subspace subspace;
    Matrix op;
    double weight = 1.0;
};

/// Weighted family {(V_i, Lambda_i, v_i)} over one ambient dimension.
/// Codomain dimensions d_i may differ per item.
class GFusionSystem {
public:
    GFusionSystem(Index ambient_dim, std::vector<GFusionItem> items);

    Index ambient_dim() const { return ambient_dim_; }
    Index size() const { return static_cast<Index>(items_.size()); }
    const std::vector<GFusionItem>& items() const { return items_; }
    const GFusionItem& item(Index i) const { return items_[static_cast<std::size_t>(i)]; }

private:
    Index ambient_dim_;
    std::vector<GFusionItem> items_;
};

enum class Verdict { Frame, BesselOnly, NotBessel, NonHermitian };

std::string to_string(Verdict v);

/// Certified frame bounds. For Hermitian operators lower/upper are the
/// optimal constants A, B; hermitian_deviation is ||S - S*||.
///
/// Verdict classification at tolerance t:
///   NonHermitian  when hermitian_deviation > t,
///   Frame         when lower > t,
///   BesselOnly    when |lower| <= t (positive semidefinite but singular),
///   NotBessel     when lower < -t (signed bounds retained).
struct BoundsCertificate {
    double lower = 0.0;
    double upper = 0.0;
    double hermitian_deviation = 0.0;
    Verdict verdict = Verdict::NotBessel;
    double tolerance = kDefaultTol;
};

/// Certificate for an already-assembled operator (shared classifier).
BoundsCertificate certify_operator(const Matrix& s, double tol = kDefaultTol);

/// Analysis: i-th output is v_i * Lambda_i * P_{V_i} * f.
std::vector<Vector> analysis_apply(const GFusionSystem& sys, const Vector& f);

/// Synthesis: sum_i v_i * P_{V_i} * Lambda_i* * parts_i.
Vector synthesis_apply(const GFusionSystem& sys, const std::vector<Vector>& parts);

/// Frame operator S = sum_i v_i^2 P_{V_i} Lambda_i* Lambda_i P_{V_i};
/// Hermitian positive semidefinite by construction.
Matrix frame_operator(const GFusionSystem& sys);

/// Optimal bounds of the family: spectral interval of the frame operator.
BoundsCertificate certify_gfusion(const GFusionSystem& sys, double tol = kDefaultTol);

/// Frame operator for a pair of families sharing the index set:
/// sum_i v_i v'_i P_{V_i} Lambda_i* Lambda'_i P_{V'_i}.
Matrix pair_frame_operator(const GFusionSystem& lhs, const GFusionSystem& rhs);

/// Canonical dual {(S^-1 V_i, Lambda_i P_{V_i} S^-1, v_i)}. Requires a
/// Frame verdict; throws NotAFrameError otherwise.
GFusionSystem canonical_dual_gfusion(const GFusionSystem& sys, double tol = kDefaultTol);

/// Bounds of the (T,U)-controlled family, assembled as
/// M = sum_j v_j^2 T* P_{W_j} Lambda_j* Lambda_j P_{W_j} U.
/// Controllers must be invertible (smallest singular value > tol);
/// throws SingularControllerError otherwise.
BoundsCertificate certify_controlled_gfusion(const GFusionSystem& sys, const Matrix& t,
                                             const Matrix& u, double tol = kDefaultTol);

}  // namespace biframe
