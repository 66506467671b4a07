#include "biframe/gfusion.hpp"

#include "biframe/errors.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace biframe {

GFusionSystem::GFusionSystem(Index ambient_dim, std::vector<GFusionItem> items)
    : ambient_dim_(ambient_dim), items_(std::move(items)) {
    if (ambient_dim_ < 1) {
        throw InvariantViolationError("GFusionSystem: ambient dimension must be positive");
    }
    if (items_.empty()) {
        throw InvariantViolationError("GFusionSystem: item list must be nonempty");
    }
    for (std::size_t i = 0; i < items_.size(); ++i) {
        const GFusionItem& it = items_[i];
        const std::string where = "GFusionSystem item " + std::to_string(i);
        if (it.subspace.ambient_dim() != ambient_dim_) {
            throw DimensionMismatchError(where + ": subspace ambient dimension " +
                                         std::to_string(it.subspace.ambient_dim()) +
                                         " != " + std::to_string(ambient_dim_));
        }
        if (it.op.cols() != ambient_dim_) {
            throw DimensionMismatchError(where + ": operator has " + std::to_string(it.op.cols()) +
                                         " columns, expected " + std::to_string(ambient_dim_));
        }
        if (it.op.rows() < 1) {
            throw InvariantViolationError(where + ": operator codomain dimension must be >= 1");
        }
        if (!it.op.allFinite()) {
            throw InvariantViolationError(where + ": operator has non-finite entries");
        }
        if (!(it.weight > 0.0) || !std::isfinite(it.weight)) {
            throw InvariantViolationError(where + ": weight must be positive and finite");
        }
    }
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Frame: return "Frame";
        case Verdict::BesselOnly: return "BesselOnly";
        case Verdict::NotBessel: return "NotBessel";
        case Verdict::NonHermitian: return "NonHermitian";
    }
    return "Unknown";
}

BoundsCertificate certify_operator(const Matrix& s, double tol) {
    if (!(tol > 0.0)) {
        throw InvariantViolationError("certify_operator: tolerance must be positive");
    }
    const SpectralInterval si = spectral_interval(s);
    BoundsCertificate cert;
    cert.lower = si.lo;
    cert.upper = si.hi;
    cert.hermitian_deviation = hermitian_deviation(s);
    cert.tolerance = tol;
    if (cert.hermitian_deviation > tol) {
        cert.verdict = Verdict::NonHermitian;
    } else if (cert.lower > tol) {
        cert.verdict = Verdict::Frame;
    } else if (cert.lower >= -tol) {
        cert.verdict = Verdict::BesselOnly;
    } else {
        cert.verdict = Verdict::NotBessel;
    }
    return cert;
}

std::vector<Vector> analysis_apply(const GFusionSystem& sys, const Vector& f) {
    if (f.size() != sys.ambient_dim()) {
        throw DimensionMismatchError("analysis_apply: vector has " + std::to_string(f.size()) +
                                     " entries, expected " + std::to_string(sys.ambient_dim()));
    }
    std::vector<Vector> out;
    out.reserve(static_cast<std::size_t>(sys.size()));
    for (const GFusionItem& it : sys.items()) {
        const Vector projected = it.subspace.basis() * (it.subspace.basis().adjoint() * f);
        out.push_back(it.weight * (it.op * projected));
    }
    return out;
}

Vector synthesis_apply(const GFusionSystem& sys, const std::vector<Vector>& parts) {
    if (static_cast<Index>(parts.size()) != sys.size()) {
        throw DimensionMismatchError("synthesis_apply: expected " + std::to_string(sys.size()) +
                                     " parts, got " + std::to_string(parts.size()));
    }
    Vector out = Vector::Zero(sys.ambient_dim());
    for (Index i = 0; i < sys.size(); ++i) {
        const GFusionItem& it = sys.item(i);
        const Vector& part = parts[static_cast<std::size_t>(i)];
        if (part.size() != it.op.rows()) {
            throw DimensionMismatchError("synthesis_apply: part " + std::to_string(i) + " has " +
                                         std::to_string(part.size()) + " entries, expected " +
                                         std::to_string(it.op.rows()));
        }
        const Vector lifted = it.op.adjoint() * part;
        out += it.weight * (it.subspace.basis() * (it.subspace.basis().adjoint() * lifted));
    }
    return out;
}

Matrix frame_operator(const GFusionSystem& sys) {
    const Index n = sys.ambient_dim();
    Matrix s = Matrix::Zero(n, n);
    for (const GFusionItem& it : sys.items()) {
        const Matrix restricted = it.op * projector(it.subspace);  // Lambda P_V
        s += (it.weight * it.weight) * (restricted.adjoint() * restricted);
    }
    return s;
}

BoundsCertificate certify_gfusion(const GFusionSystem& sys, double tol) {
    return certify_operator(frame_operator(sys), tol);
}

Matrix pair_frame_operator(const GFusionSystem& lhs, const GFusionSystem& rhs) {
    if (lhs.ambient_dim() != rhs.ambient_dim()) {
        throw DimensionMismatchError("pair_frame_operator: ambient dimensions differ");
    }
    if (lhs.size() != rhs.size()) {
        throw IndexMismatchError("pair_frame_operator: item counts differ (" +
                                 std::to_string(lhs.size()) + " vs " + std::to_string(rhs.size()) +
                                 ")");
    }
    const Index n = lhs.ambient_dim();
    Matrix s = Matrix::Zero(n, n);
    for (Index i = 0; i < lhs.size(); ++i) {
        const GFusionItem& a = lhs.item(i);
        const GFusionItem& b = rhs.item(i);
        if (a.op.rows() != b.op.rows()) {
            throw DimensionMismatchError("pair_frame_operator: codomain dimensions differ at index " +
                                         std::to_string(i));
        }
        const Matrix left = a.op * projector(a.subspace);   // Lambda_i P_{V_i}
        const Matrix right = b.op * projector(b.subspace);  // Lambda'_i P_{V'_i}
        s += (a.weight * b.weight) * (left.adjoint() * right);
    }
    return s;
}

GFusionSystem canonical_dual_gfusion(const GFusionSystem& sys, double tol) {
    const BoundsCertificate cert = certify_gfusion(sys, tol);
    if (cert.verdict != Verdict::Frame) {
        throw NotAFrameError("canonical_dual_gfusion: verdict " + to_string(cert.verdict) +
                             " (lower bound " + std::to_string(cert.lower) + ")");
    }
    const Matrix s_inv = frame_operator(sys).inverse();
    std::vector<GFusionItem> dual;
    dual.reserve(static_cast<std::size_t>(sys.size()));
    for (const GFusionItem& it : sys.items()) {
        dual.push_back({image_subspace(s_inv, it.subspace),
                        it.op * projector(it.subspace) * s_inv, it.weight});
    }
    return GFusionSystem(sys.ambient_dim(), std::move(dual));
}

BoundsCertificate certify_controlled_gfusion(const GFusionSystem& sys, const Matrix& t,
                                             const Matrix& u, double tol) {
    const Index n = sys.ambient_dim();
    if (t.rows() != n || t.cols() != n || u.rows() != n || u.cols() != n) {
        throw DimensionMismatchError("certify_controlled_gfusion: controllers must be " +
                                     std::to_string(n) + "x" + std::to_string(n));
    }
    if (smallest_singular_value(t) <= tol || smallest_singular_value(u) <= tol) {
        throw SingularControllerError(
            "certify_controlled_gfusion: controller smallest singular value <= tolerance");
    }
    Matrix m = Matrix::Zero(n, n);
    for (const GFusionItem& it : sys.items()) {
        const Matrix restricted = it.op * projector(it.subspace);  // Lambda P_W
        m += (it.weight * it.weight) * ((restricted * t).adjoint() * (restricted * u));
    }
    return certify_operator(m, tol);
}

}  // namespace biframe
