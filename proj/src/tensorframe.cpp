#include "biframe/tensorframe.hpp"

#include "biframe/errors.hpp"

#include <utility>
#include <vector>

namespace biframe {

namespace {

GFusionSystem tensor_system(const GFusionSystem& a, const GFusionSystem& b) {
    const Index n = a.ambient_dim() * b.ambient_dim();
    std::vector<GFusionItem> items;
    items.reserve(static_cast<std::size_t>(a.size() * b.size()));
    for (Index i = 0; i < a.size(); ++i) {
        for (Index j = 0; j < b.size(); ++j) {
            const GFusionItem& ai = a.item(i);
            const GFusionItem& bj = b.item(j);
            items.push_back({Subspace(kron(ai.subspace.basis(), bj.subspace.basis())),
                             kron(ai.op, bj.op), ai.weight * bj.weight});
        }
    }
    return GFusionSystem(n, std::move(items));
}

}  // namespace

TensorBiPair tensor_pair(const BiGFusionPair& left, const BiGFusionPair& right) {
    BiGFusionPair assembled(tensor_system(left.lambda_sys(), right.lambda_sys()),
                            tensor_system(left.gamma_sys(), right.gamma_sys()));
    return {left, right, std::move(assembled)};
}

TensorCertificates certify_tensor(const TensorBiPair& tp, double tol) {
    return {certify_bi_gfusion(tp.left, tol), certify_bi_gfusion(tp.right, tol),
            certify_bi_gfusion(tp.assembled, tol)};
}

FrameOperatorFactorization tensor_frame_operator_factorization(const TensorBiPair& tp) {
    FrameOperatorFactorization out;
    out.direct = bi_frame_operator(tp.assembled);
    out.factored = kron(bi_frame_operator(tp.left), bi_frame_operator(tp.right));
    out.frobenius_error = (out.direct - out.factored).norm();
    return out;
}

double tensor_inverse_factorization(const TensorBiPair& tp, double tol) {
    const Matrix s_left = bi_frame_operator(tp.left);
    const Matrix s_right = bi_frame_operator(tp.right);
    if (smallest_singular_value(s_left) <= tol || smallest_singular_value(s_right) <= tol) {
        throw SingularFactorError("tensor_inverse_factorization: a factor operator is singular");
    }
    const Matrix direct_inv = bi_frame_operator(tp.assembled).inverse();
    const Matrix factored_inv = kron(s_left.inverse(), s_right.inverse());
    return operator_norm(direct_inv - factored_inv);
}

LoewnerCheck tensor_loewner_check(const TensorBiPair& tp, double tol) {
    const BoundsCertificate left = certify_bi_gfusion(tp.left, tol);
    const BoundsCertificate right = certify_bi_gfusion(tp.right, tol);
    if (left.verdict != Verdict::Frame || right.verdict != Verdict::Frame) {
        throw NotAFrameError("tensor_loewner_check: both factors must certify as Frames");
    }
    if (left.lower < 0.0 || right.lower < 0.0) {
        throw NotAFrameError("tensor_loewner_check: factor bounds must be nonnegative");
    }
    LoewnerCheck check;
    check.assembled = spectral_interval(bi_frame_operator(tp.assembled));
    check.product_lower = left.lower * right.lower;
    check.product_upper = left.upper * right.upper;
    check.pass = check.assembled.lo >= check.product_lower - tol &&
                 check.assembled.hi <= check.product_upper + tol;
    return check;
}

TensorBiPair tensor_transport(const TensorBiPair& tp, const Matrix& u1, const Matrix& u2,
                              double tol) {
    return tensor_pair(transport(tp.left, u1, tol), transport(tp.right, u2, tol));
}

}  // namespace biframe
