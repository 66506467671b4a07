#include "biframe/oracle.hpp"

#include "biframe/errors.hpp"
#include "biframe/random.hpp"

#include <string>

namespace biframe {

SampledBounds sample_quadratic_form(const Matrix& m, std::uint64_t samples, std::uint64_t seed) {
    if (m.rows() != m.cols()) {
        throw NonSquareError("sample_quadratic_form: matrix is " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()));
    }
    if (samples < 1) {
        throw InvariantViolationError("sample_quadratic_form: need at least one sample");
    }
    std::mt19937_64 rng(seed);
    SampledBounds out;
    out.samples = samples;
    out.seed = seed;
    for (std::uint64_t k = 0; k < samples; ++k) {
        const Vector f = random_unit_vector(m.rows(), rng);
        const double value = quadratic_form(m, f).real();
        if (k == 0) {
            out.min_seen = out.max_seen = value;
        } else {
            if (value < out.min_seen) out.min_seen = value;
            if (value > out.max_seen) out.max_seen = value;
        }
    }
    return out;
}

Complex direct_bi_sum(const BiGFusionPair& pair, const Vector& f) {
    if (f.size() != pair.ambient_dim()) {
        throw DimensionMismatchError("direct_bi_sum: vector has " + std::to_string(f.size()) +
                                     " entries, expected " + std::to_string(pair.ambient_dim()));
    }
    Complex total(0.0, 0.0);
    for (Index i = pair.size() - 1; i >= 0; --i) {
        const GFusionItem& lam = pair.lambda_sys().item(i);
        const GFusionItem& gam = pair.gamma_sys().item(i);
        const Vector lam_f = lam.op * (lam.subspace.basis() * (lam.subspace.basis().adjoint() * f));
        const Vector gam_f = gam.op * (gam.subspace.basis() * (gam.subspace.basis().adjoint() * f));
        total += (lam.weight * lam.weight) * inner(lam_f, gam_f);
    }
    return total;
}

}  // namespace biframe
