#include "biframe/errors.hpp"
#include "biframe/harness.hpp"
#include "biframe/random.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace biframe {

std::string to_string(PairMode mode) {
    switch (mode) {
        case PairMode::Coincident: return "coincident";
        case PairMode::HermitianCompatible: return "hermitian-compatible";
        case PairMode::General: return "general";
    }
    return "unknown";
}

PairMode pair_mode_from_string(const std::string& name) {
    if (name == "coincident") return PairMode::Coincident;
    if (name == "hermitian" || name == "hermitian-compatible") return PairMode::HermitianCompatible;
    if (name == "general") return PairMode::General;
    throw InvalidSpecError("unknown pair mode '" + name + "'");
}

InstanceSpec default_spec(Index ambient_dim, Index item_count, PairMode mode, std::uint64_t seed) {
    if (ambient_dim < 1 || item_count < 1) {
        throw InvalidSpecError("default_spec: dimensions must be positive");
    }
    InstanceSpec spec;
    spec.ambient_dim = ambient_dim;
    spec.item_count = item_count;
    spec.seed = seed;
    spec.pair_mode = mode;
    // Dimension draws use their own stream so generate() still sees the
    // untouched instance seed.
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const Index k_lo = (ambient_dim + 1) / 2;
    std::uniform_int_distribution<Index> subspace_dim(k_lo, ambient_dim);
    for (Index i = 0; i < item_count; ++i) {
        const Index k = subspace_dim(rng);
        std::uniform_int_distribution<Index> codomain_dim(k, ambient_dim);
        spec.subspace_dims.push_back(k);
        spec.codomain_dims.push_back(codomain_dim(rng));
    }
    return spec;
}

namespace {

void validate(const InstanceSpec& spec) {
    if (spec.ambient_dim < 1) throw InvalidSpecError("ambient_dim must be positive");
    if (spec.item_count < 1) throw InvalidSpecError("item_count must be positive");
    if (static_cast<Index>(spec.subspace_dims.size()) != spec.item_count ||
        static_cast<Index>(spec.codomain_dims.size()) != spec.item_count) {
        throw InvalidSpecError("dimension lists must have item_count entries");
    }
    for (Index k : spec.subspace_dims) {
        if (k < 1 || k > spec.ambient_dim) {
            throw InvalidSpecError("subspace dimensions must lie in [1, ambient_dim]");
        }
    }
    for (Index d : spec.codomain_dims) {
        if (d < 1) throw InvalidSpecError("codomain dimensions must be positive");
    }
    if (!(spec.weight_lo > 0.0) || !(spec.weight_hi >= spec.weight_lo)) {
        throw InvalidSpecError("weight range must satisfy 0 < lo <= hi");
    }
}

}  // namespace

BiGFusionPair generate(const InstanceSpec& spec) {
    validate(spec);
    const Index n = spec.ambient_dim;
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> weight(spec.weight_lo, spec.weight_hi);
    const double op_scale = 1.0 / std::sqrt(static_cast<double>(n));

    // Draw order is fixed: all Lambda-side items first, then the
    // mode-specific Gamma side.
    std::vector<GFusionItem> lambda_items;
    lambda_items.reserve(static_cast<std::size_t>(spec.item_count));
    for (Index i = 0; i < spec.item_count; ++i) {
        const Index k = spec.subspace_dims[static_cast<std::size_t>(i)];
        const Index d = spec.codomain_dims[static_cast<std::size_t>(i)];
        Subspace v = Subspace::span_of(gaussian_matrix(n, k, rng));
        Matrix op = op_scale * gaussian_matrix(d, n, rng);
        lambda_items.push_back({std::move(v), std::move(op), weight(rng)});
    }

    std::vector<GFusionItem> gamma_items;
    gamma_items.reserve(static_cast<std::size_t>(spec.item_count));
    switch (spec.pair_mode) {
        case PairMode::Coincident:
            gamma_items = lambda_items;
            break;
        case PairMode::HermitianCompatible:
            for (Index i = 0; i < spec.item_count; ++i) {
                const GFusionItem& lam = lambda_items[static_cast<std::size_t>(i)];
                const Index d = lam.op.rows();
                const Matrix g = gaussian_matrix(d, d, rng);
                const Matrix mixer = (g * g.adjoint()) / static_cast<double>(d) +
                                     0.25 * Matrix::Identity(d, d);
                gamma_items.push_back({lam.subspace, mixer * lam.op, lam.weight});
            }
            break;
        case PairMode::General:
            for (Index i = 0; i < spec.item_count; ++i) {
                const GFusionItem& lam = lambda_items[static_cast<std::size_t>(i)];
                const Index k = spec.subspace_dims[static_cast<std::size_t>(i)];
                const Index d = lam.op.rows();
                Subspace w = Subspace::span_of(gaussian_matrix(n, k, rng));
                Matrix op = op_scale * gaussian_matrix(d, n, rng);
                gamma_items.push_back({std::move(w), std::move(op), lam.weight});
            }
            break;
    }

    return BiGFusionPair(GFusionSystem(n, std::move(lambda_items)),
                         GFusionSystem(n, std::move(gamma_items)));
}

}  // namespace biframe
