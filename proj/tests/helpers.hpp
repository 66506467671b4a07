#pragma once

// Shared fixtures and independent oracles for the unit and acceptance
// suites. The spectral oracle here uses shifted power iteration on
// matrix-vector products only, so it shares no code path with the
// eigensolver-based certification it cross-checks.

#include "biframe/harness.hpp"
#include "biframe/oracle.hpp"
#include "biframe/random.hpp"
#include "biframe/tensorframe.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace testutil {

using namespace biframe;

/// n items (span e_i, I_n, 1): a Parseval family, frame operator I_n.
inline GFusionSystem parseval_axes(Index dim) {
    std::vector<GFusionItem> items;
    for (Index i = 0; i < dim; ++i) {
        Matrix basis = Matrix::Zero(dim, 1);
        basis(i, 0) = Complex(1.0, 0.0);
        items.push_back({Subspace(basis), Matrix::Identity(dim, dim), 1.0});
    }
    return GFusionSystem(dim, std::move(items));
}

/// Two axis items in dimension 2 with weights (2, 1): frame operator diag(4, 1).
inline GFusionSystem weighted_axes_2d() {
    Matrix e1 = Matrix::Zero(2, 1), e2 = Matrix::Zero(2, 1);
    e1(0, 0) = Complex(1.0, 0.0);
    e2(1, 0) = Complex(1.0, 0.0);
    std::vector<GFusionItem> items;
    items.push_back({Subspace(e1), Matrix::Identity(2, 2), 2.0});
    items.push_back({Subspace(e2), Matrix::Identity(2, 2), 1.0});
    return GFusionSystem(2, std::move(items));
}

inline BiGFusionPair coincident(const GFusionSystem& sys) { return BiGFusionPair(sys, sys); }

inline BiGFusionPair random_pair(Index dim, Index items, PairMode mode, std::uint64_t seed) {
    return generate(default_spec(dim, items, mode, seed));
}

inline GFusionSystem random_system(Index dim, Index items, std::uint64_t seed) {
    return random_pair(dim, items, PairMode::Coincident, seed).lambda_sys();
}

/// Dominant eigenvalue of a Hermitian PSD matrix by power iteration.
inline double power_dominant(const Matrix& h, std::uint64_t seed, int iters = 4000) {
    std::mt19937_64 rng(seed);
    Vector v = random_unit_vector(h.rows(), rng);
    for (int k = 0; k < iters; ++k) {
        v = h * v;
        const double n = v.norm();
        if (n == 0.0) return 0.0;
        v /= n;
    }
    return v.dot(h * v).real();
}

/// Extreme eigenvalues of the Hermitian part of m, estimated independently
/// of any eigensolver: power iteration on shifted matrices.
inline std::pair<double, double> extreme_eigs_power(const Matrix& m, std::uint64_t seed) {
    const Matrix h = 0.5 * (m + m.adjoint());
    const double shift = h.norm() + 1.0;  // Frobenius bound dominates every |eig|
    const Index n = h.rows();
    const Matrix up = h + shift * Matrix::Identity(n, n);    // dominant = hi + shift
    const Matrix down = shift * Matrix::Identity(n, n) - h;  // dominant = shift - lo
    const double hi = power_dominant(up, seed) - shift;
    const double lo = shift - power_dominant(down, seed + 1);
    return {lo, hi};
}

}  // namespace testutil
