#pragma once

#include "biframe/bifusion.hpp"
#include "biframe/types.hpp"

#include <cstdint>

namespace biframe {

/// Empirical min/max of the Rayleigh quotient Re<Mf, f> over random unit
/// vectors. Deterministic: the same (seed, samples) regenerates identical
/// values bit-for-bit. For Hermitian M the bracket always lies inside the
/// spectral interval.
struct SampledBounds {
    double min_seen = 0.0;
    double max_seen = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

/// Draws `samples` normalized complex Gaussian unit vectors and records the
/// extreme values of Re<Mf, f>. Throws NonSquareError.
SampledBounds sample_quadratic_form(const Matrix& m, std::uint64_t samples, std::uint64_t seed);

/// The defining sum of the pair, sum_i v_i^2 <Lambda_i P_{V_i} f,
/// Gamma_i P_{W_i} f>, evaluated term by term with matrix-vector products
/// only and in reverse index order, so it never touches the assembled
/// operator it cross-checks.
Complex direct_bi_sum(const BiGFusionPair& pair, const Vector& f);

}  // namespace biframe
