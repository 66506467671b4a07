#include "biframe/oracle.hpp"

#include "biframe/errors.hpp"
#include "biframe/random.hpp"

#include "doctest.h"
#include "helpers.hpp"

#include <cmath>

using namespace biframe;
using testutil::coincident;
using testutil::parseval_axes;
using testutil::random_pair;

TEST_CASE("sampling the identity pins the quadratic form to one") {
    const SampledBounds sb = sample_quadratic_form(Matrix::Identity(4, 4), 100, 3);
    CHECK(sb.min_seen == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sb.max_seen == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sampling diag(1, 4) concentrates inside the spectrum") {
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = Complex(1, 0);
    d(1, 1) = Complex(4, 0);
    const SampledBounds sb = sample_quadratic_form(d, 10000, 17);
    CHECK(sb.min_seen >= 1.0);
    CHECK(sb.min_seen <= 1.2);
    CHECK(sb.max_seen >= 3.8);
    CHECK(sb.max_seen <= 4.0);
}

TEST_CASE("sampling is deterministic bit-for-bit in (seed, samples)") {
    std::mt19937_64 rng(71);
    const Matrix m = gaussian_matrix(5, 5, rng);
    const SampledBounds a = sample_quadratic_form(m, 500, 99);
    const SampledBounds b = sample_quadratic_form(m, 500, 99);
    CHECK(a.min_seen == b.min_seen);
    CHECK(a.max_seen == b.max_seen);
    const SampledBounds c = sample_quadratic_form(m, 500, 100);
    CHECK((c.min_seen != a.min_seen || c.max_seen != a.max_seen));
}

TEST_CASE("sampled brackets always sit inside the spectral interval") {
    std::mt19937_64 rng(72);
    for (int t = 0; t < 10; ++t) {
        const Matrix g = gaussian_matrix(4, 4, rng);
        const Matrix m = 0.5 * (g + g.adjoint());
        const SpectralInterval si = spectral_interval(m);
        const SampledBounds sb = sample_quadratic_form(m, 2000, 123 + t);
        CHECK(sb.min_seen >= si.lo - 1e-12);
        CHECK(sb.max_seen <= si.hi + 1e-12);
    }
}

TEST_CASE("sampling rejects rectangular matrices") {
    CHECK_THROWS_AS(sample_quadratic_form(Matrix::Zero(2, 3), 10, 0), NonSquareError);
    CHECK_THROWS_AS(sample_quadratic_form(Matrix::Zero(2, 2), 0, 0), InvariantViolationError);
}

TEST_CASE("direct sum on the coincident Parseval pair is the squared norm") {
    const BiGFusionPair pair = coincident(parseval_axes(3));
    std::mt19937_64 rng(73);
    const Vector f = random_unit_vector(3, rng);
    CHECK(std::abs(direct_bi_sum(pair, f) - Complex(1, 0)) <= 1e-13);
    CHECK(std::abs(direct_bi_sum(pair, Vector::Zero(3))) == 0.0);
}

TEST_CASE("direct sum agrees with the assembled operator route") {
    std::mt19937_64 rng(74);
    for (std::uint64_t seed : {741, 742, 743}) {
        const BiGFusionPair pair = random_pair(5, 4, PairMode::General, seed);
        const Matrix s = bi_frame_operator(pair);
        for (int k = 0; k < 30; ++k) {
            const Vector f = random_unit_vector(5, rng);
            CHECK(std::abs(direct_bi_sum(pair, f) - quadratic_form(s, f)) <= 1e-11);
        }
    }
}

TEST_CASE("direct sum scales quadratically under vector scaling") {
    const BiGFusionPair pair = random_pair(4, 3, PairMode::General, 744);
    std::mt19937_64 rng(75);
    const Vector f = random_unit_vector(4, rng);
    const Complex c(1.25, -0.5);
    const Complex base = direct_bi_sum(pair, f);
    const Complex scaled = direct_bi_sum(pair, Vector(c * f));
    CHECK(std::abs(scaled - std::norm(c) * base) <= 1e-12);
}

TEST_CASE("direct sum validates dimensions") {
    const BiGFusionPair pair = random_pair(4, 3, PairMode::General, 745);
    CHECK_THROWS_AS(direct_bi_sum(pair, Vector::Zero(5)), DimensionMismatchError);
}
