#include "biframe/gfusion.hpp"

#include "biframe/errors.hpp"
#include "biframe/oracle.hpp"
#include "biframe/random.hpp"

#include "doctest.h"
#include "helpers.hpp"

#include <cmath>
#include <vector>

using namespace biframe;
using testutil::parseval_axes;
using testutil::random_system;
using testutil::weighted_axes_2d;

namespace {

GFusionItem full_space_item(Index dim, Matrix op, double weight) {
    return {Subspace(Matrix::Identity(dim, dim)), std::move(op), weight};
}

}  // namespace

TEST_CASE("analysis of a single full-space identity item returns the vector") {
    GFusionSystem sys(3, {full_space_item(3, Matrix::Identity(3, 3), 1.0)});
    std::mt19937_64 rng(41);
    const Vector f = gaussian_vector(3, rng);
    const auto parts = analysis_apply(sys, f);
    REQUIRE(parts.size() == 1);
    CHECK((parts[0] - f).norm() <= 1e-14);

    const auto zero_parts = analysis_apply(sys, Vector::Zero(3));
    CHECK(zero_parts[0].norm() == 0.0);
}

TEST_CASE("analysis norms add up to the frame-operator quadratic form") {
    std::mt19937_64 rng(42);
    const GFusionSystem sys = random_system(4, 3, 902);
    const Matrix s = frame_operator(sys);
    for (int k = 0; k < 25; ++k) {
        const Vector f = gaussian_vector(4, rng);
        double total = 0.0;
        for (const Vector& part : analysis_apply(sys, f)) total += part.squaredNorm();
        const double sf = quadratic_form(s, f).real();
        CHECK(std::abs(total - sf) <= 1e-10 * std::max(1.0, std::abs(sf)));
    }
}

TEST_CASE("synthesis is adjoint to analysis: S = T T*") {
    const GFusionSystem sys = random_system(5, 4, 903);
    const Matrix s = frame_operator(sys);
    std::mt19937_64 rng(43);
    const Vector f = gaussian_vector(5, rng);
    const Vector roundtrip = synthesis_apply(sys, analysis_apply(sys, f));
    CHECK((roundtrip - s * f).norm() <= 1e-10);
}

TEST_CASE("synthesis trivial cases") {
    GFusionSystem sys(3, {full_space_item(3, Matrix::Identity(3, 3), 2.0)});
    std::mt19937_64 rng(44);
    const Vector g = gaussian_vector(3, rng);
    CHECK((synthesis_apply(sys, {g}) - 2.0 * g).norm() <= 1e-14);
    CHECK(synthesis_apply(sys, {Vector::Zero(3)}).norm() == 0.0);
}

TEST_CASE("analysis and synthesis reject mismatched dimensions") {
    const GFusionSystem sys = random_system(4, 2, 904);
    CHECK_THROWS_AS(analysis_apply(sys, Vector::Zero(5)), DimensionMismatchError);
    CHECK_THROWS_AS(synthesis_apply(sys, {Vector::Zero(2)}), DimensionMismatchError);
    std::vector<Vector> bad_parts(2, Vector::Zero(99));
    CHECK_THROWS_AS(synthesis_apply(sys, bad_parts), DimensionMismatchError);
}

TEST_CASE("frame operator of the Parseval and weighted axis families") {
    CHECK((frame_operator(parseval_axes(2)) - Matrix::Identity(2, 2)).norm() <= 1e-14);
    Matrix expected = Matrix::Zero(2, 2);
    expected(0, 0) = Complex(4, 0);
    expected(1, 1) = Complex(1, 0);
    CHECK((frame_operator(weighted_axes_2d()) - expected).norm() <= 1e-14);
}

TEST_CASE("frame operator is positive semidefinite") {
    const GFusionSystem sys = random_system(5, 3, 905);
    const Matrix s = frame_operator(sys);
    CHECK(hermitian_deviation(s) <= 1e-10);
    std::mt19937_64 rng(45);
    for (int k = 0; k < 1000; ++k) {
        CHECK(quadratic_form(s, random_unit_vector(5, rng)).real() >= -1e-12);
    }
}

TEST_CASE("certification of the axis families") {
    const BoundsCertificate parseval = certify_gfusion(parseval_axes(2));
    CHECK(parseval.verdict == Verdict::Frame);
    CHECK(parseval.lower == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(parseval.upper == doctest::Approx(1.0).epsilon(1e-12));

    const BoundsCertificate weighted = certify_gfusion(weighted_axes_2d());
    CHECK(weighted.lower == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(weighted.upper == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("a family whose operators share a kernel vector is Bessel only") {
    // All operators annihilate e1: rows select the second coordinate only.
    Matrix op(1, 2);
    op << Complex(0, 0), Complex(1, 0);
    GFusionSystem sys(2, {full_space_item(2, op, 1.0), full_space_item(2, 2.0 * op, 1.0)});
    const BoundsCertificate cert = certify_gfusion(sys, 1e-9);
    CHECK(cert.lower <= 1e-9);
    CHECK(cert.verdict == Verdict::BesselOnly);
}

TEST_CASE("certified bounds are attained by eigenvectors") {
    const GFusionSystem sys = random_system(6, 4, 906);
    const Matrix s = frame_operator(sys);
    const BoundsCertificate cert = certify_gfusion(sys);
    Eigen::SelfAdjointEigenSolver<Matrix> es(s);
    const Vector low_vec = es.eigenvectors().col(0);
    const Vector high_vec = es.eigenvectors().col(s.rows() - 1);
    CHECK(std::abs(quadratic_form(s, low_vec).real() - cert.lower) <= 1e-9);
    CHECK(std::abs(quadratic_form(s, high_vec).real() - cert.upper) <= 1e-9);
}

TEST_CASE("pair frame operator degenerates to the frame operator and scales linearly") {
    const GFusionSystem sys = random_system(4, 3, 907);
    CHECK((pair_frame_operator(sys, sys) - frame_operator(sys)).norm() <= 1e-13);

    std::vector<GFusionItem> scaled;
    for (const GFusionItem& it : sys.items()) {
        scaled.push_back({it.subspace, 2.0 * it.op, it.weight});
    }
    const GFusionSystem doubled(sys.ambient_dim(), scaled);
    CHECK((pair_frame_operator(sys, doubled) - 2.0 * frame_operator(sys)).norm() <= 1e-12);
}

TEST_CASE("pair frame operator agrees with a reversed-order entrywise assembly") {
    const GFusionSystem a = random_system(4, 3, 908);
    const GFusionSystem b = random_system(4, 3, 909);
    const Matrix s = pair_frame_operator(a, b);

    Matrix oracle = Matrix::Zero(4, 4);
    for (Index i = a.size() - 1; i >= 0; --i) {
        const GFusionItem& ia = a.item(i);
        const GFusionItem& ib = b.item(i);
        // Different association order than the implementation.
        oracle += (ia.weight * ib.weight) *
                  (projector(ia.subspace) * ia.op.adjoint() * (ib.op * projector(ib.subspace)));
    }
    CHECK((s - oracle).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("pair frame operator validates its index sets") {
    const GFusionSystem a = random_system(4, 3, 910);
    const GFusionSystem b = random_system(4, 2, 911);
    CHECK_THROWS_AS(pair_frame_operator(a, b), IndexMismatchError);
    const GFusionSystem c = random_system(5, 3, 912);
    CHECK_THROWS_AS(pair_frame_operator(a, c), DimensionMismatchError);
}

TEST_CASE("canonical dual of a Parseval family is the family itself") {
    const GFusionSystem sys = parseval_axes(2);
    const GFusionSystem dual = canonical_dual_gfusion(sys);
    REQUIRE(dual.size() == sys.size());
    for (Index i = 0; i < sys.size(); ++i) {
        CHECK(projector_distance(dual.item(i).subspace, sys.item(i).subspace) <= 1e-10);
        // Effective operators Lambda P agree (the dual absorbs the projector).
        const Matrix lhs = dual.item(i).op * projector(dual.item(i).subspace);
        const Matrix rhs = sys.item(i).op * projector(sys.item(i).subspace);
        CHECK(operator_norm(lhs - rhs) <= 1e-10);
    }
}

TEST_CASE("canonical dual of the weighted axis family inverts the bounds") {
    const GFusionSystem dual = canonical_dual_gfusion(weighted_axes_2d());
    const BoundsCertificate cert = certify_gfusion(dual);
    CHECK(std::abs(cert.lower - 0.25) <= 1e-9);
    CHECK(std::abs(cert.upper - 1.0) <= 1e-9);
}

TEST_CASE("canonical dual reconstructs and is an involution") {
    const GFusionSystem sys = random_system(5, 4, 913);
    const Matrix s = frame_operator(sys);
    const Matrix s_inv = s.inverse();
    std::mt19937_64 rng(46);
    for (int k = 0; k < 10; ++k) {
        const Vector f = gaussian_vector(5, rng);
        const Vector rebuilt = synthesis_apply(sys, analysis_apply(sys, Vector(s_inv * f)));
        CHECK((rebuilt - f).norm() <= 1e-8 * f.norm());
    }
    const GFusionSystem dual = canonical_dual_gfusion(sys);
    const GFusionSystem dual2 = canonical_dual_gfusion(dual);
    CHECK(operator_norm(frame_operator(dual2) - s) <= 1e-8);
    CHECK(operator_norm(frame_operator(dual) - s_inv) <= 1e-9);
    for (Index i = 0; i < sys.size(); ++i) {
        CHECK(projector_distance(dual2.item(i).subspace, sys.item(i).subspace) <= 1e-8);
    }
}

TEST_CASE("canonical dual refuses non-frames") {
    Matrix op(1, 2);
    op << Complex(0, 0), Complex(1, 0);
    GFusionSystem bessel(2, {full_space_item(2, op, 1.0)});
    CHECK_THROWS_AS(canonical_dual_gfusion(bessel), NotAFrameError);
}

TEST_CASE("controlled certification with identity controllers equals the plain one") {
    const GFusionSystem sys = random_system(4, 3, 914);
    const Matrix i4 = Matrix::Identity(4, 4);
    const BoundsCertificate controlled = certify_controlled_gfusion(sys, i4, i4);
    const BoundsCertificate plain = certify_gfusion(sys);
    CHECK(std::abs(controlled.lower - plain.lower) <= 1e-13);
    CHECK(std::abs(controlled.upper - plain.upper) <= 1e-13);
    CHECK(controlled.verdict == plain.verdict);
}

TEST_CASE("equal controllers give a Hermitian positive operator") {
    const GFusionSystem sys = random_system(5, 3, 915);
    std::mt19937_64 rng(47);
    const Matrix t = random_invertible(5, rng);
    const BoundsCertificate cert = certify_controlled_gfusion(sys, t, t);
    CHECK(cert.hermitian_deviation <= 1e-10);
    CHECK(cert.lower >= -1e-12);
}

TEST_CASE("scalar controller scales a Parseval family") {
    const GFusionSystem sys = parseval_axes(3);
    const Matrix i3 = Matrix::Identity(3, 3);
    const BoundsCertificate cert = certify_controlled_gfusion(sys, i3, Matrix(2.0 * i3));
    CHECK(cert.lower == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(cert.upper == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("singular controllers are rejected") {
    const GFusionSystem sys = random_system(3, 2, 916);
    Matrix singular = Matrix::Zero(3, 3);
    singular(0, 0) = Complex(1, 0);
    CHECK_THROWS_AS(certify_controlled_gfusion(sys, singular, Matrix::Identity(3, 3)),
                    SingularControllerError);
    CHECK_THROWS_AS(certify_controlled_gfusion(sys, Matrix::Identity(3, 3), singular),
                    SingularControllerError);
}

TEST_CASE("system construction validates items") {
    CHECK_THROWS_AS(GFusionSystem(3, {}), InvariantViolationError);
    CHECK_THROWS_AS(GFusionSystem(3, {full_space_item(3, Matrix::Identity(3, 3), 0.0)}),
                    InvariantViolationError);
    CHECK_THROWS_AS(GFusionSystem(3, {full_space_item(3, Matrix::Identity(2, 2), 1.0)}),
                    DimensionMismatchError);
    CHECK_THROWS_AS(GFusionSystem(2, {full_space_item(3, Matrix::Identity(3, 3), 1.0)}),
                    DimensionMismatchError);
}
