#pragma once

#include "biframe/bifusion.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace biframe {

/// How the Gamma side of a generated pair relates to the Lambda side.
///   Coincident:          Gamma = Lambda, W = V.
///   HermitianCompatible: Gamma_i = H_i Lambda_i with H_i Hermitian positive
///                        definite and W = V, so the pair operator is
///                        self-adjoint by construction.
///   General:             independent Gaussian draw (typically NonHermitian).
enum class PairMode { Coincident, HermitianCompatible, General };

std::string to_string(PairMode mode);
PairMode pair_mode_from_string(const std::string& name);

/// Deterministic recipe for one random instance.
struct InstanceSpec {
    Index ambient_dim = 0;
    Index item_count = 0;
    std::vector<Index> codomain_dims;  // d_i, one per item
    std::vector<Index> subspace_dims;  // dim V_i, one per item
    double weight_lo = 0.5;
    double weight_hi = 1.5;
    std::uint64_t seed = 0;
    PairMode pair_mode = PairMode::General;
};

/// Spec with dimension lists and weights drawn deterministically from the
/// seed; subspace dims land in [ceil(n/2), n] and codomain dims in [k_i, n].
InstanceSpec default_spec(Index ambient_dim, Index item_count, PairMode mode, std::uint64_t seed);

/// Draws the instance. Bit-exactly deterministic in the spec. Subspaces come
/// from orthonormalized Gaussian matrices; operators are Gaussian scaled by
/// 1/sqrt(n). Throws InvalidSpecError for a malformed spec.
BiGFusionPair generate(const InstanceSpec& spec);

// --- persistence (schema "biframe/1") ------------------------------------
//
// {"schema": "biframe/1", "ambient_dim": n, "weights": [...],
//  "lambda": [{"subspace_basis": [[[re,im],...],...],
//              "operator":       [[[re,im],...],...]}, ...],
//  "gamma": [...]}
//
// Matrices are arrays of rows; every scalar is a [re, im] pair. Doubles are
// emitted with round-trip precision, so load(save(p)) == p bit-exactly.

std::string to_json_string(const BiGFusionPair& pair);
BiGFusionPair pair_from_json(const std::string& text);

void save(const std::filesystem::path& path, const BiGFusionPair& pair);
BiGFusionPair load(const std::filesystem::path& path);

/// Bit-exact structural equality (used by round-trip checks).
bool identical(const BiGFusionPair& a, const BiGFusionPair& b);

// --- suite ----------------------------------------------------------------

struct TheoremCheck {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool skipped = false;  // prerequisite verdict absent; residual is 0
};

struct Report {
    std::string instance_id;
    std::vector<BoundsCertificate> certificates;  // pair, lambda side, gamma side
    std::vector<TheoremCheck> theorem_checks;
    std::uint64_t wall_time_ms = 0;
    bool all_pass() const;
};

/// Runs every applicable identity check on one pair: certification,
/// adjoint symmetry of the swap, oracle agreement, and - on Frame
/// instances - reconstruction, the alpha lower bound, resolution of the
/// identity, the transport envelope for a seeded random invertible U, and
/// the canonical dual. Checks whose prerequisites fail are marked skipped,
/// never thrown. Deterministic in (pair, tol, suite_seed).
Report run_suite(const BiGFusionPair& pair, double tol = kDefaultTol,
                 std::uint64_t suite_seed = 0, const std::string& instance_id = "");

std::string report_to_json(const Report& report);
std::string report_to_markdown(const Report& report);

}  // namespace biframe
