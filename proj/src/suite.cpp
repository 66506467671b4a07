#include "biframe/errors.hpp"
#include "biframe/harness.hpp"
#include "biframe/oracle.hpp"
#include "biframe/random.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>

namespace biframe {

namespace {

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

// Residual recorded for a check that threw; reports never carry
// non-finite residuals.
constexpr double kFailureSentinel = std::numeric_limits<double>::max();

}  // namespace

bool Report::all_pass() const {
    return std::all_of(theorem_checks.begin(), theorem_checks.end(),
                       [](const TheoremCheck& c) { return c.skipped || c.pass; });
}

Report run_suite(const BiGFusionPair& pair, double tol, std::uint64_t suite_seed,
                 const std::string& instance_id) {
    const auto started = std::chrono::steady_clock::now();
    Report report;
    report.instance_id = instance_id.empty() ? fnv1a_hex(to_json_string(pair)) : instance_id;

    const Matrix s = bi_frame_operator(pair);
    const BoundsCertificate cert = certify_operator(s, tol);
    report.certificates = {cert, certify_gfusion(pair.lambda_sys(), tol),
                           certify_gfusion(pair.gamma_sys(), tol)};

    std::mt19937_64 rng(suite_seed);
    const Index n = pair.ambient_dim();

    auto add = [&](const std::string& name, double check_tol, bool applicable,
                   auto&& residual_fn) {
        TheoremCheck check;
        check.name = name;
        check.tolerance = check_tol;
        if (!applicable) {
            check.skipped = true;
            check.pass = true;
        } else {
            try {
                check.residual = residual_fn();
            } catch (const Error&) {
                check.residual = kFailureSentinel;
            }
            check.pass = check.residual <= check_tol;
        }
        report.theorem_checks.push_back(std::move(check));
    };

    add("adjoint-symmetry", 1e-12, true,
        [&] { return operator_norm(bi_frame_operator(swap(pair)) - s.adjoint()); });

    add("oracle-agreement", 1e-11, true, [&] {
        double worst = 0.0;
        for (int k = 0; k < 8; ++k) {
            const Vector f = random_unit_vector(n, rng);
            worst = std::max(worst, std::abs(direct_bi_sum(pair, f) - quadratic_form(s, f)));
        }
        return worst;
    });

    add("swap-certificate", 1e-10, true, [&] {
        const BoundsCertificate swapped = certify_bi_gfusion(swap(pair), tol);
        if (swapped.verdict != cert.verdict) return kFailureSentinel;
        return std::max(std::abs(swapped.lower - cert.lower),
                        std::abs(swapped.upper - cert.upper));
    });

    const bool is_frame = cert.verdict == Verdict::Frame;

    // Reconstruction uses one seeded probe vector; both formula orderings.
    const Vector probe = random_unit_vector(n, rng);
    add("reconstruction-sinv-outer", 1e-8, is_frame,
        [&] { return reconstruct(pair, probe, tol).residual_sinv_outer; });
    add("reconstruction-sinv-inner", 1e-8, is_frame,
        [&] { return reconstruct(pair, probe, tol).residual_sinv_inner; });

    add("alpha-sampled-min", 1e-6, is_frame, [&] {
        const double alpha = alpha_lower_bound(pair, tol);
        const SampledBounds sb = sample_quadratic_form(s, 10000, suite_seed + 1);
        return std::max(0.0, alpha - sb.min_seen);
    });

    add("resolution-of-identity", 1e-9, is_frame,
        [&] { return resolution_of_identity(pair, tol).residual; });

    add("transport-envelope", 1e-9, is_frame, [&] {
        const Matrix u = random_invertible(n, rng);
        const BoundsCertificate moved = certify_bi_gfusion(transport(pair, u, tol), tol);
        const double shrink = 1.0 / (operator_norm(u.inverse()) * operator_norm(u.inverse()));
        const double grow = operator_norm(u) * operator_norm(u);
        return std::max(0.0, std::max(cert.lower * shrink - moved.lower,
                                      moved.upper - cert.upper * grow));
    });

    add("canonical-dual", 1e-8, is_frame, [&] {
        const Matrix s_dual = bi_frame_operator(canonical_dual_bi(pair, tol));
        const Matrix s_inv = s.inverse();
        return operator_norm(s_dual - s_inv) / operator_norm(s_inv);
    });

    const auto elapsed = std::chrono::steady_clock::now() - started;
    report.wall_time_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
    return report;
}

namespace {

nlohmann::json certificate_to_json(const BoundsCertificate& cert) {
    return {{"lower", cert.lower},
            {"upper", cert.upper},
            {"hermitian_deviation", cert.hermitian_deviation},
            {"verdict", to_string(cert.verdict)},
            {"tolerance", cert.tolerance}};
}

}  // namespace

std::string report_to_json(const Report& report) {
    nlohmann::json doc;
    doc["instance_id"] = report.instance_id;
    doc["wall_time_ms"] = report.wall_time_ms;
    doc["all_pass"] = report.all_pass();
    doc["certificates"] = nlohmann::json::array();
    for (const BoundsCertificate& cert : report.certificates) {
        doc["certificates"].push_back(certificate_to_json(cert));
    }
    doc["theorem_checks"] = nlohmann::json::array();
    for (const TheoremCheck& check : report.theorem_checks) {
        doc["theorem_checks"].push_back({{"name", check.name},
                                         {"residual", check.residual},
                                         {"tolerance", check.tolerance},
                                         {"pass", check.pass},
                                         {"skipped", check.skipped}});
    }
    return doc.dump(2);
}

std::string report_to_markdown(const Report& report) {
    std::ostringstream out;
    out << "# Instance " << report.instance_id << "\n\n";
    out << "- wall time: " << report.wall_time_ms << " ms\n";
    out << "- overall: " << (report.all_pass() ? "pass" : "FAIL") << "\n\n";
    out << "| certificate | lower | upper | deviation | verdict |\n";
    out << "|---|---|---|---|---|\n";
    const char* names[] = {"pair", "lambda", "gamma"};
    for (std::size_t i = 0; i < report.certificates.size(); ++i) {
        const BoundsCertificate& c = report.certificates[i];
        out << "| " << (i < 3 ? names[i] : "extra") << " | " << c.lower << " | " << c.upper
            << " | " << c.hermitian_deviation << " | " << to_string(c.verdict) << " |\n";
    }
    out << "\n| check | residual | tolerance | status |\n";
    out << "|---|---|---|---|\n";
    for (const TheoremCheck& check : report.theorem_checks) {
        out << "| " << check.name << " | " << check.residual << " | " << check.tolerance << " | "
            << (check.skipped ? "skipped" : (check.pass ? "pass" : "FAIL")) << " |\n";
    }
    return out.str();
}

}  // namespace biframe
