#include "biframe/errors.hpp"
#include "biframe/harness.hpp"
#include "biframe/random.hpp"
#include "biframe/tensorframe.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace biframe;

std::string format_certificate(const BoundsCertificate& cert, const std::string& label) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%-8s verdict=%-12s lower=%.12g upper=%.12g deviation=%.3g",
                  label.c_str(), to_string(cert.verdict).c_str(), cert.lower, cert.upper,
                  cert.hermitian_deviation);
    return buf;
}

std::string certificate_json(const BoundsCertificate& cert) {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "{\"verdict\":\"%s\",\"lower\":%.17g,\"upper\":%.17g,"
                  "\"hermitian_deviation\":%.17g,\"tolerance\":%.17g}",
                  to_string(cert.verdict).c_str(), cert.lower, cert.upper,
                  cert.hermitian_deviation, cert.tolerance);
    return buf;
}

int run_gen(const std::string& out_path, Index dim, Index items, const std::string& mode,
            std::uint64_t seed, double wlo, double whi, const std::vector<Index>& subspace_dims,
            const std::vector<Index>& codomain_dims) {
    InstanceSpec spec = default_spec(dim, items, pair_mode_from_string(mode), seed);
    spec.weight_lo = wlo;
    spec.weight_hi = whi;
    if (!subspace_dims.empty()) spec.subspace_dims = subspace_dims;
    if (!codomain_dims.empty()) spec.codomain_dims = codomain_dims;
    save(out_path, generate(spec));
    std::cout << "wrote " << out_path << " (dim " << dim << ", " << items << " items, "
              << to_string(spec.pair_mode) << ", seed " << seed << ")\n";
    return 0;
}

int run_check(const std::string& path, double tol, bool as_json, bool as_md) {
    const BiGFusionPair pair = load(path);
    const BoundsCertificate cert = certify_bi_gfusion(pair, tol);
    const BoundsCertificate lambda = certify_gfusion(pair.lambda_sys(), tol);
    const BoundsCertificate gamma = certify_gfusion(pair.gamma_sys(), tol);
    if (as_json) {
        std::cout << "{\"pair\":" << certificate_json(cert)
                  << ",\"lambda\":" << certificate_json(lambda)
                  << ",\"gamma\":" << certificate_json(gamma) << "}\n";
    } else if (as_md) {
        std::cout << "| system | verdict | lower | upper | deviation |\n|---|---|---|---|---|\n";
        for (const auto& [label, c] :
             {std::pair{"pair", cert}, std::pair{"lambda", lambda}, std::pair{"gamma", gamma}}) {
            std::cout << "| " << label << " | " << to_string(c.verdict) << " | " << c.lower
                      << " | " << c.upper << " | " << c.hermitian_deviation << " |\n";
        }
    } else {
        std::cout << format_certificate(cert, "pair") << "\n"
                  << format_certificate(lambda, "lambda") << "\n"
                  << format_certificate(gamma, "gamma") << "\n";
    }
    return cert.verdict == Verdict::Frame ? 0 : 1;
}

int run_dual(const std::string& path, const std::string& out_path, double tol) {
    const BiGFusionPair pair = load(path);
    const BiGFusionPair dual = canonical_dual_bi(pair, tol);
    save(out_path, dual);
    std::cout << "wrote " << out_path << "\n"
              << format_certificate(certify_bi_gfusion(dual, tol), "dual") << "\n";
    return 0;
}

int run_reconstruct(const std::string& path, std::uint64_t vector_seed, double tol, double rtol) {
    const BiGFusionPair pair = load(path);
    std::mt19937_64 rng(vector_seed);
    const Vector f = random_unit_vector(pair.ambient_dim(), rng);
    const Reconstruction rec = reconstruct(pair, f, tol);
    std::cout << "residual (S^-1 outer) = " << rec.residual_sinv_outer << "\n"
              << "residual (S^-1 inner) = " << rec.residual_sinv_inner << "\n";
    const bool ok = rec.residual_sinv_outer <= rtol && rec.residual_sinv_inner <= rtol;
    std::cout << (ok ? "pass" : "FAIL") << " (threshold " << rtol << ")\n";
    return ok ? 0 : 1;
}

int run_tensor(const std::string& left_path, const std::string& right_path,
               const std::string& out_path, double tol) {
    const TensorBiPair tp = tensor_pair(load(left_path), load(right_path));
    const TensorCertificates certs = certify_tensor(tp, tol);
    save(out_path, tp.assembled);
    std::cout << "wrote " << out_path << " (ambient " << tp.assembled.ambient_dim() << ", "
              << tp.assembled.size() << " items)\n"
              << format_certificate(certs.left, "left") << "\n"
              << format_certificate(certs.right, "right") << "\n"
              << format_certificate(certs.assembled, "tensor") << "\n";
    return 0;
}

int run_suite_cmd(const std::vector<std::string>& paths, const std::string& report_dir, double tol,
                  std::uint64_t seed) {
    bool all_ok = true;
    if (!report_dir.empty()) {
        std::filesystem::create_directories(report_dir);
    }
    for (const std::string& path : paths) {
        const BiGFusionPair pair = load(path);
        const std::string id = std::filesystem::path(path).stem().string();
        const Report report = run_suite(pair, tol, seed, id);
        int passed = 0, failed = 0, skipped = 0;
        for (const TheoremCheck& check : report.theorem_checks) {
            (check.skipped ? skipped : (check.pass ? passed : failed))++;
        }
        std::cout << id << ": " << (report.all_pass() ? "pass" : "FAIL") << " (" << passed
                  << " passed, " << failed << " failed, " << skipped << " skipped; verdict "
                  << to_string(report.certificates.front().verdict) << ")\n";
        if (!report_dir.empty()) {
            const auto base = std::filesystem::path(report_dir) / (id + ".report");
            std::ofstream json_out(base.string() + ".json");
            json_out << report_to_json(report) << "\n";
            std::ofstream md_out(base.string() + ".md");
            md_out << report_to_markdown(report);
        }
        all_ok = all_ok && report.all_pass();
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"biframe - bi-g-fusion frame construction and certification toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // --tol may follow the subcommand

    // Tolerance precedence: --tol flag, then BIFRAME_TOL, then the default.
    double tol = kDefaultTol;
    if (const char* env = std::getenv("BIFRAME_TOL")) {
        char* end = nullptr;
        const double parsed = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(parsed > 0.0) || !std::isfinite(parsed)) {
            std::cerr << "error: BIFRAME_TOL='" << env << "' is not a positive number\n";
            return 2;
        }
        tol = parsed;
    }
    app.add_option("--tol", tol, "verdict/residual tolerance")->check(CLI::PositiveNumber);

    auto* gen = app.add_subcommand("gen", "generate a random instance");
    Index dim = 4, items = 3;
    std::string mode = "general", out_path;
    std::uint64_t seed = 0;
    double wlo = 0.5, whi = 1.5;
    std::vector<Index> subspace_dims, codomain_dims;
    gen->add_option("--dim", dim, "ambient dimension")->required()->check(CLI::PositiveNumber);
    gen->add_option("--items", items, "number of items")->required()->check(CLI::PositiveNumber);
    gen->add_option("--mode", mode, "coincident|hermitian|general")
        ->check(CLI::IsMember({"coincident", "hermitian", "hermitian-compatible", "general"}));
    gen->add_option("--seed", seed, "instance seed");
    gen->add_option("-o,--output", out_path, "output file")->required();
    gen->add_option("--wmin", wlo, "smallest weight")->check(CLI::PositiveNumber);
    gen->add_option("--wmax", whi, "largest weight")->check(CLI::PositiveNumber);
    gen->add_option("--subspace-dims", subspace_dims, "per-item subspace dimensions");
    gen->add_option("--codomain-dims", codomain_dims, "per-item codomain dimensions");

    auto* check = app.add_subcommand("check", "certify the frame bounds of an instance");
    std::string check_path;
    bool as_json = false, as_md = false;
    check->add_option("file", check_path, "instance file")->required();
    auto* json_flag = check->add_flag("--json", as_json, "JSON output");
    check->add_flag("--md", as_md, "Markdown output")->excludes(json_flag);

    auto* dual = app.add_subcommand("dual", "write the canonical dual pair");
    std::string dual_path, dual_out;
    dual->add_option("file", dual_path, "instance file")->required();
    dual->add_option("-o,--output", dual_out, "output file")->required();

    auto* rec = app.add_subcommand("reconstruct", "reconstruct a seeded random vector");
    std::string rec_path;
    std::uint64_t vector_seed = 0;
    double rtol = 1e-8;
    rec->add_option("file", rec_path, "instance file")->required();
    rec->add_option("--vector-seed", vector_seed, "seed of the probe vector");
    rec->add_option("--rtol", rtol, "pass threshold on the relative residuals");

    auto* tensor = app.add_subcommand("tensor", "assemble the tensor-product pair");
    std::string left_path, right_path, tensor_out;
    tensor->add_option("left", left_path, "left factor file")->required();
    tensor->add_option("right", right_path, "right factor file")->required();
    tensor->add_option("-o,--output", tensor_out, "output file")->required();

    auto* suite = app.add_subcommand("suite", "run every identity check on instances");
    std::vector<std::string> suite_paths;
    std::string report_dir;
    std::uint64_t suite_seed = 0;
    suite->add_option("files", suite_paths, "instance files")->required()->expected(-1);
    suite->add_option("--report", report_dir, "directory for per-instance reports");
    suite->add_option("--seed", suite_seed, "suite seed (probe vectors, transport operator)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            return run_gen(out_path, dim, items, mode, seed, wlo, whi, subspace_dims,
                           codomain_dims);
        }
        if (check->parsed()) return run_check(check_path, tol, as_json, as_md);
        if (dual->parsed()) return run_dual(dual_path, dual_out, tol);
        if (rec->parsed()) return run_reconstruct(rec_path, vector_seed, tol, rtol);
        if (tensor->parsed()) return run_tensor(left_path, right_path, tensor_out, tol);
        if (suite->parsed()) return run_suite_cmd(suite_paths, report_dir, tol, suite_seed);
    } catch (const biframe::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
