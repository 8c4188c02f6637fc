// Command-line front end: parse a matrix, run the signing pipeline or the
// brute-force cross-checks, and emit a JSON report. Exit codes: 0 success,
// 2 input/parse failure, 3 capacity refusal, 4 certification or identity
// failure, 1 unexpected internal error.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "matsign/matsign.hpp"

namespace {

using nlohmann::json;

constexpr int kExitParse = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitCertification = 4;

struct LoadedMatrix {
    matsign::DenseMatrix matrix;
    json meta;
};

LoadedMatrix load_input(const std::string& path) {
    const std::string raw = matsign::read_file(path);
    matsign::DenseMatrix a = matsign::parse_matrix(raw);
    json meta{{"path", path},
              {"rows", a.rows()},
              {"cols", a.cols()},
              {"hash", "fnv1a64:" + matsign::fnv1a64_hex(raw)}};
    return LoadedMatrix{std::move(a), std::move(meta)};
}

void emit_report(const json& doc, const std::string& out_path) {
    const std::string text = doc.dump(2) + "\n";
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw matsign::parse_error("cannot open output file: " + out_path);
    out << text;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

bool coeffs_close(const matsign::Polynomial& p, const matsign::Polynomial& q, double rel_tol,
                  double* max_diff = nullptr) {
    double diff = 0.0;
    const int deg = std::max(p.degree(), q.degree());
    for (int k = 0; k <= deg; ++k) diff = std::max(diff, std::abs(p[k] - q[k]));
    if (max_diff) *max_diff = diff;
    const double scale = std::max({1.0, p.max_abs_coeff(), q.max_abs_coeff()});
    return diff <= rel_tol * scale;
}

json root_or_null(const matsign::Polynomial& p, double root_tol) {
    try {
        return matsign::largest_real_root(p, root_tol);
    } catch (const std::domain_error&) {
        return nullptr;
    }
}

int run_sign(const std::string& in_path, const std::string& out_path, bool symmetric_route,
             double tol, int max_n, bool parallel) {
    const auto start = std::chrono::steady_clock::now();
    const LoadedMatrix input = load_input(in_path);
    const int max_dim = max_n > 0 ? max_n : matsign::k_max_expected_charpoly_dim;

    json report{{"command", "sign"},
                {"version", matsign::k_version},
                {"input", input.meta},
                {"tol", tol},
                {"parallel", parallel}};

    matsign::CertifyResult verdict{false, ""};
    if (symmetric_route) {
        const matsign::SymMatrix a = matsign::SymMatrix::from_dense(input.matrix);
        const auto result = matsign::greedy_symmetric_signing(a, tol, max_dim, parallel);
        verdict = matsign::certify(a, result.signs, result.certificate, tol);
        report["mode"] = "symmetric";
        report["certificate"] = matsign::to_json(result.certificate);
    } else {
        const auto result = matsign::sign_rectangular(input.matrix, tol, max_dim, parallel);
        verdict = matsign::certify(input.matrix, result.signs, result.certificate, tol);
        report["mode"] = "rectangular";
        report["certificate"] = matsign::to_json(result.certificate);
    }
    report["certified"] = verdict.ok;
    report["certify_diagnostic"] = verdict.diagnostic;
    report["timing_ms"] = elapsed_ms(start);
    emit_report(report, out_path);
    return verdict.ok ? 0 : kExitCertification;
}

int run_matchpoly(const std::string& in_path, const std::string& out_path, double tol) {
    const auto start = std::chrono::steady_clock::now();
    const LoadedMatrix input = load_input(in_path);
    const matsign::SymMatrix a = matsign::SymMatrix::from_dense(input.matrix);
    const double root_tol = std::min(tol, 1e-9);

    const matsign::Polynomial mu = matsign::matching_polynomial(a);
    const matsign::SymMatrix squared = matsign::entrywise_square(a);
    const matsign::Polynomial mu_squared = matsign::matching_polynomial(squared);

    bool nonnegative = true;
    for (int i = 0; i < a.dim() && nonnegative; ++i)
        for (int j = i; j < a.dim(); ++j)
            if (a(i, j) < 0.0) {
                nonnegative = false;
                break;
            }

    json report{{"command", "matchpoly"},
                {"version", matsign::k_version},
                {"input", input.meta},
                {"mu_coeffs", matsign::to_json(mu)},
                {"mu_largest_root", root_or_null(mu, root_tol)},
                {"hl_bound_mu",
                 nonnegative ? json(matsign::heilmann_lieb_bound(a)) : json(nullptr)},
                {"mu_squared_coeffs", matsign::to_json(mu_squared)},
                {"mu_squared_largest_root", root_or_null(mu_squared, root_tol)},
                {"hl_bound_mu_squared", matsign::heilmann_lieb_bound(squared)}};
    report["timing_ms"] = elapsed_ms(start);
    emit_report(report, out_path);
    return 0;
}

// Runs every cross-check section feasible at the input's size; a section
// whose capacity guard trips is recorded as skipped. All sections skipped is
// a capacity refusal; any failed check is a certification failure.
int run_oracle(const std::string& in_path, const std::string& out_path, double tol, int max_n) {
    const auto start = std::chrono::steady_clock::now();
    const LoadedMatrix input = load_input(in_path);
    const matsign::DenseMatrix& a = input.matrix;
    const int oracle_cap = max_n > 0 ? max_n : matsign::k_max_oracle_support;
    const int brute_cap = max_n > 0 ? max_n : matsign::k_max_brute_entries;
    const int greedy_cap = max_n > 0 ? max_n : matsign::k_max_expected_charpoly_dim;

    bool symmetric = a.rows() == a.cols();
    if (symmetric)
        for (int i = 0; i < a.rows() && symmetric; ++i)
            for (int j = 0; j < a.cols(); ++j)
                if (a(i, j) != a(j, i)) {
                    symmetric = false;
                    break;
                }

    json sections = json::object();
    int sections_ran = 0;
    bool all_pass = true;

    // Average char poly over all signings against the matching polynomial of
    // the entrywise square, on the input itself when symmetric, else on its
    // dilation.
    {
        json sec{{"ran", false}};
        try {
            const matsign::SymMatrix target =
                symmetric ? matsign::SymMatrix::from_dense(a) : matsign::dilate(a);
            const matsign::Polynomial exact = matsign::exact_average_charpoly(target, oracle_cap);
            const matsign::Polynomial expected =
                matsign::matching_polynomial(matsign::entrywise_square(target));
            double diff = 0.0;
            const bool pass = coeffs_close(exact, expected, 1e-10, &diff);
            sec = json{{"ran", true},
                       {"target", symmetric ? "input" : "dilation"},
                       {"exact_average", matsign::to_json(exact)},
                       {"matching_of_square", matsign::to_json(expected)},
                       {"max_coeff_diff", diff},
                       {"pass", pass}};
            ++sections_ran;
            all_pass = all_pass && pass;
        } catch (const matsign::capacity_error& e) {
            sec["skip_reason"] = e.what();
        }
        sections["polynomial_identity"] = sec;
    }

    // Exhaustive minimum of the largest eigenvalue against the greedy result.
    if (symmetric) {
        json sec{{"ran", false}};
        try {
            const matsign::SymMatrix as = matsign::SymMatrix::from_dense(a);
            const auto brute = matsign::brute_force_min_lambda_max(as, oracle_cap);
            const auto greedy = matsign::greedy_symmetric_signing(as, tol, greedy_cap);
            json checks{{"brute_le_greedy",
                         brute.lambda_max <= greedy.certificate.achieved_norm + tol}};
            if (as.zero_diagonal()) {
                checks["greedy_le_mu_root"] = greedy.certificate.achieved_norm <=
                                              greedy.certificate.mu_max_root + tol;
                checks["mu_root_le_bound"] = greedy.certificate.mu_max_root <=
                                             2.0 * greedy.certificate.linf_l2 + tol;
                checks["brute_le_mu_root"] =
                    brute.lambda_max <= greedy.certificate.mu_max_root + tol;
            }
            bool pass = true;
            for (const auto& [key, value] : checks.items()) pass = pass && value.get<bool>();
            sec = json{{"ran", true},
                       {"zero_diagonal", as.zero_diagonal()},
                       {"brute_min_lambda_max", brute.lambda_max},
                       {"greedy_lambda_max", greedy.certificate.achieved_norm},
                       {"mu_max_root", greedy.certificate.mu_max_root},
                       {"bound", 2.0 * greedy.certificate.linf_l2},
                       {"checks", checks},
                       {"pass", pass}};
            ++sections_ran;
            all_pass = all_pass && pass;
        } catch (const matsign::capacity_error& e) {
            sec["skip_reason"] = e.what();
        }
        sections["symmetric"] = sec;
    }

    // Exhaustive minimum spectral norm against the rectangular pipeline.
    {
        json sec{{"ran", false}};
        try {
            const auto brute = matsign::brute_force_min_norm(a, brute_cap);
            const auto greedy = matsign::sign_rectangular(a, tol, greedy_cap);
            json checks{
                {"brute_le_greedy", brute.norm <= greedy.certificate.achieved_norm + tol},
                {"greedy_le_mu_root",
                 greedy.certificate.achieved_norm <= greedy.certificate.mu_max_root + tol},
                {"mu_root_le_bound", greedy.certificate.mu_max_root <=
                                         2.0 * greedy.certificate.dilation_linf_l2 + tol}};
            bool pass = true;
            for (const auto& [key, value] : checks.items()) pass = pass && value.get<bool>();
            sec = json{{"ran", true},
                       {"brute_min_norm", brute.norm},
                       {"greedy_norm", greedy.certificate.achieved_norm},
                       {"mu_max_root", greedy.certificate.mu_max_root},
                       {"bound", 2.0 * greedy.certificate.dilation_linf_l2},
                       {"checks", checks},
                       {"pass", pass}};
            ++sections_ran;
            all_pass = all_pass && pass;
        } catch (const matsign::capacity_error& e) {
            sec["skip_reason"] = e.what();
        }
        sections["rectangular"] = sec;
    }

    json report{{"command", "oracle"},
                {"version", matsign::k_version},
                {"input", input.meta},
                {"tol", tol},
                {"sections", sections},
                {"sections_ran", sections_ran},
                {"pass", all_pass && sections_ran > 0}};
    report["timing_ms"] = elapsed_ms(start);
    emit_report(report, out_path);
    if (sections_ran == 0)
        throw matsign::capacity_error("every oracle section exceeds its capacity guard");
    return all_pass ? 0 : kExitCertification;
}

int run_random(int rows, int cols, std::uint64_t seed, bool symmetric, bool zero_diagonal,
               const std::string& out_path) {
    if (rows < 1 || cols < 1) throw matsign::parse_error("--rows and --cols must be positive");
    if (symmetric && rows != cols)
        throw matsign::parse_error("--symmetric requires a square shape");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    matsign::DenseMatrix a(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (symmetric && j < i) {
                a(i, j) = a(j, i);
                continue;
            }
            a(i, j) = dist(rng);
        }
    if (zero_diagonal)
        for (int i = 0; i < std::min(rows, cols); ++i) a(i, i) = 0.0;

    std::string text;
    char buf[64];
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", a(i, j));
            text += buf;
            text += (j + 1 < cols) ? "," : "\n";
        }
    }
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw matsign::parse_error("cannot open output file: " + out_path);
        out << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sign-matrix solver: finds S with a certified spectral-norm bound on A o S"};
    app.require_subcommand(1);

    std::string in_path, out_path;
    double tol = 1e-7;
    int max_n = -1;
    bool symmetric_flag = false;
    bool parallel = false;

    auto* sign = app.add_subcommand("sign", "Find a certified signing of the input matrix");
    sign->add_option("--in", in_path, "Matrix file, CSV or JSON")->required();
    sign->add_option("--out", out_path, "Write the report here instead of stdout");
    sign->add_flag("--symmetric", symmetric_flag,
                   "Sign the matrix as a symmetric instance (input must be symmetric)");
    sign->add_option("--tol", tol, "Root-comparison tolerance");
    sign->add_option("--max-n", max_n, "Raise the capacity guards to this dimension");
    sign->add_flag("--parallel", parallel, "Evaluate the two descent children concurrently");

    auto* matchpoly =
        app.add_subcommand("matchpoly", "Matching polynomials and root bounds of a symmetric matrix");
    matchpoly->add_option("--in", in_path, "Matrix file, CSV or JSON")->required();
    matchpoly->add_option("--out", out_path, "Write the report here instead of stdout");
    matchpoly->add_option("--tol", tol, "Root tolerance");

    auto* oracle =
        app.add_subcommand("oracle", "Brute-force cross-checks of the pipeline on a small matrix");
    oracle->add_option("--in", in_path, "Matrix file, CSV or JSON")->required();
    oracle->add_option("--out", out_path, "Write the report here instead of stdout");
    oracle->add_option("--tol", tol, "Comparison tolerance");
    oracle->add_option("--max-n", max_n, "Raise the capacity guards");

    int rows = 4, cols = 4;
    std::uint64_t seed = 0;
    bool zero_diagonal = false;
    auto* random = app.add_subcommand("random", "Emit a random test matrix as CSV");
    random->add_option("--rows", rows, "Row count");
    random->add_option("--cols", cols, "Column count");
    random->add_option("--seed", seed, "RNG seed");
    random->add_flag("--symmetric", symmetric_flag, "Make it symmetric (square only)");
    random->add_flag("--zero-diagonal", zero_diagonal, "Zero the diagonal");
    random->add_option("--out", out_path, "Write the matrix here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (sign->parsed()) return run_sign(in_path, out_path, symmetric_flag, tol, max_n, parallel);
        if (matchpoly->parsed()) return run_matchpoly(in_path, out_path, tol);
        if (oracle->parsed()) return run_oracle(in_path, out_path, tol, max_n);
        if (random->parsed())
            return run_random(rows, cols, seed, symmetric_flag, zero_diagonal, out_path);
    } catch (const matsign::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const matsign::capacity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const matsign::certification_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCertification;
    } catch (const matsign::dimension_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
