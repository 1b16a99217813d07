// Command-line driver: structure checks, both Perron solvers, the power
// decay experiment, the bracket-perturbation bound check, and the seeded
// matrix generator.
//
// Exit codes: 0 success/pass, 1 mathematical failure (non-convergence,
// divergence, bound violation, missing structure), 2 usage or I/O error.

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dualperron/dualperron.hpp"

namespace {

using namespace dualperron;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

void print_value(const char* label, double v) { std::printf("%-16s %.17g\n", label, v); }

void print_bool(const char* label, bool v) {
    std::printf("%-16s %s\n", label, v ? "true" : "false");
}

void print_vector(const char* label, const RealVector& v) {
    std::printf("%-16s [", label);
    for (std::size_t i = 0; i < v.size(); ++i) std::printf(i ? ", %.17g" : "%.17g", v[i]);
    std::printf("]\n");
}

int cmd_check(const std::string& path) {
    const DualMatrix a = read_matrix_document(path).to_dual_matrix();
    const StructureReport r = check_primitive(a);
    std::printf("%-16s %zu\n", "n:", a.size());
    print_bool("nonnegative:", r.nonnegative);
    print_bool("irreducible:", r.irreducible);
    print_bool("primitive:", r.primitive);
    std::printf("%-16s %d\n", "wielandt_bound:", r.wielandt_exponent_bound);
    if (r.witness_k)
        std::printf("%-16s %d\n", "witness_k:", *r.witness_k);
    return r.primitive ? kExitOk : kExitMathFailure;
}

int cmd_solve(const std::string& path, const SolverConfig& cfg, const std::string& x0_spec,
              const std::string& trace_path, bool as_json) {
    const DualMatrix a = read_matrix_document(path).to_dual_matrix();
    const RealVector x0 =
        x0_spec == "ones" ? RealVector(a.size(), 1.0) : read_vector_file(x0_spec);

    const CollatzTrace trace = collatz_solve(a, x0, cfg);
    const PerronResult oracle = perron_eigenpair(a, cfg);
    if (!trace_path.empty()) write_trace_csv(trace_path, trace);

    const CollatzStep& last = trace.steps.back();
    if (as_json) {
        json out{{"lambda_s", trace.final_lambda.s()},
                 {"lambda_d", trace.final_lambda.d()},
                 {"iterations", trace.iterations()},
                 {"gap_s_final", last.gap.s()},
                 {"gap_d_final", last.gap.d()},
                 {"fitted_rate_s", trace.fitted_rate_s},
                 {"fitted_rate_d", trace.fitted_rate_d},
                 {"eta", trace.eta_theoretical},
                 {"oracle_lambda_s", oracle.lambda.s()},
                 {"oracle_lambda_d", oracle.lambda.d()},
                 {"residual_s", oracle.residual_s},
                 {"residual_d", oracle.residual_d}};
        std::printf("%s\n", out.dump(2).c_str());
    } else {
        print_value("lambda_s:", trace.final_lambda.s());
        print_value("lambda_d:", trace.final_lambda.d());
        std::printf("%-16s %d\n", "iterations:", trace.iterations());
        print_bool("converged:", trace.converged);
        print_value("gap_s_final:", last.gap.s());
        print_value("gap_d_final:", last.gap.d());
        print_value("fitted_rate_s:", trace.fitted_rate_s);
        print_value("fitted_rate_d:", trace.fitted_rate_d);
        print_value("eta:", trace.eta_theoretical);
        print_value("oracle_lambda_s:", oracle.lambda.s());
        print_value("oracle_lambda_d:", oracle.lambda.d());
        print_value("oracle_diff_s:", std::abs(trace.final_lambda.s() - oracle.lambda.s()));
        print_value("oracle_diff_d:", std::abs(trace.final_lambda.d() - oracle.lambda.d()));
    }
    return trace.converged ? kExitOk : kExitMathFailure;
}

int cmd_direct(const std::string& path) {
    const DualMatrix a = read_matrix_document(path).to_dual_matrix();
    const PerronResult r = perron_eigenpair(a);
    print_value("lambda_s:", r.lambda.s());
    print_value("lambda_d:", r.lambda.d());
    print_value("residual_s:", r.residual_s);
    print_value("residual_d:", r.residual_d);
    print_vector("x_s:", r.x.s);
    print_vector("x_d:", r.x.d);
    return kExitOk;
}

int cmd_power(const std::string& path, int k_max, double threshold) {
    const DualMatrix a = read_matrix_document(path).to_dual_matrix();
    const DecayReport r = power_decay(a, k_max, threshold);
    print_value("rho_s:", r.rho_s);
    std::printf("%-16s %d\n", "k_recorded:", static_cast<int>(r.k_values.size()));
    print_value("s_maxabs_final:", r.s_maxabs.back());
    print_value("d_maxabs_final:", r.d_maxabs.back());
    const char* verdict = r.verdict == DecayReport::Verdict::converged  ? "converged"
                          : r.verdict == DecayReport::Verdict::diverged ? "diverged"
                                                                        : "inconclusive";
    std::printf("%-16s %s\n", "verdict:", verdict);
    return r.verdict == DecayReport::Verdict::converged ? kExitOk : kExitMathFailure;
}

int cmd_lemma(double lambda_s, double lambda_d, double gamma, double L, double eta, int k,
              int grid) {
    const LemmaCheckResult r = lemma_bound_check(DualNumber(lambda_s, lambda_d), gamma, L, eta,
                                                 k, grid);
    print_value("observed_s:", r.observed_s);
    print_value("observed_d:", r.observed_d);
    print_value("bound:", r.bound);
    print_bool("pass:", r.pass);
    return r.pass ? kExitOk : kExitMathFailure;
}

int cmd_gen(std::size_t n, double density, const std::string& mode_name, std::uint64_t seed,
            const std::string& out_path) {
    DualMode mode = DualMode::nonnegative;
    if (mode_name == "signed") mode = DualMode::signed_;
    if (mode_name == "zero") mode = DualMode::zero;

    const DualMatrix a = generate_primitive(n, density, mode, seed);
    MatrixDocument doc = MatrixDocument::from_dual_matrix(a);
    doc.seed = seed;
    doc.generator = "hamiltonian-cycle+bernoulli(" + std::to_string(density) + ")+" + mode_name;
    write_matrix_document(out_path, doc);

    const StructureReport r = check_primitive(a);
    std::printf("wrote %s (n=%zu, primitive=%s, witness_k=%d)\n", out_path.c_str(), n,
                r.primitive ? "true" : "false", r.witness_k ? *r.witness_k : -1);
    return kExitOk;
}

int cmd_shift(const std::string& path, double beta, const std::string& out_path) {
    const MatrixDocument doc = read_matrix_document(path);
    const DualMatrix shifted = shift_to_primitive(doc.to_dual_matrix(), beta);
    MatrixDocument out = MatrixDocument::from_dual_matrix(shifted);
    out.name = doc.name;
    out.seed = doc.seed;
    out.generator = doc.generator;
    write_matrix_document(out_path, out);
    std::printf("wrote %s (beta=%.17g)\n", out_path.c_str(), beta);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Perron eigenpairs of primitive dual number matrices"};
    app.require_subcommand(1);

    std::string file, out_path, trace_path;
    std::string x0_spec = "ones";
    std::string dual_mode = "nonnegative";
    SolverConfig cfg;
    bool as_json = false;
    int k_max = 100;
    double threshold = 1e-10;
    double lambda_s = 1.0, lambda_d = 0.0, gamma = 1.0, big_l = 1.0, eta = 0.5, beta = 1.0;
    int lemma_k = 10, grid = 7;
    std::size_t gen_n = 0;
    double density = 0.7;
    std::uint64_t seed = 0;

    CLI::App* check = app.add_subcommand("check", "Classify the standard part of a matrix");
    check->add_option("file", file, "matrix document")->required();

    CLI::App* solve = app.add_subcommand("solve", "Collatz bracketing iteration");
    solve->add_option("file", file, "matrix document")->required();
    solve->add_option("--tol-s", cfg.tol_s, "standard-part gap tolerance");
    solve->add_option("--tol-d", cfg.tol_d, "dual-part gap tolerance");
    solve->add_option("--max-iter", cfg.max_iter, "iteration cap");
    solve->add_option("--x0", x0_spec, "'ones' or a JSON vector file");
    solve->add_option("--trace", trace_path, "write the per-iteration trace CSV here");
    solve->add_flag("--json", as_json, "machine-readable result envelope");

    CLI::App* direct = app.add_subcommand("direct", "Direct formula-based eigenpair");
    direct->add_option("file", file, "matrix document")->required();

    CLI::App* power = app.add_subcommand("power", "Power decay experiment");
    power->add_option("file", file, "matrix document")->required();
    power->add_option("--kmax", k_max, "largest exponent")->required();
    power->add_option("--threshold", threshold, "decay threshold");

    CLI::App* lemma = app.add_subcommand("lemma-check", "Bracket perturbation bound check");
    lemma->add_option("--lambda-s", lambda_s, "standard part of lambda")->required();
    lemma->add_option("--lambda-d", lambda_d, "dual part of lambda")->required();
    lemma->add_option("--gamma", gamma, "offset gamma > 0")->required();
    lemma->add_option("--L", big_l, "perturbation radius L > 0")->required();
    lemma->add_option("--eta", eta, "contraction factor in (0,1)")->required();
    lemma->add_option("--k", lemma_k, "iteration exponent")->required();
    lemma->add_option("--grid", grid, "grid points per axis")->required();

    CLI::App* gen = app.add_subcommand("gen", "Generate a seeded primitive matrix");
    gen->add_option("--n", gen_n, "dimension")->required();
    gen->add_option("--density", density, "extra-entry probability in (0,1]");
    gen->add_option("--dual-mode", dual_mode, "nonnegative | signed | zero")
        ->check(CLI::IsMember({"nonnegative", "signed", "zero"}));
    gen->add_option("--seed", seed, "64-bit seed")->required();
    gen->add_option("--out", out_path, "output document path")->required();

    CLI::App* shift = app.add_subcommand("shift", "Shift an irreducible matrix to primitive");
    shift->add_option("file", file, "matrix document")->required();
    shift->add_option("--beta", beta, "positive diagonal shift");
    shift->add_option("--out", out_path, "output document path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check(file);
        if (solve->parsed()) return cmd_solve(file, cfg, x0_spec, trace_path, as_json);
        if (direct->parsed()) return cmd_direct(file);
        if (power->parsed()) return cmd_power(file, k_max, threshold);
        if (lemma->parsed())
            return cmd_lemma(lambda_s, lambda_d, gamma, big_l, eta, lemma_k, grid);
        if (gen->parsed()) return cmd_gen(gen_n, density, dual_mode, seed, out_path);
        if (shift->parsed()) return cmd_shift(file, beta, out_path);
    } catch (const ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const InvalidInputError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitMathFailure;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return kExitMathFailure;
    }
    return kExitUsage;
}
