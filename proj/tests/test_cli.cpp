#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// End-to-end checks of the command-line driver. The binary path arrives in
// the DUALPERRON_CLI environment variable (set by CTest).

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "dualperron/experiments.hpp"
#include "dualperron/matrix_io.hpp"
#include "dualperron/real_spectral.hpp"

using namespace dualperron;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

const char* cli_path() {
    const char* p = std::getenv("DUALPERRON_CLI");
    REQUIRE_MESSAGE(p != nullptr, "DUALPERRON_CLI must point at the CLI binary");
    return p;
}

RunResult run(const std::string& args) {
    const std::string cmd = std::string(cli_path()) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("dualperron-cli-" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const char* name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("gen then check round-trips through the document format") {
    TempDir tmp;
    const std::string doc = tmp.file("m.json");
    const RunResult gen = run("gen --n 5 --seed 7 --out " + doc);
    CHECK(gen.exit_code == 0);
    CHECK(gen.out.find("primitive=true") != std::string::npos);

    const RunResult check = run("check " + doc);
    CHECK(check.exit_code == 0);
    CHECK(check.out.find("primitive:       true") != std::string::npos);

    // Same seed, same bytes.
    const std::string doc2 = tmp.file("m2.json");
    run("gen --n 5 --seed 7 --out " + doc2);
    std::ifstream a(doc), b(doc2);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
}

TEST_CASE("solve emits the JSON envelope and satisfies the rate bound") {
    TempDir tmp;
    const std::string doc = tmp.file("m.json");
    REQUIRE(run("gen --n 6 --density 0.7 --dual-mode signed --seed 11 --out " + doc).exit_code ==
            0);

    const std::string trace = tmp.file("trace.csv");
    const RunResult solve = run("solve " + doc + " --json --trace " + trace);
    CHECK(solve.exit_code == 0);

    const nlohmann::json out = nlohmann::json::parse(solve.out);
    for (const char* key :
         {"lambda_s", "lambda_d", "iterations", "gap_s_final", "gap_d_final", "fitted_rate_s",
          "fitted_rate_d", "eta", "oracle_lambda_s", "oracle_lambda_d", "residual_s",
          "residual_d"})
        CHECK_MESSAGE(out.contains(key), "missing key ", key);

    CHECK(std::abs(out["lambda_s"].get<double>() - out["oracle_lambda_s"].get<double>()) <= 1e-8);
    CHECK(std::abs(out["lambda_d"].get<double>() - out["oracle_lambda_d"].get<double>()) <= 1e-8);
    CHECK(out["fitted_rate_s"].get<double>() <= out["eta"].get<double>() + 0.05);

    std::ifstream tr(trace);
    std::string header;
    std::getline(tr, header);
    CHECK(header == "k,lower_s,lower_d,upper_s,upper_d,gap_s,gap_d");
    int rows = 0;
    std::string line;
    while (std::getline(tr, line))
        if (!line.empty()) ++rows;
    CHECK(rows == out["iterations"].get<int>());
}

TEST_CASE("solve accepts an x0 vector file") {
    TempDir tmp;
    const std::string doc = tmp.file("m.json");
    REQUIRE(run("gen --n 3 --seed 5 --out " + doc).exit_code == 0);
    const std::string x0 = tmp.file("x0.json");
    {
        std::ofstream out(x0);
        out << "[0.5, 1.5, 2.5]";
    }
    CHECK(run("solve " + doc + " --x0 " + x0).exit_code == 0);

    // Nonpositive entries are a usage error.
    {
        std::ofstream out(x0);
        out << "[0.5, -1.5, 2.5]";
    }
    CHECK(run("solve " + doc + " --x0 " + x0).exit_code == 2);
}

TEST_CASE("direct prints the eigenpair") {
    TempDir tmp;
    const std::string doc = tmp.file("m.json");
    REQUIRE(run("gen --n 4 --seed 3 --out " + doc).exit_code == 0);
    const RunResult direct = run("direct " + doc);
    CHECK(direct.exit_code == 0);
    CHECK(direct.out.find("lambda_s:") != std::string::npos);
    CHECK(direct.out.find("residual_d:") != std::string::npos);
    CHECK(direct.out.find("x_s:") != std::string::npos);
}

TEST_CASE("power reports verdicts with matching exit codes") {
    TempDir tmp;
    const DualMatrix base = generate_primitive(4, 0.7, DualMode::nonnegative, 21);
    const double rho = real_perron(base.s).rho;

    const std::string sub = tmp.file("sub.json");
    write_matrix_document(sub,
                          MatrixDocument::from_dual_matrix(DualMatrix((0.8 / rho) * base.s,
                                                                      base.d)));
    const RunResult conv = run("power " + sub + " --kmax 5000");
    CHECK(conv.exit_code == 0);
    CHECK(conv.out.find("verdict:         converged") != std::string::npos);

    const std::string sup = tmp.file("sup.json");
    write_matrix_document(sup,
                          MatrixDocument::from_dual_matrix(DualMatrix((1.01 / rho) * base.s,
                                                                      base.d)));
    const RunResult div = run("power " + sup + " --kmax 5000");
    CHECK(div.exit_code == 1);
    CHECK(div.out.find("verdict:         diverged") != std::string::npos);
}

TEST_CASE("lemma-check passes the documented combination") {
    const RunResult r = run(
        "lemma-check --lambda-s 1 --lambda-d 0 --gamma 1 --L 1 --eta 0.5 --k 10 --grid 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("pass:            true") != std::string::npos);

    // Precondition failure is a usage error.
    const RunResult bad = run(
        "lemma-check --lambda-s 1 --lambda-d 0 --gamma 1 --L 1 --eta 0.5 --k 1 --grid 5");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("shift turns an even cycle primitive") {
    TempDir tmp;
    MatrixDocument doc;
    doc.n = 2;
    doc.standard = RealMatrix(2, 2);
    doc.standard(0, 1) = 1.0;
    doc.standard(1, 0) = 1.0;
    doc.dual = RealMatrix(2, 2);
    doc.dual(0, 0) = 0.5;
    const std::string cycle = tmp.file("cycle.json");
    write_matrix_document(cycle, doc);

    CHECK(run("check " + cycle).exit_code == 1); // irreducible but not primitive

    const std::string shifted = tmp.file("shifted.json");
    CHECK(run("shift " + cycle + " --beta 1 --out " + shifted).exit_code == 0);
    const RunResult check = run("check " + shifted);
    CHECK(check.exit_code == 0);
    CHECK(check.out.find("primitive:       true") != std::string::npos);

    // A reducible input cannot be shifted.
    MatrixDocument tri;
    tri.n = 2;
    tri.standard = RealMatrix(2, 2);
    tri.standard(0, 0) = 1.0;
    tri.standard(0, 1) = 1.0;
    tri.standard(1, 1) = 1.0;
    tri.dual = RealMatrix(2, 2);
    const std::string reducible = tmp.file("reducible.json");
    write_matrix_document(reducible, tri);
    CHECK(run("shift " + reducible + " --beta 1 --out " + tmp.file("x.json")).exit_code == 1);
}

TEST_CASE("usage and document errors exit with code 2") {
    TempDir tmp;
    CHECK(run("").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("check " + tmp.file("missing.json")).exit_code == 2);

    const std::string broken = tmp.file("broken.json");
    {
        std::ofstream out(broken);
        out << "{\n  \"n\": 2,\n  oops\n}";
    }
    const RunResult r = run("check " + broken);
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("line") != std::string::npos);

    CHECK(run("gen --n 0 --seed 1 --out " + tmp.file("g.json")).exit_code == 2);
}

TEST_CASE("solve on a non-primitive matrix is a mathematical failure") {
    TempDir tmp;
    MatrixDocument doc;
    doc.n = 2;
    doc.standard = RealMatrix(2, 2);
    doc.standard(0, 1) = 1.0;
    doc.standard(1, 0) = 1.0;
    doc.dual = RealMatrix(2, 2);
    const std::string cycle = tmp.file("cycle.json");
    write_matrix_document(cycle, doc);
    CHECK(run("solve " + cycle).exit_code == 1);
    CHECK(run("direct " + cycle).exit_code == 1);
}
