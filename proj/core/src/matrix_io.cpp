#include "dualperron/matrix_io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "dualperron/errors.hpp"

namespace dualperron {

namespace {

using nlohmann::json;

std::string line_anchor(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    std::ostringstream os;
    os << "line " << line << ", column " << col;
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(path + ": cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void atomic_write(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw ParseError(path + ": cannot open for writing");
        out << content;
        out.flush();
        if (!out)
            throw ParseError(path + ": write failed");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw ParseError(path + ": rename failed: " + ec.message());
    }
}

// 17 significant digits round-trip any double exactly. Negative zero is
// spelled with a decimal point; a bare "-0" would parse as the integer zero
// and drop the sign bit.
void append_real(std::string& out, double v) {
    if (v == 0.0 && std::signbit(v)) {
        out += "-0.0";
        return;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

RealMatrix parse_square_array(const json& arr, std::size_t n, const char* key,
                              const std::string& origin) {
    if (!arr.is_array() || arr.size() != n)
        throw ParseError(origin + ": '" + key + "' must be an array of " + std::to_string(n) +
                         " rows");
    RealMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = arr[i];
        if (!row.is_array() || row.size() != n)
            throw ParseError(origin + ": '" + key + "' row " + std::to_string(i) + " must hold " +
                             std::to_string(n) + " numbers");
        for (std::size_t j = 0; j < n; ++j) {
            const json& cell = row[j];
            if (!cell.is_number())
                throw ParseError(origin + ": '" + key + "' entry (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") is not a number");
            const double v = cell.get<double>();
            if (!std::isfinite(v))
                throw ParseError(origin + ": '" + key + "' entry (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") is not finite");
            m(i, j) = v;
        }
    }
    return m;
}

} // namespace

MatrixDocument MatrixDocument::from_dual_matrix(const DualMatrix& a) {
    MatrixDocument doc;
    doc.n = a.size();
    doc.standard = a.s;
    doc.dual = a.d;
    return doc;
}

MatrixDocument parse_matrix_document(const std::string& text, const std::string& origin) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(origin + ": parse error at " + line_anchor(text, e.byte) + ": " +
                         e.what());
    }
    if (!root.is_object())
        throw ParseError(origin + ": document root must be a JSON object");
    if (!root.contains("n") || !root["n"].is_number_integer())
        throw ParseError(origin + ": missing integer key 'n'");
    const long long n_raw = root["n"].get<long long>();
    if (n_raw < 1)
        throw ParseError(origin + ": 'n' must be at least 1");
    const std::size_t n = static_cast<std::size_t>(n_raw);

    if (!root.contains("standard"))
        throw ParseError(origin + ": missing key 'standard'");
    if (!root.contains("dual"))
        throw ParseError(origin + ": missing key 'dual'");

    MatrixDocument doc;
    doc.n = n;
    doc.standard = parse_square_array(root["standard"], n, "standard", origin);
    doc.dual = parse_square_array(root["dual"], n, "dual", origin);

    if (root.contains("metadata")) {
        const json& meta = root["metadata"];
        if (!meta.is_object())
            throw ParseError(origin + ": 'metadata' must be an object");
        if (meta.contains("name")) doc.name = meta["name"].get<std::string>();
        if (meta.contains("seed")) doc.seed = meta["seed"].get<std::uint64_t>();
        if (meta.contains("generator")) doc.generator = meta["generator"].get<std::string>();
    }
    return doc;
}

MatrixDocument read_matrix_document(const std::string& path) {
    return parse_matrix_document(read_file(path), path);
}

std::string format_matrix_document(const MatrixDocument& doc) {
    if (doc.standard.rows() != doc.n || doc.standard.cols() != doc.n ||
        doc.dual.rows() != doc.n || doc.dual.cols() != doc.n)
        throw ParseError("document arrays do not match 'n'");
    if (!all_finite(doc.standard) || !all_finite(doc.dual))
        throw OverflowError("document has non-finite entries");

    std::string out;
    out += "{\n  \"n\": " + std::to_string(doc.n) + ",\n";
    const auto emit_matrix = [&](const char* key, const RealMatrix& m) {
        out += "  \"";
        out += key;
        out += "\": [\n";
        for (std::size_t i = 0; i < doc.n; ++i) {
            out += "    [";
            for (std::size_t j = 0; j < doc.n; ++j) {
                if (j) out += ", ";
                append_real(out, m(i, j));
            }
            out += i + 1 < doc.n ? "],\n" : "]\n";
        }
        out += "  ]";
    };
    emit_matrix("standard", doc.standard);
    out += ",\n";
    emit_matrix("dual", doc.dual);

    if (doc.name || doc.seed || doc.generator) {
        out += ",\n  \"metadata\": {";
        bool first = true;
        const auto sep = [&] {
            out += first ? "\n    " : ",\n    ";
            first = false;
        };
        if (doc.name) {
            sep();
            out += "\"name\": " + json(*doc.name).dump();
        }
        if (doc.seed) {
            sep();
            char buf[32];
            std::snprintf(buf, sizeof buf, "%" PRIu64, *doc.seed);
            out += "\"seed\": ";
            out += buf;
        }
        if (doc.generator) {
            sep();
            out += "\"generator\": " + json(*doc.generator).dump();
        }
        out += "\n  }";
    }
    out += "\n}\n";
    return out;
}

void write_matrix_document(const std::string& path, const MatrixDocument& doc) {
    atomic_write(path, format_matrix_document(doc));
}

RealVector read_vector_file(const std::string& path) {
    const std::string text = read_file(path);
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": parse error at " + line_anchor(text, e.byte) + ": " + e.what());
    }
    if (!root.is_array() || root.empty())
        throw ParseError(path + ": expected a non-empty JSON array of numbers");
    RealVector v;
    v.reserve(root.size());
    for (const json& cell : root) {
        if (!cell.is_number())
            throw ParseError(path + ": vector entries must be numbers");
        v.push_back(cell.get<double>());
    }
    return v;
}

void write_trace_csv(const std::string& path, const CollatzTrace& trace) {
    std::string out = "k,lower_s,lower_d,upper_s,upper_d,gap_s,gap_d\n";
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const CollatzStep& step = trace.steps[k];
        out += std::to_string(k);
        for (double v : {step.lower.s(), step.lower.d(), step.upper.s(), step.upper.d(),
                         step.gap.s(), step.gap.d()}) {
            out += ',';
            append_real(out, v);
        }
        out += '\n';
    }
    atomic_write(path, out);
}

} // namespace dualperron
