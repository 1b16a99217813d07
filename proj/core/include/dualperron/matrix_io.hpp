#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dualperron/collatz.hpp"
#include "dualperron/dual_linalg.hpp"

namespace dualperron {

/// On-disk form of a dual matrix: a single JSON object with keys
/// n / standard / dual (row-major nested arrays) and an optional metadata
/// object (name, seed, generator). Real values are written with 17
/// significant digits, so write-then-read is bit-identical.
struct MatrixDocument {
    std::size_t n = 0;
    RealMatrix standard;
    RealMatrix dual;
    std::optional<std::string> name;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> generator;

    DualMatrix to_dual_matrix() const { return DualMatrix(standard, dual); }

    static MatrixDocument from_dual_matrix(const DualMatrix& a);
};

/// Parse a document from a file. Syntax and schema problems throw ParseError
/// with a line/column anchor where one is available.
MatrixDocument read_matrix_document(const std::string& path);

/// Parse a document from an in-memory JSON string.
MatrixDocument parse_matrix_document(const std::string& text, const std::string& origin = "<string>");

/// Serialize a document (17 significant digits for real values).
std::string format_matrix_document(const MatrixDocument& doc);

/// Write atomically: to a temporary file in the same directory, then rename.
void write_matrix_document(const std::string& path, const MatrixDocument& doc);

/// Read a JSON array of numbers (used for --x0 vector files).
RealVector read_vector_file(const std::string& path);

/// Trace CSV with the fixed header
/// k,lower_s,lower_d,upper_s,upper_d,gap_s,gap_d. Written atomically.
void write_trace_csv(const std::string& path, const CollatzTrace& trace);

} // namespace dualperron
