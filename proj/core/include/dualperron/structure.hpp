#pragma once

#include <optional>

#include "dualperron/dual_linalg.hpp"

namespace dualperron {

/// Classification of the standard part of a dual matrix.
///
/// primitive implies irreducible implies nonnegative, and witness_k is
/// present exactly when the matrix is primitive.
struct StructureReport {
    bool nonnegative = false;
    bool irreducible = false;
    bool primitive = false;
    int wielandt_exponent_bound = 0; ///< (n-1)^2 + 1
    std::optional<int> witness_k;    ///< smallest k with pattern(A_s^k) all-positive
};

/// True iff every entry of A_s is >= 0 (the dual part is unconstrained).
bool check_nonnegative(const DualMatrix& a);

/// True iff the digraph with an edge i->j whenever A_s[i][j] > 0 is strongly
/// connected. The 1x1 matrix counts as irreducible only when its entry is
/// positive. Requires a nonnegative standard part (InvalidInputError).
bool check_irreducible(const DualMatrix& a);

/// Full report. Primitivity is decided by boolean reachability powers of the
/// zero pattern of A_s up to the Wielandt bound (n-1)^2 + 1; the smallest
/// exponent with an all-positive pattern is recorded.
StructureReport check_primitive(const DualMatrix& a);

/// (A_s + beta I) + A_d eps. Requires A irreducible nonnegative and
/// beta > 0; the result is primitive (irreducible with positive diagonal).
DualMatrix shift_to_primitive(const DualMatrix& a, double beta);

} // namespace dualperron
