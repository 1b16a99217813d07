#include "dualperron/structure.hpp"

#include <vector>

#include "dualperron/errors.hpp"

namespace dualperron {

namespace {

// Zero pattern of the standard part: edge i->j iff A_s[i][j] > 0.
// Positivity is exact; entries are inputs, not computed quantities.
std::vector<std::vector<bool>> positivity_pattern(const RealMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::vector<bool>> p(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p[i][j] = m(i, j) > 0.0;
    return p;
}

// Iterative DFS over an adjacency pattern; marks everything reachable from
// `start` (transposed edges when `reversed`).
std::vector<bool> reachable(const std::vector<std::vector<bool>>& adj, std::size_t start,
                            bool reversed) {
    const std::size_t n = adj.size();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < n; ++w) {
            const bool edge = reversed ? adj[w][v] : adj[v][w];
            if (edge && !seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

bool strongly_connected(const std::vector<std::vector<bool>>& adj) {
    const auto fwd = reachable(adj, 0, false);
    for (bool b : fwd)
        if (!b) return false;
    const auto bwd = reachable(adj, 0, true);
    for (bool b : bwd)
        if (!b) return false;
    return true;
}

std::vector<std::vector<bool>> bool_matmul(const std::vector<std::vector<bool>>& a,
                                           const std::vector<std::vector<bool>>& b) {
    const std::size_t n = a.size();
    std::vector<std::vector<bool>> c(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (b[k][j]) c[i][j] = true;
    return c;
}

bool all_positive(const std::vector<std::vector<bool>>& p) {
    for (const auto& row : p)
        for (bool b : row)
            if (!b) return false;
    return true;
}

} // namespace

bool check_nonnegative(const DualMatrix& a) {
    for (double v : a.s.data())
        if (v < 0.0) return false;
    return true;
}

bool check_irreducible(const DualMatrix& a) {
    if (!check_nonnegative(a))
        throw InvalidInputError("irreducibility test requires a nonnegative standard part");
    const std::size_t n = a.size();
    if (n == 1) return a.s(0, 0) > 0.0;
    return strongly_connected(positivity_pattern(a.s));
}

StructureReport check_primitive(const DualMatrix& a) {
    const std::size_t n = a.size();
    StructureReport report;
    report.wielandt_exponent_bound = static_cast<int>((n - 1) * (n - 1) + 1);
    report.nonnegative = check_nonnegative(a);
    if (!report.nonnegative) return report;
    report.irreducible = check_irreducible(a);

    // Boolean semiring powers avoid numeric overflow at the Wielandt bound.
    const auto base = positivity_pattern(a.s);
    auto power = base;
    for (int k = 1; k <= report.wielandt_exponent_bound; ++k) {
        if (k > 1) power = bool_matmul(power, base);
        if (all_positive(power)) {
            report.primitive = true;
            report.witness_k = k;
            break;
        }
    }
    return report;
}

DualMatrix shift_to_primitive(const DualMatrix& a, double beta) {
    if (!(beta > 0.0))
        throw InvalidInputError("shift parameter beta must be positive");
    if (!check_nonnegative(a) || !check_irreducible(a))
        throw NotIrreducibleError("shift requires an irreducible nonnegative matrix");
    RealMatrix shifted = a.s;
    for (std::size_t i = 0; i < a.size(); ++i) shifted(i, i) += beta;
    return DualMatrix(std::move(shifted), a.d);
}

} // namespace dualperron
