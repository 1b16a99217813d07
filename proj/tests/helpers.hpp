#pragma once

// Shared test utilities: seeded generators and tolerant comparisons.

#include <cmath>
#include <random>

#include "dualperron/dual_linalg.hpp"
#include "dualperron/dual_number.hpp"

namespace testutil {

using dualperron::DualMatrix;
using dualperron::DualNumber;
using dualperron::DualVector;
using dualperron::RealMatrix;
using dualperron::RealVector;

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

inline DualNumber random_dual(std::mt19937_64& rng, double lo = -2.0, double hi = 2.0) {
    return DualNumber(uniform(rng, lo, hi), uniform(rng, lo, hi));
}

/// Random dual number whose standard part is bounded away from zero.
inline DualNumber random_appreciable(std::mt19937_64& rng, double min_abs_s = 0.01) {
    double s = uniform(rng, -2.0, 2.0);
    if (std::abs(s) < min_abs_s) s = s < 0.0 ? s - min_abs_s : s + min_abs_s;
    return DualNumber(s, uniform(rng, -2.0, 2.0));
}

/// |a - b| <= tol * max(1, |a|, |b|).
inline bool close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline bool dual_close(const DualNumber& a, const DualNumber& b, double tol) {
    return close(a.s(), b.s(), tol) && close(a.d(), b.d(), tol);
}

/// a <= b in the dual order, up to `tol` per part: accepted when some a'
/// with |a'.s - a.s| <= tol and |a'.d - a.d| <= tol satisfies a' <= b.
/// Shrinking the standard part below b.s settles every case except the
/// boundary where only an exact tie is reachable; there the dual parts
/// decide, with the same slack.
inline bool dual_leq_tol(const DualNumber& a, const DualNumber& b, double tol) {
    if (a.s() - tol < b.s()) return true;
    if (a.s() - tol > b.s()) return false;
    return a.d() - tol <= b.d();
}

inline RealMatrix random_real_matrix(std::mt19937_64& rng, std::size_t n, double lo = -1.0,
                                     double hi = 1.0) {
    RealMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = uniform(rng, lo, hi);
    return m;
}

inline DualMatrix random_dual_matrix(std::mt19937_64& rng, std::size_t n, double lo = -1.0,
                                     double hi = 1.0) {
    return DualMatrix(random_real_matrix(rng, n, lo, hi), random_real_matrix(rng, n, lo, hi));
}

inline DualVector random_dual_vector(std::mt19937_64& rng, std::size_t n, double lo = -1.0,
                                     double hi = 1.0) {
    RealVector s(n), d(n);
    for (std::size_t i = 0; i < n; ++i) {
        s[i] = uniform(rng, lo, hi);
        d[i] = uniform(rng, lo, hi);
    }
    return DualVector(std::move(s), std::move(d));
}

inline RealMatrix make_matrix(std::initializer_list<std::initializer_list<double>> rows) {
    const std::size_t n = rows.size();
    RealMatrix m(n, rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

} // namespace testutil
