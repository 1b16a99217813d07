#pragma once

#include <cstdint>
#include <vector>

#include "dualperron/dual_linalg.hpp"
#include "dualperron/dual_number.hpp"

namespace dualperron {

/// Outcome of the power-decay experiment: does A^k tend to the zero matrix?
struct DecayReport {
    enum class Verdict { converged, diverged, inconclusive };

    double rho_s = 0.0;          ///< spectral radius estimate of A_s
    std::vector<int> k_values;   ///< recorded exponents (1..k at stop)
    std::vector<double> s_maxabs;///< max |entry| of (A^k)_s per exponent
    std::vector<double> d_maxabs;///< max |entry| of (A^k)_d per exponent
    Verdict verdict = Verdict::inconclusive;
};

/// Compute A, A^2, ..., A^{k_max} by repeated dual multiplication and record
/// the entrywise max-abs of both parts at every exponent.
///
/// converged:  both trailing max-abs values < threshold and rho(A_s) < 1.
/// diverged:   either part exceeds 1/threshold (checked as the powers grow,
///             so overflow stops the run early with this verdict).
/// inconclusive otherwise.
DecayReport power_decay(const DualMatrix& a, int k_max, double threshold = 1e-10);

/// Brute-force check of the bracket-perturbation bound: the spreads of the
/// standard and dual parts of lambda*(gamma + t1 h + t2 h eps)/(gamma + t3 h
/// + t4 h eps) with h = eta^k, over a grid of (t1,t2,t3,t4) in [-L,L]^4,
/// against the bound 8 L (2 lambda_s + |lambda_d|) eta^k / gamma.
struct LemmaCheckResult {
    double observed_s = 0.0; ///< max - min of the standard parts over the grid
    double observed_d = 0.0; ///< max - min of the dual parts over the grid
    double bound = 0.0;
    bool pass = false;
};

/// Requires lambda_s > 0 and k large enough that gamma + t3 eta^k > gamma/2
/// for every |t3| <= L, i.e. L eta^k < gamma/2 (InvalidInputError otherwise).
/// The grid has grid_m points per axis, endpoints included.
LemmaCheckResult lemma_bound_check(const DualNumber& lambda, double gamma, double L,
                                   double eta, int k, int grid_m);

enum class DualMode { nonnegative, signed_, zero };

/// Seeded generator of primitive dual matrices.
///
/// The standard part is a directed Hamiltonian cycle plus Bernoulli(density)
/// extra entries, all with values uniform in [0.1, 1], plus one positive
/// diagonal entry; cycle + positive diagonal makes the result primitive by
/// construction (still verified before returning). The dual part has entries
/// uniform in [0,1] (nonnegative), [-1,1] (signed_), or is zero. Output is
/// deterministic for a fixed seed.
DualMatrix generate_primitive(std::size_t n, double density, DualMode dual_mode,
                              std::uint64_t seed);

} // namespace dualperron
