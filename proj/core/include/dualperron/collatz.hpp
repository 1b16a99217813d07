#pragma once

#include <utility>
#include <vector>

#include "dualperron/dual_linalg.hpp"
#include "dualperron/solver_config.hpp"

namespace dualperron {

/// One recorded Collatz iteration: the bracket pair, their gap, and the
/// (unit) iterate the brackets were computed from.
struct CollatzStep {
    DualNumber lower;
    DualNumber upper;
    DualNumber gap;
    DualVector iterate;
};

/// Full trace of a Collatz run.
///
/// The lower brackets are nondecreasing, the upper ones nonincreasing, and
/// lower <= upper at every step in the dual order. fitted_rate_s/d are the
/// per-iteration contraction factors of the gap components obtained from a
/// log-linear least-squares fit over the trailing rate window; they are 0
/// when a component leaves too few positive gap values to fit (immediate
/// convergence, or an exactly real problem for the dual component).
struct CollatzTrace {
    std::vector<CollatzStep> steps;
    bool converged = false;
    DualNumber final_lambda;      ///< midpoint of the final bracket pair
    double fitted_rate_s = 0.0;
    double fitted_rate_d = 0.0;
    double eta_theoretical = 0.0; ///< sqrt(sigma) from the spectral gap of A_s

    int iterations() const { return static_cast<int>(steps.size()); }
};

/// Componentwise dual ratios (A x)_i / x_i reduced to their min and max
/// under the dual total order. Every component of x must be appreciable
/// (InvalidInputError otherwise); with the strictly positive iterates the
/// solver produces, the division always takes the unique branch.
std::pair<DualNumber, DualNumber> bracket_step(const DualMatrix& a, const DualVector& x);

/// Collatz bracketing iteration for the Perron eigenpair of a primitive
/// dual matrix, started from a strictly positive real vector.
///
/// Iterates x^{k+1} = (A x^k) / ||A x^k|| under dual normalization, with
/// lower/upper brackets min_i / max_i of (A x^k)_i / x^k_i. Stops when
/// gap_s <= tol_s and |gap_d| <= tol_d, or at max_iter. The recorded
/// iterates are the normalized ones (the start vector is normalized before
/// the first bracket; the brackets are scale-invariant).
CollatzTrace collatz_solve(const DualMatrix& a, const RealVector& x0,
                           const SolverConfig& cfg = {});

/// Same iteration from a genuinely dual start vector (nonzero dual part).
/// The standard part must still be strictly positive. Convergence-rate
/// guarantees only cover real starts; this entry point exists to observe
/// behavior outside that hypothesis.
CollatzTrace collatz_solve_dual_start(const DualMatrix& a, const DualVector& x0,
                                      const SolverConfig& cfg = {});

/// Per-iteration contraction factors exp(slope) of log(gap_s) and
/// log(|gap_d|) versus k, fitted by least squares over the trailing
/// `window` recorded iterations. Gap values below 1e-300 are excluded from
/// the fit of their component. Requires at least `window` iterations whose
/// standard gap part is positive (InvalidInputError); a dual component with
/// fewer than two usable points yields rate 0.
std::pair<double, double> estimate_rate(const CollatzTrace& trace, int window);

} // namespace dualperron
