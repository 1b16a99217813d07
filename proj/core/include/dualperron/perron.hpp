#pragma once

#include <optional>
#include <utility>

#include "dualperron/dual_linalg.hpp"
#include "dualperron/solver_config.hpp"

namespace dualperron {

/// Perron eigenpair of a primitive dual matrix computed by the direct
/// (non-iterative) route: lambda_s and x_s from the real Perron kernel,
/// lambda_d from the left/right eigenvector quotient, x_d from the bordered
/// linear system.
struct PerronResult {
    DualNumber lambda;           ///< lambda_s + lambda_d eps, lambda_s > 0
    DualVector x;                ///< right eigenvector, unit dual 2-norm, x_s > 0
    std::optional<DualVector> y; ///< left eigenvector (when requested)
    double residual_s = 0.0;     ///< ||A_s x_s - lambda_s x_s||
    double residual_d = 0.0;     ///< ||A_s x_d + A_d x_s - lambda_s x_d - lambda_d x_s||
};

/// Compute the Perron eigenpair of a primitive dual matrix.
///
/// lambda_d = y_s^T A_d x_s / y_s^T x_s with y_s scaled so the denominator
/// is one (the quotient is still evaluated as written), and x_d solves
/// (A_s - lambda_s I) x_d = (lambda_d I - A_d) x_s subject to x_s^T x_d = 0,
/// which pins the unique representative with unit dual 2-norm. Both
/// eigen-residual levels are checked against cfg.residual_tol; exceeding it
/// throws ConvergenceError. `want_left` additionally solves the transposed
/// problem and fills `y` with the unit left eigenvector.
PerronResult perron_eigenpair(const DualMatrix& a, const SolverConfig& cfg = {},
                              bool want_left = false);

/// The two eps-levels of the eigen-residual of A x = lambda x:
/// (||A_s x_s - lambda_s x_s||, ||A_s x_d + A_d x_s - lambda_s x_d - lambda_d x_s||).
/// Requires x appreciable.
std::pair<double, double> eigen_residual(const DualMatrix& a, const DualNumber& lambda,
                                         const DualVector& x);

/// Independent finite-difference check of lambda_d:
/// (rho(A_s + t A_d) - rho(A_s)) / t via two real Perron solves.
/// The shifted standard part must still be nonnegative primitive for the
/// chosen t (NotPrimitiveError otherwise).
double lambda_d_fd_oracle(const DualMatrix& a, double t,
                          double kernel_tol = 1e-12, int kernel_max_iter = 100000);

} // namespace dualperron
