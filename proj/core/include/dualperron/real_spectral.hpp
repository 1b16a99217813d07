#pragma once

#include "dualperron/real_matrix.hpp"

namespace dualperron {

/// Perron eigendata of a primitive real matrix.
struct RealPerron {
    double rho = 0.0;     ///< Perron root, rho(M) > 0
    RealVector x;         ///< right eigenvector, unit 2-norm, strictly positive
    RealVector y;         ///< left eigenvector, strictly positive, y^T x = 1
    int iterations = 0;   ///< power-iteration steps spent (right + left pass)
    double residual = 0.0;///< ||M x - rho x|| at convergence
};

/// Relative second-largest eigenvalue modulus of a primitive matrix.
struct SpectralGap {
    double sigma = 0.0; ///< max |lambda_i| / rho over non-Perron eigenvalues
    double eta = 0.0;   ///< sqrt(sigma)
};

/// Perron eigenpair by power iteration from the all-ones vector.
///
/// Stops when both the successive Rayleigh-quotient change and the residual
/// ||M x - rho x|| drop to tol or below; the left eigenvector comes from the
/// same iteration on M^T and is rescaled so y^T x = 1. The caller guarantees
/// that M is primitive; non-convergence within max_iter (a sign of a
/// near-imprimitive input) throws ConvergenceError.
RealPerron real_perron(const RealMatrix& m, double tol = 1e-12, int max_iter = 100000);

/// Spectral radius estimate by the Gelfand formula with repeated squaring,
/// rho(M) ~ ||M^(2^m)||_F^(1/2^m), iterated until successive estimates agree
/// within relative tol or m = max_squarings. Works for any real matrix
/// (complex or negative eigenvalues included); returns 0 for the zero matrix.
double spectral_radius_gelfand(const RealMatrix& m, double tol = 1e-12, int max_squarings = 40);

/// sigma = rho(B)/rho with B = M - rho x y^T the deflation of the Perron
/// pair, and eta = sqrt(sigma). Returns sigma = 0 when the deflated matrix
/// vanishes (rank-one M).
SpectralGap second_modulus(const RealMatrix& m, const RealPerron& perron, double tol = 1e-12);

/// Solve M v = b subject to x^T v = 0 through the bordered system
///   [ M  x ] [v]   [b]
///   [ x^T 0 ] [t] = [0],
/// which is nonsingular exactly when M has rank n-1 with null vector x.
/// Throws SingularError otherwise (the Perron root would not be simple).
RealVector solve_bordered(const RealMatrix& m, const RealVector& x, const RealVector& b);

} // namespace dualperron
