#include "dualperron/real_spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dualperron/errors.hpp"

namespace dualperron {

namespace {

struct PowerResult {
    double rho;
    RealVector x;
    int iterations;
    double residual;
};

// One-sided power iteration from the all-ones vector, normalized each step.
// Converged when both the Rayleigh-quotient change and the residual
// ||M x - rho x|| are at or below tol.
PowerResult power_iterate(const RealMatrix& m, double tol, int max_iter) {
    const std::size_t n = m.rows();
    RealVector x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    double rho_prev = std::numeric_limits<double>::quiet_NaN();

    for (int it = 1; it <= max_iter; ++it) {
        RealVector z = m * x;
        const double rho = dot(x, z); // Rayleigh quotient, x is unit

        double res_sq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = z[i] - rho * x[i];
            res_sq += r * r;
        }
        const double residual = std::sqrt(res_sq);

        if (std::isfinite(rho_prev) && std::abs(rho - rho_prev) <= tol && residual <= tol)
            return {rho, x, it, residual};
        rho_prev = rho;

        const double nz = norm2(z);
        if (!(nz > 0.0))
            throw ConvergenceError("power iteration collapsed to the zero vector");
        for (std::size_t i = 0; i < n; ++i) x[i] = z[i] / nz;
    }
    throw ConvergenceError("power iteration did not converge; input may be near-imprimitive");
}

// Perron vectors are sign-ambiguous only through the iteration start; a
// positive start on a primitive matrix keeps them positive, but flip
// defensively before asserting positivity.
void make_positive(RealVector& v) {
    double mx = 0.0;
    for (double e : v) mx = std::abs(e) > std::abs(mx) ? e : mx;
    if (mx < 0.0)
        for (double& e : v) e = -e;
    for (double e : v)
        if (!(e > 0.0))
            throw ConvergenceError("Perron vector has a nonpositive entry; input may not be primitive");
}

} // namespace

RealPerron real_perron(const RealMatrix& m, double tol, int max_iter) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw DimensionError("Perron kernel needs a square matrix");
    if (!(tol > 0.0))
        throw InvalidInputError("tolerance must be positive");

    PowerResult right = power_iterate(m, tol, max_iter);
    PowerResult left = power_iterate(transpose(m), tol, max_iter);

    RealPerron result;
    result.rho = right.rho;
    result.x = std::move(right.x);
    result.y = std::move(left.x);
    result.iterations = right.iterations + left.iterations;
    result.residual = right.residual;

    make_positive(result.x);
    make_positive(result.y);
    const double scale = dot(result.y, result.x);
    for (double& e : result.y) e /= scale;
    return result;
}

double spectral_radius_gelfand(const RealMatrix& m, double tol, int max_squarings) {
    if (m.rows() != m.cols())
        throw DimensionError("spectral radius needs a square matrix");

    // Track M^(2^k) as scale * S with ||S||_F = 1, keeping log(scale) to
    // dodge overflow/underflow across the repeated squarings.
    double norm0 = frobenius_norm(m);
    if (norm0 == 0.0) return 0.0;
    RealMatrix s = (1.0 / norm0) * m;
    double log_scale = std::log(norm0);
    double estimate = norm0; // ||M||_F, the k = 0 estimate

    for (int k = 1; k <= max_squarings; ++k) {
        s = s * s;
        const double ns = frobenius_norm(s);
        if (ns == 0.0) return 0.0; // nilpotent
        log_scale = 2.0 * log_scale + std::log(ns);
        s = (1.0 / ns) * s;
        const double next = std::exp(log_scale / std::exp2(k));
        if (std::abs(next - estimate) <= tol * std::max(next, 1e-300)) {
            return next;
        }
        estimate = next;
    }
    return estimate;
}

SpectralGap second_modulus(const RealMatrix& m, const RealPerron& perron, double tol) {
    const std::size_t n = m.rows();
    RealMatrix b = m;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            b(i, j) -= perron.rho * perron.x[i] * perron.y[j];

    SpectralGap gap;
    // The deflated matrix of a rank-one input is zero up to rounding.
    if (frobenius_norm(b) <= 1e-14 * std::max(1.0, frobenius_norm(m))) {
        gap.sigma = 0.0;
        gap.eta = 0.0;
        return gap;
    }
    gap.sigma = spectral_radius_gelfand(b, tol) / perron.rho;
    gap.sigma = std::max(gap.sigma, 0.0);
    gap.eta = std::sqrt(gap.sigma);
    return gap;
}

RealVector solve_bordered(const RealMatrix& m, const RealVector& x, const RealVector& b) {
    const std::size_t n = m.rows();
    if (m.cols() != n || x.size() != n || b.size() != n)
        throw DimensionError("bordered system dimensions do not agree");

    RealMatrix bordered(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) bordered(i, j) = m(i, j);
        bordered(i, n) = x[i];
        bordered(n, i) = x[i];
    }
    RealVector rhs(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = b[i];

    RealVector solution;
    try {
        solution = gaussian_solve(std::move(bordered), std::move(rhs));
    } catch (const SingularError&) {
        throw SingularError(
            "bordered system is singular: the Perron root is not simple");
    }
    solution.resize(n);
    return solution;
}

} // namespace dualperron
