#include "dualperron/perron.hpp"

#include <cmath>
#include <utility>

#include "dualperron/errors.hpp"
#include "dualperron/real_spectral.hpp"
#include "dualperron/structure.hpp"

namespace dualperron {

namespace {

PerronResult direct_eigenpair(const DualMatrix& a, const SolverConfig& cfg) {
    const std::size_t n = a.size();
    const RealPerron rp = real_perron(a.s, cfg.kernel_tol, cfg.kernel_max_iter);

    // lambda_d = y_s^T A_d x_s / y_s^T x_s; y is scaled so the denominator
    // is one, but the quotient is evaluated as written.
    const RealVector adx = a.d * rp.x;
    const double lambda_d = dot(rp.y, adx) / dot(rp.y, rp.x);

    // (A_s - lambda_s I) x_d = (lambda_d I - A_d) x_s, with x_s^T x_d = 0.
    RealMatrix shifted = a.s;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= rp.rho;
    RealVector rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = lambda_d * rp.x[i] - adx[i];
    RealVector xd = solve_bordered(shifted, rp.x, rhs);

    PerronResult result;
    result.lambda = DualNumber(rp.rho, lambda_d);
    result.x = DualVector(rp.x, std::move(xd));
    auto [rs, rd] = eigen_residual(a, result.lambda, result.x);
    result.residual_s = rs;
    result.residual_d = rd;
    if (rs > cfg.residual_tol || rd > cfg.residual_tol)
        throw ConvergenceError("eigen-residual exceeds the configured tolerance");
    return result;
}

} // namespace

PerronResult perron_eigenpair(const DualMatrix& a, const SolverConfig& cfg, bool want_left) {
    cfg.validate();
    if (!check_primitive(a).primitive)
        throw NotPrimitiveError("Perron eigenpair requires a primitive dual matrix");

    PerronResult result = direct_eigenpair(a, cfg);
    if (want_left) {
        // The left eigenvector of A is the right eigenvector of A^T, which
        // shares the pattern and therefore the primitivity of A.
        result.y = direct_eigenpair(transpose(a), cfg).x;
    }
    return result;
}

std::pair<double, double> eigen_residual(const DualMatrix& a, const DualNumber& lambda,
                                         const DualVector& x) {
    if (!x.appreciable())
        throw InvalidInputError("eigen-residual requires an appreciable eigenvector");
    if (a.size() != x.size())
        throw DimensionError("matrix and vector dimensions do not agree");
    const std::size_t n = a.size();

    const RealVector asxs = a.s * x.s;
    const RealVector asxd = a.s * x.d;
    const RealVector adxs = a.d * x.s;

    double rs = 0.0, rd = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double es = asxs[i] - lambda.s() * x.s[i];
        const double ed = asxd[i] + adxs[i] - lambda.s() * x.d[i] - lambda.d() * x.s[i];
        rs += es * es;
        rd += ed * ed;
    }
    return {std::sqrt(rs), std::sqrt(rd)};
}

double lambda_d_fd_oracle(const DualMatrix& a, double t, double kernel_tol,
                          int kernel_max_iter) {
    if (!(t > 0.0))
        throw InvalidInputError("finite-difference step must be positive");
    if (!check_primitive(a).primitive)
        throw NotPrimitiveError("finite-difference oracle requires a primitive dual matrix");

    RealMatrix shifted = a.s;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) shifted(i, j) += t * a.d(i, j);
    DualMatrix probe = DualMatrix::from_real(shifted);
    if (!check_primitive(probe).primitive)
        throw NotPrimitiveError("shifted standard part is not primitive for this step");

    const double rho_base = real_perron(a.s, kernel_tol, kernel_max_iter).rho;
    const double rho_shift = real_perron(shifted, kernel_tol, kernel_max_iter).rho;
    return (rho_shift - rho_base) / t;
}

} // namespace dualperron
