#include "dualperron/collatz.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "dualperron/errors.hpp"
#include "dualperron/real_spectral.hpp"
#include "dualperron/structure.hpp"

namespace dualperron {

std::pair<DualNumber, DualNumber> bracket_step(const DualMatrix& a, const DualVector& x) {
    if (a.size() != x.size())
        throw DimensionError("matrix and vector dimensions do not agree");
    const DualVector ax = matvec(a, x);

    DualNumber lower, upper;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x.s[i] == 0.0)
            throw InvalidInputError("bracket ratio needs appreciable iterate components");
        const DualNumber ratio = divide(ax[i], x[i]).value;
        if (i == 0) {
            lower = upper = ratio;
        } else {
            if (ratio < lower) lower = ratio;
            if (ratio > upper) upper = ratio;
        }
    }
    return {lower, upper};
}

namespace {

CollatzTrace run_collatz(const DualMatrix& a, DualVector x, const SolverConfig& cfg) {
    cfg.validate();
    if (!check_primitive(a).primitive)
        throw NotPrimitiveError("Collatz iteration requires a primitive dual matrix");

    CollatzTrace trace;
    try {
        const RealPerron rp = real_perron(a.s, cfg.kernel_tol, cfg.kernel_max_iter);
        trace.eta_theoretical = second_modulus(a.s, rp, cfg.kernel_tol).eta;
    } catch (const ConvergenceError&) {
        // The rate estimate is auxiliary; the iteration can still run.
        trace.eta_theoretical = std::numeric_limits<double>::quiet_NaN();
    }

    x = normalize(x);
    for (int k = 0; k < cfg.max_iter; ++k) {
        auto [lower, upper] = bracket_step(a, x);
        if (lower > upper)
            throw Error("bracket inversion: lower exceeded upper");
        const DualNumber gap = upper - lower;
        trace.steps.push_back({lower, upper, gap, x});

        if (gap.s() <= cfg.tol_s && std::abs(gap.d()) <= cfg.tol_d) {
            trace.converged = true;
            break;
        }
        x = normalize(matvec(a, x));
    }

    const CollatzStep& last = trace.steps.back();
    trace.final_lambda = DualNumber(0.5 * (last.lower.s() + last.upper.s()),
                                    0.5 * (last.lower.d() + last.upper.d()));
    try {
        auto [rs, rd] = estimate_rate(trace, cfg.rate_window);
        trace.fitted_rate_s = rs;
        trace.fitted_rate_d = rd;
    } catch (const InvalidInputError&) {
        // Converged before a full window of positive gaps accumulated.
        trace.fitted_rate_s = 0.0;
        trace.fitted_rate_d = 0.0;
    }
    return trace;
}

} // namespace

CollatzTrace collatz_solve(const DualMatrix& a, const RealVector& x0, const SolverConfig& cfg) {
    if (x0.empty())
        throw InvalidInputError("start vector is empty");
    for (double v : x0)
        if (!(v > 0.0))
            throw InvalidInputError("start vector must be strictly positive");
    return run_collatz(a, DualVector::from_real(x0), cfg);
}

CollatzTrace collatz_solve_dual_start(const DualMatrix& a, const DualVector& x0,
                                      const SolverConfig& cfg) {
    for (double v : x0.s)
        if (!(v > 0.0))
            throw InvalidInputError("start vector needs a strictly positive standard part");
    return run_collatz(a, x0, cfg);
}

namespace {

// Least-squares slope of log(values) against the iteration index.
// Returns the contraction factor exp(slope), or nullopt with fewer than
// two usable points.
std::pair<bool, double> log_slope(const std::vector<std::pair<int, double>>& points) {
    if (points.size() < 2) return {false, 0.0};
    double sk = 0.0, sl = 0.0, skk = 0.0, skl = 0.0;
    for (const auto& [k, v] : points) {
        const double lk = static_cast<double>(k);
        const double lv = std::log(v);
        sk += lk;
        sl += lv;
        skk += lk * lk;
        skl += lk * lv;
    }
    const double m = static_cast<double>(points.size());
    const double denom = m * skk - sk * sk;
    if (denom == 0.0) return {false, 0.0};
    const double slope = (m * skl - sk * sl) / denom;
    return {true, std::exp(slope)};
}

} // namespace

std::pair<double, double> estimate_rate(const CollatzTrace& trace, int window) {
    if (window < 2)
        throw InvalidInputError("rate window must be at least 2");

    int positive_s = 0;
    for (const CollatzStep& step : trace.steps)
        if (step.gap.s() > 0.0) ++positive_s;
    if (positive_s < window)
        throw InvalidInputError("not enough iterations with positive gap for the rate fit");

    const int total = static_cast<int>(trace.steps.size());
    const int first = total - window;

    std::vector<std::pair<int, double>> pts_s, pts_d;
    for (int k = first; k < total; ++k) {
        const DualNumber& gap = trace.steps[static_cast<std::size_t>(k)].gap;
        if (gap.s() >= 1e-300) pts_s.emplace_back(k, gap.s());
        if (std::abs(gap.d()) >= 1e-300) pts_d.emplace_back(k, std::abs(gap.d()));
    }

    const auto [ok_s, rate_s] = log_slope(pts_s);
    if (!ok_s)
        throw InvalidInputError("trailing window has too few usable standard gaps");
    const auto [ok_d, rate_d] = log_slope(pts_d);
    return {rate_s, ok_d ? rate_d : 0.0};
}

} // namespace dualperron
