#include "dualperron/experiments.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dualperron/errors.hpp"
#include "dualperron/real_spectral.hpp"
#include "dualperron/structure.hpp"

namespace dualperron {

DecayReport power_decay(const DualMatrix& a, int k_max, double threshold) {
    if (k_max < 1)
        throw InvalidInputError("k_max must be at least 1");
    if (!(threshold > 0.0))
        throw InvalidInputError("threshold must be positive");

    DecayReport report;
    report.rho_s = spectral_radius_gelfand(a.s);

    const double blowup = 1.0 / threshold;
    bool blew_up = false;

    DualMatrix power = a;
    for (int k = 1; k <= k_max; ++k) {
        if (k > 1) {
            try {
                power = matmul(power, a);
            } catch (const OverflowError&) {
                blew_up = true;
                break;
            }
        }
        const auto [ms, md] = entrywise_max_abs(power);
        report.k_values.push_back(k);
        report.s_maxabs.push_back(ms);
        report.d_maxabs.push_back(md);
        if (ms > blowup || md > blowup) {
            blew_up = true;
            break;
        }
    }

    if (blew_up) {
        report.verdict = DecayReport::Verdict::diverged;
    } else if (report.s_maxabs.back() < threshold && report.d_maxabs.back() < threshold &&
               report.rho_s < 1.0) {
        report.verdict = DecayReport::Verdict::converged;
    } else {
        report.verdict = DecayReport::Verdict::inconclusive;
    }
    return report;
}

LemmaCheckResult lemma_bound_check(const DualNumber& lambda, double gamma, double L,
                                   double eta, int k, int grid_m) {
    if (!(lambda.s() > 0.0))
        throw InvalidInputError("lambda must have a positive standard part");
    if (!(gamma > 0.0) || !(L > 0.0))
        throw InvalidInputError("gamma and L must be positive");
    if (!(eta > 0.0) || !(eta < 1.0))
        throw InvalidInputError("eta must lie in (0, 1)");
    if (k < 1 || grid_m < 2)
        throw InvalidInputError("k must be >= 1 and the grid needs at least 2 points per axis");

    const double h = std::pow(eta, k);
    // gamma + t3 h > gamma/2 for every |t3| <= L.
    if (!(L * h < gamma / 2.0))
        throw InvalidInputError("k too small: gamma + t3 eta^k > gamma/2 is not guaranteed");

    std::vector<double> grid(static_cast<std::size_t>(grid_m));
    for (int i = 0; i < grid_m; ++i)
        grid[static_cast<std::size_t>(i)] =
            -L + 2.0 * L * static_cast<double>(i) / static_cast<double>(grid_m - 1);

    double min_s = 0.0, max_s = 0.0, min_d = 0.0, max_d = 0.0;
    bool seen = false;
    for (double t1 : grid)
        for (double t2 : grid)
            for (double t3 : grid)
                for (double t4 : grid) {
                    const DualNumber num(gamma + t1 * h, t2 * h);
                    const DualNumber den(gamma + t3 * h, t4 * h);
                    const DualNumber value = lambda * (num / den);
                    if (!seen) {
                        min_s = max_s = value.s();
                        min_d = max_d = value.d();
                        seen = true;
                    } else {
                        min_s = std::min(min_s, value.s());
                        max_s = std::max(max_s, value.s());
                        min_d = std::min(min_d, value.d());
                        max_d = std::max(max_d, value.d());
                    }
                }

    LemmaCheckResult result;
    result.observed_s = max_s - min_s;
    result.observed_d = max_d - min_d;
    result.bound = 8.0 * L * (2.0 * lambda.s() + std::abs(lambda.d())) * h / gamma;
    result.pass = result.observed_s <= result.bound && result.observed_d <= result.bound;
    return result;
}

namespace {

// Uniform double in [0, 1) from the top 53 bits of the engine output; kept
// explicit so streams are reproducible independent of the standard library's
// distribution implementations.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double next_uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * next_unit(rng);
}

} // namespace

DualMatrix generate_primitive(std::size_t n, double density, DualMode dual_mode,
                              std::uint64_t seed) {
    if (n < 1)
        throw InvalidInputError("matrix dimension must be at least 1");
    if (!(density > 0.0) || density > 1.0)
        throw InvalidInputError("density must lie in (0, 1]");

    std::mt19937_64 rng(seed);
    RealMatrix standard(n, n);

    // Directed Hamiltonian cycle i -> i+1 (mod n) keeps the digraph strongly
    // connected for every draw.
    for (std::size_t i = 0; i < n; ++i)
        standard(i, (i + 1) % n) = next_uniform(rng, 0.1, 1.0);

    // Bernoulli(density) extras over the remaining cells, row-major order.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (standard(i, j) != 0.0) continue;
            if (next_unit(rng) < density) standard(i, j) = next_uniform(rng, 0.1, 1.0);
        }

    // One positive diagonal entry breaks periodicity: cycle + loop is
    // primitive.
    const std::size_t diag = static_cast<std::size_t>(rng() % n);
    if (standard(diag, diag) == 0.0) standard(diag, diag) = next_uniform(rng, 0.1, 1.0);

    RealMatrix dual(n, n);
    switch (dual_mode) {
    case DualMode::nonnegative:
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) dual(i, j) = next_unit(rng);
        break;
    case DualMode::signed_:
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) dual(i, j) = next_uniform(rng, -1.0, 1.0);
        break;
    case DualMode::zero:
        break;
    }

    DualMatrix result(std::move(standard), std::move(dual));
    if (!check_primitive(result).primitive)
        throw std::logic_error("generator produced a non-primitive matrix");
    return result;
}

} // namespace dualperron
