#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dualperron/experiments.hpp"
#include "dualperron/real_spectral.hpp"
#include "helpers.hpp"

using namespace dualperron;
using testutil::make_matrix;
using testutil::uniform;

namespace {

const double kGolden = (1.0 + std::sqrt(5.0)) / 2.0;

// Larger-modulus / smaller-modulus eigenvalue ratio for a nonnegative 2x2
// matrix from the characteristic polynomial (the discriminant is
// (a-d)^2 + 4bc >= 0, so both roots are real).
double sigma_closed_form_2x2(const RealMatrix& m) {
    const double tr = m(0, 0) + m(1, 1);
    const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    const double disc = std::sqrt(tr * tr - 4.0 * det);
    const double l1 = (tr + disc) / 2.0;
    const double l2 = (tr - disc) / 2.0;
    return std::abs(l2) / l1;
}

} // namespace

TEST_CASE("real_perron on hand-checked matrices") {
    SUBCASE("symmetric rank one") {
        const RealPerron p = real_perron(make_matrix({{0.5, 0.5}, {0.5, 0.5}}));
        CHECK(p.rho == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(p.x[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
        CHECK(p.x[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    }
    SUBCASE("Fibonacci pattern has the golden ratio root") {
        const RealPerron p = real_perron(make_matrix({{1, 1}, {1, 0}}));
        CHECK(p.rho == doctest::Approx(kGolden).epsilon(1e-12));
    }
    SUBCASE("one-dimensional") {
        const RealPerron p = real_perron(make_matrix({{2}}));
        CHECK(p.rho == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(p.x[0] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(p.y[0] == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("real_perron invariants on random primitive matrices") {
    std::mt19937_64 rng(200);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng() % 9);
        const DualMatrix a =
            generate_primitive(n, uniform(rng, 0.3, 1.0), DualMode::zero, rng());
        const double tol = 1e-12;
        const RealPerron p = real_perron(a.s, tol);

        CHECK(p.residual <= tol);
        CHECK(std::abs(norm2(p.x) - 1.0) <= 1e-14);
        CHECK(std::abs(dot(p.y, p.x) - 1.0) <= 1e-12);
        for (double e : p.x) CHECK(e > 0.0);
        for (double e : p.y) CHECK(e > 0.0);

        // Collatz-Wielandt bracketing at the final iterate.
        const RealVector mx = a.s * p.x;
        double lo = mx[0] / p.x[0], hi = lo;
        for (std::size_t i = 1; i < n; ++i) {
            const double r = mx[i] / p.x[i];
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        CHECK(lo <= p.rho + 1e-10);
        CHECK(p.rho <= hi + 1e-10);
    }
}

TEST_CASE("spectral_radius_gelfand") {
    CHECK(spectral_radius_gelfand(RealMatrix(3, 3)) == 0.0);
    CHECK(spectral_radius_gelfand(RealMatrix::identity(4)) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(spectral_radius_gelfand(make_matrix({{0, 1}, {0, 0}})) == 0.0);
    CHECK(spectral_radius_gelfand(make_matrix({{0.5, 0}, {0, -0.25}})) ==
          doctest::Approx(0.5).epsilon(1e-10));
    // Complex pair +-i: plain power iteration cannot handle this one.
    CHECK(spectral_radius_gelfand(make_matrix({{0, -1}, {1, 0}})) ==
          doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("second_modulus on hand-checked matrices") {
    SUBCASE("rank-one deflates to zero") {
        const RealMatrix m = make_matrix({{0.5, 0.5}, {0.5, 0.5}});
        const SpectralGap g = second_modulus(m, real_perron(m));
        CHECK(g.sigma == 0.0);
        CHECK(g.eta == 0.0);
    }
    SUBCASE("Fibonacci pattern") {
        const RealMatrix m = make_matrix({{1, 1}, {1, 0}});
        const SpectralGap g = second_modulus(m, real_perron(m));
        const double expected = (std::sqrt(5.0) - 1.0) / (std::sqrt(5.0) + 1.0);
        CHECK(g.sigma == doctest::Approx(expected).epsilon(1e-8));
        CHECK(g.eta == doctest::Approx(std::sqrt(expected)).epsilon(1e-8));
    }
    SUBCASE("symmetric two by two") {
        const RealMatrix m = make_matrix({{0.9, 0.1}, {0.1, 0.9}});
        const SpectralGap g = second_modulus(m, real_perron(m));
        CHECK(g.sigma == doctest::Approx(0.8).epsilon(1e-8));
    }
}

TEST_CASE("second_modulus matches the 2x2 closed form") {
    std::mt19937_64 rng(201);
    for (int trial = 0; trial < 50; ++trial) {
        RealMatrix m(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) m(i, j) = uniform(rng, 0.05, 1.0);
        const SpectralGap g = second_modulus(m, real_perron(m));
        CHECK(g.sigma == doctest::Approx(sigma_closed_form_2x2(m)).epsilon(1e-8));
    }
}

TEST_CASE("solve_bordered") {
    SUBCASE("homogeneous system pins zero") {
        const RealMatrix m = make_matrix({{-0.5, 0.5}, {0.5, -0.5}});
        const double r = 1.0 / std::sqrt(2.0);
        const RealVector v = solve_bordered(m, {r, r}, {0, 0});
        CHECK(std::abs(v[0]) <= 1e-12);
        CHECK(std::abs(v[1]) <= 1e-12);
    }
    SUBCASE("hand-solved 2x2") {
        // M = A_s - I for the symmetric rank-one A_s; b = (0.5, -0.5).
        const RealMatrix m = make_matrix({{-0.5, 0.5}, {0.5, -0.5}});
        const double r = 1.0 / std::sqrt(2.0);
        const RealVector v = solve_bordered(m, {r, r}, {0.5, -0.5});
        CHECK(v[0] == doctest::Approx(-0.5).epsilon(1e-12));
        CHECK(v[1] == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("one-dimensional") {
        const RealVector v = solve_bordered(make_matrix({{0}}), {1}, {0});
        CHECK(v[0] == 0.0);
    }
    SUBCASE("random consistent systems by forward construction") {
        std::mt19937_64 rng(202);
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t n = 2 + static_cast<std::size_t>(rng() % 9);
            const DualMatrix a =
                generate_primitive(n, uniform(rng, 0.3, 1.0), DualMode::zero, rng());
            const RealPerron p = real_perron(a.s);
            RealMatrix m = a.s;
            for (std::size_t i = 0; i < n; ++i) m(i, i) -= p.rho;

            // v orthogonal to x, then b = M v.
            RealVector v(n);
            for (double& e : v) e = uniform(rng, -1, 1);
            const double proj = dot(p.x, v);
            for (std::size_t i = 0; i < n; ++i) v[i] -= proj * p.x[i];
            const RealVector b = m * v;

            const RealVector got = solve_bordered(m, p.x, b);
            CHECK(std::abs(dot(p.x, got)) <= 1e-8);
            const RealVector res = m * got;
            for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(res[i] - b[i]) <= 1e-8);
            for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(got[i] - v[i]) <= 1e-8);
        }
    }
    SUBCASE("singular bordered system is reported") {
        // x not a null vector of M makes the border useless when M has rank
        // deficiency two (zero matrix).
        CHECK_THROWS_AS(solve_bordered(RealMatrix(2, 2), {1, 0}, {0, 0}), SingularError);
    }
}
