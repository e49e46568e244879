#include <cmath>
#include <random>

#include "doctest.h"
#include "rsv/grid.hpp"
#include "test_helpers.hpp"

using namespace rsv;

TEST_CASE("make_grid basic spacing") {
    const Grid g = make_grid(1.0, 8);
    CHECK(g.dx == doctest::Approx(0.125).epsilon(1e-15));
    const Grid g2 = make_grid(2.0 * M_PI, 256);
    CHECK(g2.dx == doctest::Approx(2.0 * M_PI / 256).epsilon(1e-15));
    CHECK(g2.nodes[0] == 0.0);
    CHECK(g2.nodes[255] == doctest::Approx(2.0 * M_PI - g2.dx));
}

TEST_CASE("make_grid rejects bad arguments") {
    CHECK_THROWS_AS(make_grid(-1.0, 8), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(0.0, 8), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(1.0, 7), std::invalid_argument);
}

TEST_CASE("ddx annihilates constants and rejects mismatched lengths") {
    const Grid g = make_grid(3.0, 32);
    const Field c(32, 4.2);
    const Field d = ddx(c, g);
    for (double v : d) CHECK(v == 0.0);
    CHECK_THROWS_AS(ddx(Field(31, 0.0), g), std::invalid_argument);
}

TEST_CASE("ddx on a Fourier mode carries the discrete factor sin(k dx)/(k dx)") {
    const double L = 2.0;
    const Grid g = make_grid(L, 64);
    const double k = 2.0 * M_PI / L;
    Field f(g.n);
    for (int i = 0; i < g.n; ++i) f[i] = std::sin(k * g.nodes[i]);
    const Field df = ddx(f, g);
    const double factor = std::sin(k * g.dx) / (k * g.dx);
    for (int i = 0; i < g.n; ++i)
        CHECK(df[i] == doctest::Approx(factor * k * std::cos(k * g.nodes[i])).epsilon(1e-12));
}

TEST_CASE("ddx is linear") {
    const Grid g = make_grid(1.0, 48);
    std::mt19937_64 rng(7);
    const Field f = testing::random_smooth_field(g, rng, -1.0, 1.0);
    const Field h = testing::random_smooth_field(g, rng, -2.0, 2.0);
    const double a = 1.7, b = -0.3;
    Field comb(g.n);
    for (int i = 0; i < g.n; ++i) comb[i] = a * f[i] + b * h[i];
    const Field lhs = ddx(comb, g);
    const Field df = ddx(f, g);
    const Field dh = ddx(h, g);
    for (int i = 0; i < g.n; ++i)
        CHECK(lhs[i] == doctest::Approx(a * df[i] + b * dh[i]).epsilon(1e-12));
}

TEST_CASE("quad: constants, mean-zero modes, and telescoping") {
    const Grid g = make_grid(2.0, 64);
    CHECK(quad(Field(g.n, 3.0), g) == doctest::Approx(6.0).epsilon(1e-14));

    Field s(g.n);
    for (int i = 0; i < g.n; ++i) s[i] = std::sin(2.0 * M_PI * g.nodes[i] / g.L);
    CHECK(std::fabs(quad(s, g)) < 1e-13);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Field f = testing::random_smooth_field(g, rng, -3.0, 3.0);
        CHECK(std::fabs(quad(ddx(f, g), g)) < 1e-12);
    }
}

TEST_CASE("quad is invariant under index rotation") {
    const Grid g = make_grid(1.5, 40);
    std::mt19937_64 rng(3);
    const Field f = testing::random_smooth_field(g, rng, 0.0, 1.0);
    Field rot(g.n);
    for (int i = 0; i < g.n; ++i) rot[i] = f[(i + 13) % g.n];
    CHECK(quad(rot, g) == doctest::Approx(quad(f, g)).epsilon(1e-13));
}

TEST_CASE("ddx converges at order 2 on a sine mode") {
    const double L = 2.0 * M_PI;
    double prev_err = 0.0;
    for (int pass = 0; pass < 3; ++pass) {
        const int n = 32 << pass;
        const Grid g = make_grid(L, n);
        Field f(n);
        for (int i = 0; i < n; ++i) f[i] = std::sin(3.0 * g.nodes[i]);
        const Field df = ddx(f, g);
        double err = 0.0;
        for (int i = 0; i < n; ++i)
            err = std::max(err, std::fabs(df[i] - 3.0 * std::cos(3.0 * g.nodes[i])));
        if (pass > 0) {
            const double ratio = prev_err / err;
            CHECK(ratio > 3.7);
            CHECK(ratio < 4.3);
        }
        prev_err = err;
    }
}
