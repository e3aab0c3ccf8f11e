#include <cmath>

#include "doctest.h"
#include "nldirac/errors.hpp"
#include "nldirac/grid.hpp"

using namespace nldirac;

TEST_CASE("grid nodes are staggered midpoints") {
    const RadialGrid g = make_grid(10.0, 100);
    CHECK(g.h == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(g.r.front() == doctest::Approx(0.05).epsilon(1e-15));
    CHECK(g.r.back() == doctest::Approx(9.95).epsilon(1e-15));
    CHECK(g.r.size() == 100);
}

TEST_CASE("grid construction rejects bad parameters") {
    CHECK_THROWS_AS(make_grid(-1.0, 100), ConfigError);
    CHECK_THROWS_AS(make_grid(0.0, 100), ConfigError);
    CHECK_THROWS_AS(make_grid(10.0, 8), ConfigError);
}

TEST_CASE("quadrature is exact for low-degree polynomials") {
    const RadialGrid g = make_grid(2.0, 64);
    Vec f(g.n);

    // The slope-corrected midpoint rule integrates polynomials through
    // degree 3 exactly: the Euler-Maclaurin remainder after the h^2/24
    // correction starts at 7 h^4/5760 [f'''] and f''' has equal endpoint
    // values for degree <= 3.
    for (std::size_t j = 0; j < g.n; ++j) f[j] = g.r[j] * g.r[j];
    CHECK(integrate_dr(g, f) == doctest::Approx(8.0 / 3.0).epsilon(1e-14));
    for (std::size_t j = 0; j < g.n; ++j) f[j] = std::pow(g.r[j], 3);
    CHECK(integrate_dr(g, f) == doctest::Approx(4.0).epsilon(1e-14));

    // f = r^4 picks up exactly that leading remainder term.
    for (std::size_t j = 0; j < g.n; ++j) f[j] = std::pow(g.r[j], 4);
    const double exact = std::pow(2.0, 5) / 5.0;
    const double predicted = 7.0 * 48.0 / 5760.0 * std::pow(g.h, 4);
    const double err = integrate_dr(g, f) - exact;
    CHECK(err == doctest::Approx(predicted).epsilon(1e-6));
}

TEST_CASE("quadrature converges at fourth order on smooth integrands") {
    double prev = 0.0;
    const double exact = 1.0 - 2.0 * std::exp(-1.0);  // int_0^1 r e^{-r} (1+..)
    for (std::size_t n : {64, 128, 256}) {
        const RadialGrid g = make_grid(1.0, n);
        Vec f(g.n);
        for (std::size_t j = 0; j < g.n; ++j) f[j] = g.r[j] * std::exp(-g.r[j]);
        const double err = std::abs(integrate_dr(g, f) - exact);
        if (prev > 0.0) CHECK(prev / err > 12.0);  // ~16 for clean order 4
        prev = err;
    }
}

TEST_CASE("radial-measure integral matches the gaussian reference") {
    // |phi|^2 with p11 = 0.1 r exp(-r^2): int r dr = 1/800 exactly.
    const RadialGrid g = make_grid(40.0, 4096);
    Vec msq(g.n);
    for (std::size_t j = 0; j < g.n; ++j) {
        const double v = 0.1 * g.r[j] * std::exp(-g.r[j] * g.r[j]);
        msq[j] = v * v;
    }
    CHECK(std::abs(integrate_rdr(g, msq) - 0.00125) < 1e-9);
}

TEST_CASE("derivative is fourth order including the boundary rows") {
    double prev = 0.0;
    for (std::size_t n : {128, 256, 512}) {
        const RadialGrid g = make_grid(6.0, n);
        Vec f(g.n);
        for (std::size_t j = 0; j < g.n; ++j) f[j] = std::sin(1.3 * g.r[j]);
        const Vec d = derivative(g, f);
        double err = 0.0;
        for (std::size_t j = 0; j < g.n; ++j)
            err = std::max(err, std::abs(d[j] - 1.3 * std::cos(1.3 * g.r[j])));
        if (prev > 0.0) CHECK(prev / err > 12.0);
        prev = err;
    }
}

TEST_CASE("derivative is exact on quartics") {
    const RadialGrid g = make_grid(3.0, 64);
    Vec f(g.n);
    for (std::size_t j = 0; j < g.n; ++j)
        f[j] = 1.0 + g.r[j] + std::pow(g.r[j], 3) - 0.5 * std::pow(g.r[j], 4);
    const Vec d = derivative(g, f);
    for (std::size_t j = 0; j < g.n; ++j) {
        const double exact = 1.0 + 3.0 * g.r[j] * g.r[j] - 2.0 * std::pow(g.r[j], 3);
        CHECK(std::abs(d[j] - exact) < 1e-10);
    }
}

TEST_CASE("edge slopes are exact through degree four") {
    const RadialGrid g = make_grid(1.0, 64);
    Vec f(g.n);
    for (std::size_t j = 0; j < g.n; ++j)
        f[j] = 2.0 - 3.0 * g.r[j] + std::pow(g.r[j], 4);
    CHECK(edge_deriv_left(g, f) == doctest::Approx(-3.0).epsilon(1e-10));
    CHECK(edge_deriv_right(g, f) == doctest::Approx(-3.0 + 4.0).epsilon(1e-10));
}

TEST_CASE("length mismatches are rejected") {
    const RadialGrid g = make_grid(1.0, 64);
    Vec f(32, 1.0);
    CHECK_THROWS_AS(integrate_dr(g, f), DomainError);
    CHECK_THROWS_AS(derivative(g, f), DomainError);
}
