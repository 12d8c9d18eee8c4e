#include "zd/axis_integral.hpp"

#include "zd/entire.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace zd;

namespace {

LogModulus zero_modulus() {
    return LogModulus{[](double) { return 0.0; }, {}};
}

LogModulus linear_modulus() {
    // v(iy) = pi |y|  =>  J(r, R) = ln(R/r) exactly.
    return LogModulus{[](double y) { return std::numbers::pi * std::abs(y); }, {}};
}

} // namespace

TEST_CASE("trivial integrands") {
    CHECK(axis_integral(zero_modulus(), 1.0, 10.0, 1e-10) == 0.0);
    CHECK(axis_integral(linear_modulus(), 1.0, 10.0, 1e-10) ==
          doctest::Approx(std::log(10.0)).epsilon(1e-12));
}

TEST_CASE("closed form on random windows") {
    std::mt19937 rng(31415);
    std::uniform_real_distribution<double> u(0.05, 500.0);
    const auto v = linear_modulus();
    for (int i = 0; i < 50; ++i) {
        double a = u(rng), b = u(rng);
        if (a == b) continue;
        const double r = std::min(a, b), R = std::max(a, b);
        CHECK(std::abs(axis_integral(v, r, R, 1e-11) - std::log(R / r)) < 1e-10);
    }
}

TEST_CASE("log-sinh integrand against a dense fixed-grid oracle") {
    const auto v = sin_axis_logmod(1.0);
    // Composite Simpson, 2^16 panels on [1, 100]; independent of the
    // adaptive path.
    const double r = 1.0, R = 100.0;
    const std::size_t n = 1 << 16;
    const double h = (R - r) / static_cast<double>(n);
    auto f = [&](double y) {
        return (v.eval(-y) + v.eval(y)) / (y * y) * (0.5 / std::numbers::pi);
    };
    double simpson = f(r) + f(R);
    for (std::size_t i = 1; i < n; ++i)
        simpson += f(r + h * static_cast<double>(i)) * (i % 2 ? 4.0 : 2.0);
    simpson *= h / 3.0;
    CHECK(std::abs(axis_integral(v, r, R, 1e-9) - simpson) < 1e-8);
}

TEST_CASE("interval additivity and linearity") {
    const auto v = sin_axis_logmod(1.0);
    const double tol = 1e-9;
    const double whole = axis_integral(v, 1.0, 50.0, tol);
    const double parts = axis_integral(v, 1.0, 7.0, tol) + axis_integral(v, 7.0, 50.0, tol);
    CHECK(std::abs(whole - parts) < 2.0 * tol);

    const LogModulus combo{[](double y) {
                               return 3.0 * std::numbers::pi * std::abs(y) +
                                      sin_log_modulus(1.0, y);
                           },
                           {}};
    const double j_combo = axis_integral(combo, 2.0, 20.0, tol);
    const double j_lin = axis_integral(linear_modulus(), 2.0, 20.0, tol);
    const double j_sinh = axis_integral(v, 2.0, 20.0, tol);
    CHECK(std::abs(j_combo - (3.0 * j_lin + j_sinh)) < 5.0 * tol);
}

TEST_CASE("positivity") {
    const auto v = linear_modulus();
    CHECK(axis_integral(v, 0.3, 3.0, 1e-9) >= -1e-9);
}

TEST_CASE("integrable log singularity at a declared axis zero") {
    // v(iy) = ln|y^2 - 4| has axis zeros at y = +-2; integrable.
    LogModulus v{[](double y) { return std::log(std::abs(y * y - 4.0)); }, {2.0}};
    // Oracle: Integral_1^3 2 ln|y^2-4| / (2 pi y^2) dy via offset composite
    // midpoint, dense enough for 1e-7.
    const double r = 1.0, R = 3.0;
    const std::size_t n = 4'000'000;
    const double h = (R - r) / static_cast<double>(n);
    double mid = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double y = r + h * (static_cast<double>(i) + 0.5);
        mid += std::log(std::abs(y * y - 4.0)) / (y * y);
    }
    mid *= h / std::numbers::pi;
    const double got = axis_integral(v, r, R, 1e-8);
    CHECK(std::abs(got - mid) < 1e-6); // midpoint oracle limits the comparison
}

TEST_CASE("grid evaluation matches per-window calls and is additive") {
    const auto v = sin_axis_logmod(1.0);
    WindowGrid grid({{1.0, 2.0}, {2.0, 4.0}, {1.0, 4.0}});
    const double tol = 1e-9;
    const auto j = axis_integral_grid(v, grid, tol);
    REQUIRE(j.size() == 3);
    CHECK(std::abs(j[0] - axis_integral(v, 1.0, 2.0, tol)) < 2.0 * tol);
    CHECK(std::abs(j[1] - axis_integral(v, 2.0, 4.0, tol)) < 2.0 * tol);
    CHECK(std::abs(j[2] - (j[0] + j[1])) < 2.0 * tol);

    // pi|y| over split windows: both halves equal ln 2.
    const auto jl = axis_integral_grid(linear_modulus(), grid, tol);
    CHECK(jl[0] == doctest::Approx(std::log(2.0)).epsilon(1e-10));
    CHECK(jl[1] == doctest::Approx(std::log(2.0)).epsilon(1e-10));
}

TEST_CASE("invalid windows and tolerances are rejected") {
    const auto v = zero_modulus();
    CHECK_THROWS_AS(axis_integral(v, 2.0, 1.0, 1e-8), std::invalid_argument);
    CHECK_THROWS_AS(axis_integral(v, 0.0, 1.0, 1e-8), std::invalid_argument);
    CHECK_THROWS_AS(axis_integral(v, 1.0, 2.0, 0.0), std::invalid_argument);
}
