#include "zd/entire.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace zd;
using cplx = std::complex<double>;

namespace {

CanonicalProduct integer_product(int n) {
    std::vector<cplx> pts;
    for (int k = 1; k <= n; ++k) pts.emplace_back(k, 0.0);
    return CanonicalProduct(ZeroSequence(std::move(pts)));
}

// Plain per-term loop, no blocking, no compensation.
double naive_logmod(const CanonicalProduct& p, cplx z) {
    double s = 0.0;
    for (const auto& w : p.zeros().points()) s += std::log(std::abs(1.0 - z * z / (w * w)));
    return s;
}

} // namespace

TEST_CASE("single factor has a closed form on the axis") {
    CanonicalProduct p(ZeroSequence(std::vector<cplx>{{1.0, 0.0}}));
    // |1 - (iy)^2| = 1 + y^2.
    for (double y : {0.0, 0.5, 1.0, 10.0})
        CHECK(product_log_modulus(p, {0.0, y}) ==
              doctest::Approx(std::log1p(y * y)).epsilon(1e-15));
}

TEST_CASE("vanishes exactly at its zeros and their negatives") {
    CanonicalProduct p(ZeroSequence({{2, 1}, {3, 0}}));
    CHECK(product_log_modulus(p, {2, 1}) == -std::numeric_limits<double>::infinity());
    CHECK(product_log_modulus(p, {-2, -1}) == -std::numeric_limits<double>::infinity());
    CHECK(product_log_modulus(p, {3, 0}) == -std::numeric_limits<double>::infinity());
    CHECK(std::isfinite(product_log_modulus(p, {2, -1})));
    CHECK(p.full_zero_set().size() == 4);
    CHECK(product_log_modulus(CanonicalProduct{}, {5, 5}) == 0.0);
}

TEST_CASE("evenness and conjugate symmetry for real zeros") {
    const auto p = integer_product(40);
    std::mt19937 rng(808);
    std::uniform_real_distribution<double> u(-30.0, 30.0);
    for (int i = 0; i < 25; ++i) {
        const cplx z(u(rng), u(rng));
        const double v = product_log_modulus(p, z);
        CHECK(product_log_modulus(p, -z) == v);
        CHECK(product_log_modulus(p, std::conj(z)) == v);
    }
}

TEST_CASE("matches a naive per-term loop") {
    const auto p = integer_product(500);
    std::mt19937 rng(909);
    std::uniform_real_distribution<double> u(0.1, 80.0);
    for (int i = 0; i < 20; ++i) {
        const cplx z(u(rng), u(rng));
        const double a = product_log_modulus(p, z);
        const double b = naive_logmod(p, z);
        CHECK(std::abs(a - b) < 1e-10 * (1.0 + std::abs(b)));
    }
}

TEST_CASE("truncated integer product approaches sin(pi z)/(pi z) on the axis") {
    // prod_{k<=n} (1 + y^2/k^2) -> sinh(pi y)/(pi y); the log tail is
    // about y^2/n.
    const int n = 20000;
    const auto p = integer_product(n);
    for (double y : {0.5, 1.0, 2.0}) {
        const double truncated = product_log_modulus(p, {0.0, y});
        const double limit = sin_log_modulus(1.0, y) - std::log(std::numbers::pi * y);
        CHECK(std::abs(truncated - limit) < 2.0 * y * y / n);
    }
}

TEST_CASE("sin_log_modulus values and asymptotics") {
    // ln sinh(pi) at b = 1, y = 1.
    CHECK(sin_log_modulus(1.0, 1.0) == doctest::Approx(2.4465762844531128).epsilon(1e-15));
    CHECK(sin_log_modulus(1.0, -1.0) == sin_log_modulus(1.0, 1.0));
    CHECK(sin_log_modulus(0.0, 3.0) == -std::numeric_limits<double>::infinity());
    CHECK(sin_log_modulus(1.0, 0.0) == -std::numeric_limits<double>::infinity());
    // No overflow far out; ln sinh(x) = x - ln 2 up to exp(-2x).
    const double big = sin_log_modulus(2.0, 1e6);
    CHECK(big == doctest::Approx(2.0 * std::numbers::pi * 1e6 - std::log(2.0)).epsilon(1e-15));
    // Small argument: sinh(x) ~ x.
    CHECK(sin_log_modulus(1.0, 1e-8) ==
          doctest::Approx(std::log(std::numbers::pi * 1e-8)).epsilon(1e-6));
}

TEST_CASE("zeros must lie in the open right half-plane") {
    CHECK_THROWS_AS(CanonicalProduct(ZeroSequence(std::vector<cplx>{{0.0, 1.0}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(CanonicalProduct(ZeroSequence(std::vector<cplx>{{-1.0, 0.0}})),
                    std::invalid_argument);
    CHECK_NOTHROW(CanonicalProduct(ZeroSequence(std::vector<cplx>{{1e-9, 5.0}})));
}

TEST_CASE("indicator estimate recovers a linear rate") {
    std::vector<double> grid;
    for (int i = 1; i <= 200; ++i) grid.push_back(0.5 * i);
    const auto est = indicator_estimate([](double r) { return std::numbers::pi * r; }, grid);
    CHECK(est.value == doctest::Approx(std::numbers::pi).epsilon(1e-12));
    CHECK(est.skipped == 0);
    CHECK(est.r_lo >= 50.0);

    // -inf samples are skipped, not propagated.
    const auto est2 = indicator_estimate(
        [](double r) {
            return r == 75.0 ? -std::numeric_limits<double>::infinity() : 2.0 * r;
        },
        grid);
    CHECK(est2.value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(est2.skipped == 1);
}

TEST_CASE("support function and vertical width of a polygon") {
    ConvexCompactPoly sq{{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}};
    CHECK(support_function(sq, 0.0) == doctest::Approx(1.0));
    CHECK(support_function(sq, std::numbers::pi / 2) == doctest::Approx(1.0));
    CHECK(support_function(sq, std::numbers::pi / 4) == doctest::Approx(std::sqrt(2.0)));
    CHECK(width0(sq) == doctest::Approx(2.0));

    ConvexCompactPoly seg{{{0, -3}, {0, 5}}};
    CHECK(width0(seg) == doctest::Approx(8.0));
    ConvexCompactPoly pt{{{2, 7}}};
    CHECK(width0(pt) == doctest::Approx(0.0));
}

TEST_CASE("axis adapters agree with the direct evaluations") {
    const auto p = integer_product(30);
    const auto vp = product_axis_logmod(p);
    CHECK(vp.singular_points.empty());
    for (double y : {0.25, 1.0, 4.0})
        CHECK(vp.eval(y) == product_log_modulus(p, {0.0, y}));
    const auto vs = sin_axis_logmod(0.75);
    for (double y : {0.25, 1.0, 4.0}) CHECK(vs.eval(y) == sin_log_modulus(0.75, y));
}
