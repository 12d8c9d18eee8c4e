#include "zd/log_sums.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace zd;
using cplx = std::complex<double>;

namespace {

ZeroSequence integers(int n, double sign = 1.0) {
    std::vector<cplx> pts;
    for (int k = 1; k <= n; ++k) pts.emplace_back(sign * k, 0.0);
    return ZeroSequence(std::move(pts));
}

// Independent naive-loop oracle, no sorting, no compensation.
double naive_rh(const ZeroSequence& z, double r, double R) {
    double s = 0.0;
    for (const auto& p : z.points())
        if (p.real() > 0.0 && std::abs(p) > r && std::abs(p) <= R)
            s += (1.0 / p).real();
    return s;
}

} // namespace

TEST_CASE("harmonic window") {
    const auto z = integers(100);
    // Strict r < |z| excludes k = 1: H_10 - 1.
    CHECK(half_plane_log_sum(z, 1.0, 10.0, HalfPlane::right) ==
          doctest::Approx(1.9289682539682538).epsilon(1e-15));
    CHECK(half_plane_log_sum(z, 1.0, 10.0, HalfPlane::left) == 0.0);
    CHECK(std::abs(half_plane_log_sum(z, 1.0, 10.0, HalfPlane::right) -
                   naive_rh(z, 1.0, 10.0)) < 1e-12);
}

TEST_CASE("two-point and empty cases") {
    CHECK(log_sum(ZeroSequence{}, 1.0, 10.0) == 0.0);
    ZeroSequence z({{3, 0}, {-2, 0}});
    CHECK(log_sum(z, 1.0, 10.0) == doctest::Approx(0.5).epsilon(1e-15));
    ZeroSequence one(std::vector<cplx>{{1.0, 1.0}});
    CHECK(half_plane_log_sum(one, 0.5, 2.0, HalfPlane::right) ==
          doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("symmetric sequence has equal half-plane sums") {
    const auto z = ZeroSequence::concat(integers(100), integers(100, -1.0));
    const double rh = half_plane_log_sum(z, 1.0, 10.0, HalfPlane::right);
    const double lh = half_plane_log_sum(z, 1.0, 10.0, HalfPlane::left);
    CHECK(rh == doctest::Approx(1.9289682539682538).epsilon(1e-15));
    CHECK(rh == lh);
    CHECK(log_sum(z, 1.0, 10.0) == std::max(rh, lh));
}

TEST_CASE("imaginary-axis points contribute to neither side") {
    ZeroSequence z({{0, 2}, {0, -3}, {1, 0}});
    CHECK(half_plane_log_sum(z, 0.5, 10.0, HalfPlane::right) == doctest::Approx(1.0));
    CHECK(half_plane_log_sum(z, 0.5, 10.0, HalfPlane::left) == 0.0);
    CHECK(imaginary_axis_count(z) == 2);
}

TEST_CASE("annulus additivity over random triples") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> u(0.5, 120.0);
    const auto z = integers(100);
    for (int trial = 0; trial < 100; ++trial) {
        double a = u(rng), b = u(rng), c = u(rng);
        double lo = std::min({a, b, c}), hi = std::max({a, b, c});
        double mid = a + b + c - lo - hi;
        if (lo == mid || mid == hi) continue;
        const double whole = half_plane_log_sum(z, lo, hi, HalfPlane::right);
        const double parts = half_plane_log_sum(z, lo, mid, HalfPlane::right) +
                             half_plane_log_sum(z, mid, hi, HalfPlane::right);
        CHECK(std::abs(whole - parts) < 1e-12);
    }
}

TEST_CASE("monotone in R, antitone in r") {
    const auto z = integers(50);
    double prev = 0.0;
    for (double R = 2.0; R <= 60.0; R += 1.7) {
        const double cur = half_plane_log_sum(z, 1.0, R, HalfPlane::right);
        CHECK(cur >= prev);
        prev = cur;
    }
    prev = half_plane_log_sum(z, 0.5, 50.0, HalfPlane::right);
    for (double r = 1.0; r < 49.0; r += 3.1) {
        const double cur = half_plane_log_sum(z, r, 50.0, HalfPlane::right);
        CHECK(cur <= prev);
        prev = cur;
    }
}

TEST_CASE("union additivity per side") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-40.0, 40.0);
    std::vector<cplx> p1, p2;
    for (int i = 0; i < 60; ++i) p1.emplace_back(u(rng), u(rng));
    for (int i = 0; i < 60; ++i) p2.emplace_back(u(rng), u(rng));
    ZeroSequence a(p1), b(p2), both = ZeroSequence::concat(ZeroSequence(p1), ZeroSequence(p2));
    for (auto side : {HalfPlane::right, HalfPlane::left}) {
        const double u1 = half_plane_log_sum(a, 2.0, 30.0, side);
        const double u2 = half_plane_log_sum(b, 2.0, 30.0, side);
        const double uu = half_plane_log_sum(both, 2.0, 30.0, side);
        CHECK(uu == doctest::Approx(u1 + u2).epsilon(1e-13));
    }
}

TEST_CASE("Stieltjes identity for positive real sequences") {
    // l_Z(r,R) = Integral (1/t) d n(t): sum of jumps of the counting
    // function weighted by 1/t, an independent route via radial_counting.
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> u(0.5, 90.0);
    std::vector<cplx> pts;
    for (int i = 0; i < 80; ++i) pts.emplace_back(u(rng), 0.0);
    ZeroSequence z(pts);

    std::vector<double> moduli;
    for (const auto& p : pts) moduli.push_back(p.real());
    std::sort(moduli.begin(), moduli.end());
    const double r = 3.0, R = 70.0;
    double stieltjes = 0.0;
    for (double t : moduli)
        if (t > r && t <= R) stieltjes += 1.0 / t;
    CHECK(log_sum(z, r, R) == doctest::Approx(stieltjes).epsilon(1e-13));
}

TEST_CASE("window with r >= R is rejected") {
    const auto z = integers(5);
    CHECK_THROWS_AS(half_plane_log_sum(z, 2.0, 2.0, HalfPlane::right), std::invalid_argument);
    CHECK_THROWS_AS(log_sum(z, 5.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(log_sum(z, -1.0, 2.0), std::invalid_argument);
}

TEST_CASE("boundary conventions: strict lower, weak upper") {
    ZeroSequence z({{2, 0}, {3, 0}});
    CHECK(half_plane_log_sum(z, 2.0, 3.0, HalfPlane::right) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("scaling by powers of two rescales l exactly") {
    std::mt19937 rng(55);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    std::vector<cplx> pts;
    for (int i = 0; i < 50; ++i) pts.emplace_back(u(rng), u(rng));
    ZeroSequence z(pts);
    for (double lambda : {2.0, 4.0, 0.5}) {
        std::vector<cplx> scaled;
        for (auto& p : pts) scaled.push_back(lambda * p);
        ZeroSequence zl(scaled);
        const double base = log_sum(z, 1.5, 18.0);
        CHECK(log_sum(zl, lambda * 1.5, lambda * 18.0) == base / lambda);
    }
}
