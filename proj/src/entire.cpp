#include "zd/entire.hpp"

#include "zd/common.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace zd {

namespace {
constexpr std::size_t kBlock = 4096;
}

CanonicalProduct::CanonicalProduct(ZeroSequence zeros) : zeros_(std::move(zeros)) {
    for (const auto& w : zeros_.points())
        if (!(w.real() > 0.0))
            throw std::invalid_argument(
                "CanonicalProduct: zeros must lie in the open right half-plane");
}

ZeroSequence CanonicalProduct::full_zero_set() const {
    std::vector<std::complex<double>> pts;
    pts.reserve(2 * zeros_.size());
    for (const auto& w : zeros_.points()) pts.push_back(w);
    for (const auto& w : zeros_.points()) pts.push_back(-w);
    return ZeroSequence(std::move(pts));
}

double product_log_modulus(const CanonicalProduct& p, std::complex<double> z) {
    const auto& pts = p.zeros().points();
    const std::complex<double> z2 = z * z;
    const std::size_t n = pts.size();
    const std::size_t nblocks = (n + kBlock - 1) / kBlock;
    std::vector<double> block_sum(nblocks, 0.0);
    bool hit_zero = false;
    parallel_for(nblocks, [&](std::size_t bi) {
        StableSum acc;
        const std::size_t lo = bi * kBlock;
        const std::size_t hi = std::min(lo + kBlock, n);
        for (std::size_t k = lo; k < hi; ++k) {
            const std::complex<double> term = 1.0 - z2 / (pts[k] * pts[k]);
            const double a = std::abs(term);
            if (a == 0.0) {
                hit_zero = true;
                return;
            }
            acc.add(std::log(a));
        }
        block_sum[bi] = acc.value();
    });
    if (hit_zero) return -std::numeric_limits<double>::infinity();
    StableSum total;
    for (double s : block_sum) total.add(s);
    return total.value();
}

double sin_log_modulus(double b, double y) {
    if (!(b >= 0.0)) throw std::invalid_argument("sin_log_modulus: b must be >= 0");
    if (b == 0.0) return -std::numeric_limits<double>::infinity(); // degenerate
    const double x = std::numbers::pi * b * std::abs(y);
    // ln sinh x = x + log1p(-exp(-2x)) - ln 2, stable for all x > 0.
    return x + std::log1p(-std::exp(-2.0 * x)) - std::numbers::ln2;
}

IndicatorEstimate indicator_estimate(const std::function<double(double)>& logmod_along_ray,
                                     const std::vector<double>& r_grid,
                                     double tail_fraction) {
    if (r_grid.size() < 2)
        throw std::invalid_argument("indicator_estimate: need at least 2 grid points");
    tail_fraction = std::clamp(tail_fraction, 1e-9, 1.0);
    const std::size_t start =
        static_cast<std::size_t>(std::floor((1.0 - tail_fraction) * r_grid.size()));
    IndicatorEstimate est;
    est.value = -std::numeric_limits<double>::infinity();
    est.r_lo = r_grid[start];
    est.r_hi = r_grid.back();
    for (std::size_t i = start; i < r_grid.size(); ++i) {
        const double r = r_grid[i];
        if (!(r > 0.0))
            throw std::invalid_argument("indicator_estimate: r grid must be positive");
        const double v = logmod_along_ray(r);
        if (!std::isfinite(v)) {
            ++est.skipped; // ray hit a zero
            continue;
        }
        est.value = std::max(est.value, v / r);
    }
    return est;
}

double support_function(const ConvexCompactPoly& k, double theta) {
    if (k.vertices.empty())
        throw std::invalid_argument("support_function: empty vertex list");
    double best = -std::numeric_limits<double>::infinity();
    const std::complex<double> rot = std::polar(1.0, -theta);
    for (const auto& v : k.vertices) best = std::max(best, (v * rot).real());
    return best;
}

double width0(const ConvexCompactPoly& k) {
    if (k.vertices.empty())
        throw std::invalid_argument("width0: empty vertex list");
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& v : k.vertices) {
        lo = std::min(lo, v.imag());
        hi = std::max(hi, v.imag());
    }
    return hi - lo;
}

LogModulus product_axis_logmod(const CanonicalProduct& p) {
    LogModulus v;
    v.eval = [p](double y) { return product_log_modulus(p, {0.0, y}); };
    return v;
}

LogModulus sin_axis_logmod(double b) {
    LogModulus v;
    v.eval = [b](double y) { return sin_log_modulus(b, y); };
    return v;
}

} // namespace zd
