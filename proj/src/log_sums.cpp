#include "zd/log_sums.hpp"

#include "zd/common.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zd {

namespace {

void require_window(double r, double R) {
    if (!(r > 0.0) || !(r < R))
        throw std::invalid_argument("log sums: window requires 0 < r < R");
}

} // namespace

double half_plane_log_sum(const ZeroSequence& z, double r, double R, HalfPlane side) {
    require_window(r, R);
    // (modulus, contribution) pairs, stably sorted by modulus so the
    // accumulation order is independent of input permutation up to ties,
    // and ties keep input order (the contributions are then equal anyway
    // only by accident; compensation keeps the difference at ulp level).
    std::vector<std::pair<double, double>> terms;
    terms.reserve(z.size());
    for (const auto& p : z.points()) {
        const double re = p.real();
        if (side == HalfPlane::right ? !(re > 0.0) : !(re < 0.0)) continue;
        const double m = std::abs(p);
        if (!(m > r) || !(m <= R)) continue;
        const double contrib = std::abs(re) / std::norm(p); // |Re z| / |z|^2 = Re(±1/z)
        terms.emplace_back(m, contrib);
    }
    std::sort(terms.begin(), terms.end());
    StableSum acc;
    for (const auto& [m, c] : terms) acc.add(c);
    return acc.value();
}

double log_sum(const ZeroSequence& z, double r, double R) {
    return std::max(half_plane_log_sum(z, r, R, HalfPlane::right),
                    half_plane_log_sum(z, r, R, HalfPlane::left));
}

std::vector<LogSumRow> log_sum_table(const ZeroSequence& z, const WindowGrid& grid) {
    std::vector<LogSumRow> rows(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        const Window& w = grid.windows()[i];
        const double rh = half_plane_log_sum(z, w.r, w.R, HalfPlane::right);
        const double lh = half_plane_log_sum(z, w.r, w.R, HalfPlane::left);
        rows[i] = {w.r, w.R, rh, lh, std::max(rh, lh)};
    });
    return rows;
}

std::size_t imaginary_axis_count(const ZeroSequence& z) {
    std::size_t n = 0;
    for (const auto& p : z.points())
        if (p.real() == 0.0) ++n;
    return n;
}

} // namespace zd
