#include "zd/zero_sequence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace zd {

ZeroSequence::ZeroSequence(std::vector<std::complex<double>> points)
    : points_(std::move(points)) {
    for (std::size_t k = 0; k < points_.size(); ++k) {
        const auto& z = points_[k];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument("ZeroSequence: non-finite point at index " +
                                        std::to_string(k));
        if (z.real() == 0.0 && z.imag() == 0.0)
            throw std::invalid_argument("ZeroSequence: point at the origin at index " +
                                        std::to_string(k));
    }
}

ZeroSequence ZeroSequence::concat(const ZeroSequence& a, const ZeroSequence& b) {
    std::vector<std::complex<double>> pts;
    pts.reserve(a.size() + b.size());
    pts.insert(pts.end(), a.points().begin(), a.points().end());
    pts.insert(pts.end(), b.points().begin(), b.points().end());
    return ZeroSequence(std::move(pts));
}

std::size_t radial_counting(const ZeroSequence& z, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("radial_counting: r must be > 0");
    std::size_t n = 0;
    for (const auto& p : z.points())
        if (std::abs(p) <= r) ++n;
    return n;
}

double upper_density(const ZeroSequence& z, double r_min) {
    if (!(r_min > 0.0)) throw std::invalid_argument("upper_density: r_min must be > 0");
    if (z.empty()) return 0.0;
    std::vector<double> moduli;
    moduli.reserve(z.size());
    for (const auto& p : z.points()) moduli.push_back(std::abs(p));
    std::sort(moduli.begin(), moduli.end());

    // n(r)/r is maximal either at r_min or right at a jump point.
    double best = static_cast<double>(radial_counting(z, r_min)) / r_min;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        const double m = moduli[i];
        if (m < r_min) continue;
        if (i + 1 < moduli.size() && moduli[i + 1] == m) continue; // last of a tie
        best = std::max(best, static_cast<double>(i + 1) / m);
    }
    return best;
}

SeparationReport separation_margin(const ZeroSequence& z, std::size_t tail_start,
                                   double threshold) {
    SeparationReport rep;
    rep.tail_start = tail_start;
    rep.threshold = threshold;
    if (z.empty()) {
        rep.margin = 1.0;
        rep.separated = true;
        return rep;
    }
    if (tail_start >= z.size())
        throw std::invalid_argument("separation_margin: tail_start out of range");
    double margin = 1.0;
    for (std::size_t k = tail_start; k < z.size(); ++k) {
        const auto& p = z.points()[k];
        margin = std::min(margin, std::abs(p.real()) / std::abs(p));
    }
    rep.margin = margin;
    rep.separated = margin > threshold;
    return rep;
}

} // namespace zd
