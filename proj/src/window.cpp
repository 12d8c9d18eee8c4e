#include "zd/window.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zd {

WindowGrid::WindowGrid(std::vector<Window> windows) : windows_(std::move(windows)) {
    for (const auto& w : windows_) {
        if (!(w.r > 0.0) || !(w.r < w.R) || !std::isfinite(w.R))
            throw std::invalid_argument("WindowGrid: windows require 0 < r < R");
    }
}

WindowGrid WindowGrid::log_spaced(const std::vector<double>& r_list, double R_max,
                                  int points_per_decade) {
    if (r_list.empty())
        throw std::invalid_argument("WindowGrid::log_spaced: empty r list");
    if (points_per_decade <= 0)
        throw std::invalid_argument("WindowGrid::log_spaced: points_per_decade must be > 0");
    for (double r : r_list)
        if (!(r > 0.0))
            throw std::invalid_argument("WindowGrid::log_spaced: r values must be > 0");
    const double r_lo = *std::min_element(r_list.begin(), r_list.end());
    if (!(R_max > r_lo))
        throw std::invalid_argument("WindowGrid::log_spaced: R_max must exceed min r");

    std::vector<double> rs = r_list;
    std::sort(rs.begin(), rs.end());

    std::vector<Window> windows;
    const double ppd = static_cast<double>(points_per_decade);
    long j = static_cast<long>(std::floor(ppd * std::log10(r_lo))) + 1;
    for (;; ++j) {
        const double R = std::pow(10.0, static_cast<double>(j) / ppd);
        if (R > R_max * (1.0 + 1e-12)) break;
        for (double r : rs)
            if (R > r * (1.0 + 1e-12)) windows.push_back({r, R});
    }
    return WindowGrid(std::move(windows));
}

} // namespace zd
