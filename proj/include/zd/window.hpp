#pragma once

#include <cstddef>
#include <vector>

namespace zd {

/// One (r, R] annulus window, 0 < r < R.
struct Window {
    double r = 0.0;
    double R = 0.0;
};

class WindowGrid {
public:
    WindowGrid() = default;

    /// Throws std::invalid_argument unless 0 < r < R for every pair.
    explicit WindowGrid(std::vector<Window> windows);

    /// Pairs (r, 10^(j/ppd)) for every r in r_list and every lattice value
    /// up to R_max, ordered by R then r. The R lattice starts just above
    /// the smallest r.
    static WindowGrid log_spaced(const std::vector<double>& r_list, double R_max,
                                 int points_per_decade);

    const std::vector<Window>& windows() const { return windows_; }
    std::size_t size() const { return windows_.size(); }
    bool empty() const { return windows_.empty(); }

private:
    std::vector<Window> windows_;
};

} // namespace zd
