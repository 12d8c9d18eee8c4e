#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace zd {

/// Finite multiset of nonzero complex points. Repetition encodes
/// multiplicity; ordering never affects any computed characteristic.
class ZeroSequence {
public:
    ZeroSequence() = default;

    /// Throws std::invalid_argument on non-finite points or points at the
    /// origin (every downstream formula takes 1/z_k).
    explicit ZeroSequence(std::vector<std::complex<double>> points);

    const std::vector<std::complex<double>>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    /// Multiset union: counting measures add.
    static ZeroSequence concat(const ZeroSequence& a, const ZeroSequence& b);

private:
    std::vector<std::complex<double>> points_;
};

/// Number of points (with multiplicity) of modulus <= r.
std::size_t radial_counting(const ZeroSequence& z, double r);

/// Finite-window estimate of the upper density limsup n(r)/r: the sup over
/// r >= r_min, attained either at r_min or at a jump point |z_k| >= r_min.
double upper_density(const ZeroSequence& z, double r_min);

inline constexpr double kDefaultSeparationThreshold = 0.01;

struct SeparationReport {
    double margin = 1.0;       // inf over the tail of |Re z_k| / |z_k|, in [0,1]
    std::size_t tail_start = 0;
    double threshold = kDefaultSeparationThreshold;
    bool separated = true;     // margin > threshold
};

/// Tail infimum of |Re z_k|/|z_k| from the 0-based index tail_start on.
/// tail_start must be < size for nonempty sequences; an empty sequence
/// reports margin 1 (vacuously separated).
SeparationReport separation_margin(const ZeroSequence& z, std::size_t tail_start = 0,
                                   double threshold = kDefaultSeparationThreshold);

} // namespace zd
