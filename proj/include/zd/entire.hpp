#pragma once

#include "zd/axis_integral.hpp"
#include "zd/zero_sequence.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace zd {

/// Even canonical product z -> prod_k (1 - z^2 / w_k^2) with all w_k in
/// the open right half-plane; its zero set is {±w_k}.
class CanonicalProduct {
public:
    CanonicalProduct() = default;

    /// Throws std::invalid_argument if any point has Re w_k <= 0.
    explicit CanonicalProduct(ZeroSequence zeros);

    const ZeroSequence& zeros() const { return zeros_; }
    bool empty() const { return zeros_.empty(); }

    /// Zero set with multiplicity: zeros and their negatives.
    ZeroSequence full_zero_set() const;

private:
    ZeroSequence zeros_;
};

/// Sum over k of ln|1 - z^2/w_k^2|; -inf exactly at z = ±w_k. Evaluated
/// term by term as logs, with a fixed-block pairwise reduction so the
/// result is bit-stable regardless of the worker count.
double product_log_modulus(const CanonicalProduct& p, std::complex<double> z);

/// ln|sin(pi b * iy)| = ln sinh(pi b |y|), evaluated without overflow.
/// b == 0 degenerates to the zero function; returns -inf.
double sin_log_modulus(double b, double y);

struct IndicatorEstimate {
    double value = 0.0;      // max over the tail fraction of ln|f(r e^{i theta})| / r
    double r_lo = 0.0;       // window actually used
    double r_hi = 0.0;
    std::size_t skipped = 0; // -inf samples skipped (ray hit zeros)
};

/// Finite-window estimate of the indicator h_f(theta) along one ray.
IndicatorEstimate indicator_estimate(const std::function<double(double)>& logmod_along_ray,
                                     const std::vector<double>& r_grid,
                                     double tail_fraction = 0.5);

/// Convex polygon (possibly a segment or point), given by its vertices.
struct ConvexCompactPoly {
    std::vector<std::complex<double>> vertices;
};

/// s_K(theta) = max over vertices of Re(v e^{-i theta}).
double support_function(const ConvexCompactPoly& k, double theta);

/// wid_0(K) = s_K(-pi/2) + s_K(pi/2) = vertical extent.
double width0(const ConvexCompactPoly& k);

/// Adapter: y -> product_log_modulus(p, iy) as a LogModulus. Right-half-
/// plane zeros never meet the axis, so no singular points are declared.
LogModulus product_axis_logmod(const CanonicalProduct& p);

/// LogModulus of sin(pi b z) on the axis (no axis zeros for y != 0).
LogModulus sin_axis_logmod(double b);

} // namespace zd
