#pragma once

#include "zd/zero_sequence.hpp"

#include <string>
#include <utility>
#include <vector>

namespace zd {

enum class GrowthKind {
    q_like, // nondecreasing, Q(x)/x expected to tend to 0; linear-slope tail
    d_like, // expected to tend to 0; constant tail
};

/// Sampled monotone growth function on [x_front, +inf). Between samples:
/// linear interpolation. Beyond the last sample: the declared tail rule
/// (constant for d-like, continuation of the last slope for Q-like).
/// Below the first sample the front value is used.
class GrowthFunction {
public:
    GrowthFunction() = default;

    /// samples: (x, value) with x strictly increasing and values >= 0;
    /// q_like additionally requires nondecreasing values.
    GrowthFunction(GrowthKind kind, std::vector<std::pair<double, double>> samples);

    double operator()(double x) const;

    GrowthKind kind() const { return kind_; }
    const std::vector<std::pair<double, double>>& samples() const { return samples_; }
    double front_x() const { return samples_.front().first; }
    double back_x() const { return samples_.back().first; }

private:
    GrowthKind kind_ = GrowthKind::d_like;
    std::vector<std::pair<double, double>> samples_;
};

struct TransformResult {
    GrowthFunction fn;
    std::vector<std::string> warnings;
};

/// First direction of the growth lemma: from an increasing Q with
/// Q(x)/x -> 0 build a nonincreasing d with
///   Integral_r^R Q(x)/x^2 dx <= d(R) ln(R/r)  for r0 <= r < R.
/// Construction: eps(t) = sup_{x>=t} Q(x)/x, then
///   d(R) = sup_{r in [r0,R)} (Integral_r^R eps(x)/x dx) / ln(R/r) + eps(R),
/// made nonincreasing by a suffix max; the inequality is re-verified on the
/// grid and violations are reported as warnings. The eps(R) margin keeps d
/// strictly above the minimal admissible envelope.
TransformResult q_to_d(const GrowthFunction& q, double r0, const std::vector<double>& R_grid);

/// Second direction: from d with d(R) -> 0 build an increasing Q with
///   d(R) ln(R/r) <= Integral_r^R Q(x)/x^2 dx.
/// Construction: delta(t) = sup_{s>=t} d(s), then Q(x) = sup_{t<=x} t*delta(t).
TransformResult d_to_q(const GrowthFunction& d, double r0, const std::vector<double>& x_grid);

/// Positive sequence with counting function floor(Q(r)): the k-th point is
/// the left-continuous generalized inverse inf{ r : Q(r) >= k }, solved
/// exactly on the linear interpolant segment by segment.
ZeroSequence synthesize_sequence(const GrowthFunction& q, double r_max);

/// Pointwise negation.
ZeroSequence mirror_sequence(const ZeroSequence& s);

} // namespace zd
