#include "zd/growth.hpp"

#include "zd/common.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zd {

namespace {

// Dense log-spaced abscissae for internal sup/integral evaluation.
std::vector<double> dense_log_grid(double lo, double hi, std::size_t per_decade = 200) {
    std::vector<double> xs;
    const double llo = std::log10(lo), lhi = std::log10(hi);
    const std::size_t n =
        std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil((lhi - llo) * per_decade)) + 1);
    xs.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        xs.push_back(std::pow(10.0, llo + (lhi - llo) * static_cast<double>(i) /
                                              static_cast<double>(n - 1)));
    xs.front() = lo;
    xs.back() = hi;
    return xs;
}

} // namespace

GrowthFunction::GrowthFunction(GrowthKind kind,
                               std::vector<std::pair<double, double>> samples)
    : kind_(kind), samples_(std::move(samples)) {
    if (samples_.empty())
        throw std::invalid_argument("GrowthFunction: no samples");
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        const auto& [x, v] = samples_[i];
        if (!(x > 0.0) || !std::isfinite(x) || !(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("GrowthFunction: samples need x > 0, value >= 0");
        if (i > 0 && !(x > samples_[i - 1].first))
            throw std::invalid_argument("GrowthFunction: x must be strictly increasing");
        if (kind_ == GrowthKind::q_like && i > 0 && v < samples_[i - 1].second)
            throw std::invalid_argument("GrowthFunction: q_like values must be nondecreasing");
    }
}

double GrowthFunction::operator()(double x) const {
    if (x <= samples_.front().first) return samples_.front().second;
    if (x >= samples_.back().first) {
        if (kind_ == GrowthKind::d_like || samples_.size() == 1)
            return samples_.back().second;
        const auto& [x1, v1] = samples_[samples_.size() - 2];
        const auto& [x2, v2] = samples_.back();
        const double slope = (v2 - v1) / (x2 - x1);
        return std::max(0.0, v2 + slope * (x - x2));
    }
    const auto it = std::lower_bound(
        samples_.begin(), samples_.end(), x,
        [](const std::pair<double, double>& s, double xx) { return s.first < xx; });
    const auto& [x2, v2] = *it;
    if (x2 == x) return v2;
    const auto& [x1, v1] = *(it - 1);
    const double t = (x - x1) / (x2 - x1);
    return v1 + t * (v2 - v1);
}

TransformResult q_to_d(const GrowthFunction& q, double r0,
                       const std::vector<double>& R_grid) {
    if (q.kind() != GrowthKind::q_like)
        throw std::invalid_argument("q_to_d: input must be Q-like");
    if (!(r0 > 0.0)) throw std::invalid_argument("q_to_d: r0 must be > 0");
    if (R_grid.empty()) throw std::invalid_argument("q_to_d: empty R grid");
    for (std::size_t i = 0; i < R_grid.size(); ++i)
        if (!(R_grid[i] > r0) || (i > 0 && !(R_grid[i] > R_grid[i - 1])))
            throw std::invalid_argument("q_to_d: R grid must be increasing and > r0");

    TransformResult out;
    const double R_max = R_grid.back();
    const std::vector<double> xs = dense_log_grid(r0, R_max);
    const std::size_t n = xs.size();

    // eps(t) = sup_{x >= t} Q(x)/x over the evaluated range.
    std::vector<double> eps(n);
    for (std::size_t i = 0; i < n; ++i) eps[i] = q(xs[i]) / xs[i];
    for (std::size_t i = n - 1; i-- > 0;) eps[i] = std::max(eps[i], eps[i + 1]);

    if (eps.front() > 0.0 && eps.back() > 0.9 * eps.front())
        out.warnings.push_back(
            "q_to_d: Q(x)/x does not tend down over the sampled range; "
            "the Q(x)/x -> 0 hypothesis appears violated");

    // Cumulative trapezoid of eps(x)/x dx = eps d(ln x).
    std::vector<double> cum(n, 0.0);
    {
        StableSum acc;
        for (std::size_t i = 1; i < n; ++i) {
            acc.add(0.5 * (eps[i - 1] + eps[i]) * std::log(xs[i] / xs[i - 1]));
            cum[i] = acc.value();
        }
    }

    std::vector<double> d_raw(R_grid.size());
    for (std::size_t k = 0; k < R_grid.size(); ++k) {
        const double R = R_grid[k];
        const auto hi =
            static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), R) - xs.begin());
        const std::size_t iR = std::min(hi, n - 1);
        double best = 0.0;
        for (std::size_t i = 0; i < iR; ++i) {
            const double lnratio = std::log(R / xs[i]);
            if (lnratio < 1e-9) break;
            best = std::max(best, (cum[iR] - cum[i]) / lnratio);
        }
        d_raw[k] = best + eps[iR]; // margin term: stays above the minimal envelope
    }
    // Nonincreasing by construction up to grid noise; enforce via suffix max.
    for (std::size_t k = d_raw.size() - 1; k-- > 0;)
        d_raw[k] = std::max(d_raw[k], d_raw[k + 1]);

    std::vector<std::pair<double, double>> samples;
    samples.reserve(R_grid.size());
    for (std::size_t k = 0; k < R_grid.size(); ++k) samples.emplace_back(R_grid[k], d_raw[k]);
    out.fn = GrowthFunction(GrowthKind::d_like, std::move(samples));

    // Post-hoc check of the defining inequality on grid pairs.
    std::vector<double> cumQ(n, 0.0);
    {
        StableSum acc;
        for (std::size_t i = 1; i < n; ++i) {
            acc.add(0.5 * (q(xs[i - 1]) / (xs[i - 1] * xs[i - 1]) + q(xs[i]) / (xs[i] * xs[i])) *
                    (xs[i] - xs[i - 1]));
            cumQ[i] = acc.value();
        }
    }
    for (std::size_t k = 0; k < R_grid.size(); ++k) {
        const double R = R_grid[k];
        const auto iR = std::min(
            static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), R) - xs.begin()),
            n - 1);
        for (std::size_t i = 0; i < iR; i += std::max<std::size_t>(1, iR / 64)) {
            const double lnratio = std::log(R / xs[i]);
            if (lnratio < 1e-9) continue;
            if (cumQ[iR] - cumQ[i] > out.fn(R) * lnratio + 1e-9) {
                out.warnings.push_back("q_to_d: constructed d violates the integral bound");
                break;
            }
        }
    }
    return out;
}

TransformResult d_to_q(const GrowthFunction& d, double r0,
                       const std::vector<double>& x_grid) {
    if (d.kind() != GrowthKind::d_like)
        throw std::invalid_argument("d_to_q: input must be d-like");
    if (!(r0 > 0.0)) throw std::invalid_argument("d_to_q: r0 must be > 0");
    if (x_grid.empty()) throw std::invalid_argument("d_to_q: empty x grid");
    for (std::size_t i = 0; i < x_grid.size(); ++i)
        if (!(x_grid[i] >= r0) || (i > 0 && !(x_grid[i] > x_grid[i - 1])))
            throw std::invalid_argument("d_to_q: x grid must be increasing and >= r0");

    TransformResult out;
    const std::vector<double> ts = dense_log_grid(r0, x_grid.back());
    const std::size_t n = ts.size();

    // delta(t) = sup_{s >= t} d(s); the d-like tail rule is constant, so
    // the sup over [t, inf) is attained within the evaluated range.
    std::vector<double> delta(n);
    for (std::size_t i = 0; i < n; ++i) delta[i] = d(ts[i]);
    for (std::size_t i = n - 1; i-- > 0;) delta[i] = std::max(delta[i], delta[i + 1]);

    if (delta.front() > 0.0 && delta.back() > 0.9 * delta.front())
        out.warnings.push_back(
            "d_to_q: d does not tend down over the sampled range; "
            "the d(R) -> 0 hypothesis appears violated");

    // Q(x) = sup_{r0 <= t <= x} t * delta(t), a running prefix max.
    std::vector<double> tq(n);
    for (std::size_t i = 0; i < n; ++i) tq[i] = ts[i] * delta[i];
    for (std::size_t i = 1; i < n; ++i) tq[i] = std::max(tq[i], tq[i - 1]);

    std::vector<std::pair<double, double>> samples;
    samples.reserve(x_grid.size());
    for (double x : x_grid) {
        const auto i = std::min(
            static_cast<std::size_t>(std::lower_bound(ts.begin(), ts.end(), x) - ts.begin()),
            n - 1);
        samples.emplace_back(x, tq[i]);
    }
    for (std::size_t i = 1; i < samples.size(); ++i)
        samples[i].second = std::max(samples[i].second, samples[i - 1].second);
    out.fn = GrowthFunction(GrowthKind::q_like, std::move(samples));
    return out;
}

ZeroSequence synthesize_sequence(const GrowthFunction& q, double r_max) {
    if (q.kind() != GrowthKind::q_like)
        throw std::invalid_argument("synthesize_sequence: input must be Q-like");
    if (!(r_max >= q.front_x()))
        throw std::invalid_argument("synthesize_sequence: r_max below the sampled range");

    const double q_max = q(r_max);
    const long K = static_cast<long>(std::floor(q_max));
    std::vector<std::complex<double>> pts;
    if (K < 1) return ZeroSequence{};
    pts.reserve(static_cast<std::size_t>(K));

    const auto& samples = q.samples();
    for (long k = 1; k <= K; ++k) {
        const double target = static_cast<double>(k);
        double qk;
        // First sample reaching the target, then the exact linear solve on
        // the segment; this is the left-continuous inverse on the interpolant.
        const auto it = std::lower_bound(
            samples.begin(), samples.end(), target,
            [](const std::pair<double, double>& s, double t) { return s.second < t; });
        if (it == samples.begin()) {
            qk = q.front_x();
        } else if (it == samples.end()) {
            // Crossing lies in the linear tail.
            const auto& [x2, v2] = samples.back();
            double slope = 0.0;
            if (samples.size() > 1) {
                const auto& [x1, v1] = samples[samples.size() - 2];
                slope = (v2 - v1) / (x2 - x1);
            }
            qk = slope > 0.0 ? x2 + (target - v2) / slope : r_max;
        } else {
            const auto& [x2, v2] = *it;
            const auto& [x1, v1] = *(it - 1);
            const double t = (target - v1) / (v2 - v1);
            qk = x1 + t * (x2 - x1);
        }
        pts.emplace_back(qk, 0.0);
    }
    return ZeroSequence(std::move(pts));
}

ZeroSequence mirror_sequence(const ZeroSequence& s) {
    std::vector<std::complex<double>> pts;
    pts.reserve(s.size());
    for (const auto& p : s.points()) pts.push_back(-p);
    return ZeroSequence(std::move(pts));
}

} // namespace zd
