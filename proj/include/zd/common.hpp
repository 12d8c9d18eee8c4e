#pragma once

#include <cmath>
#include <cstddef>
#include <functional>

namespace zd {

inline constexpr const char* kVersion = "0.1.0";

// Neumaier compensated accumulator. Summation order still matters for
// bit-stability, so callers fix the order before accumulating.
class StableSum {
public:
    StableSum() = default;
    explicit StableSum(double init) : sum_(init) {}

    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            carry_ += (sum_ - t) + x;
        else
            carry_ += (x - t) + sum_;
        sum_ = t;
    }

    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

// Process-wide worker count used by parallel_for. 1 = fully sequential.
void set_thread_count(unsigned n);
unsigned thread_count();

// Runs fn(i) for i in [0, n). Results must go into per-index slots; the
// index->work mapping is fixed, so output does not depend on the worker
// count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace zd
