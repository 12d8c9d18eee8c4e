#pragma once

#include "zd/window.hpp"
#include "zd/zero_sequence.hpp"

#include <vector>

namespace zd {

enum class HalfPlane { right, left };

/// Sum of Re(1/z_k) (right) or Re(-1/z_k) (left) over points with
/// r < |z_k| <= R lying strictly in the corresponding open half-plane.
/// Points on the imaginary axis contribute to neither side.
/// Accumulated in ascending order of modulus with compensated summation.
double half_plane_log_sum(const ZeroSequence& z, double r, double R, HalfPlane side);

/// l_Z(r, R) = max of the two half-plane sums.
double log_sum(const ZeroSequence& z, double r, double R);

struct LogSumRow {
    double r, R, l_rh, l_lh, l;
};

std::vector<LogSumRow> log_sum_table(const ZeroSequence& z, const WindowGrid& grid);

/// Points with Re z_k == 0 exactly; they are counted but never summed.
std::size_t imaginary_axis_count(const ZeroSequence& z);

} // namespace zd
