#pragma once

#include "zd/window.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zd {

/// ln|f(iy)| along the imaginary axis. eval is queried at both signs of y;
/// -inf is tolerated at isolated points only. singular_points lists known
/// axis zeros (by their y coordinate; sign is ignored, the integrand pairs
/// +-y anyway).
struct LogModulus {
    std::function<double(double)> eval;
    std::vector<double> singular_points{};
};

/// Subdivision budget exhausted; carries the worst remaining subinterval.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(double a, double b, double err);
    double a, b, err;
};

/// J(r,R; v) = (1/2pi) Integral_r^R (v(-y) + v(y)) / y^2 dy by adaptive
/// Gauss-Kronrod bisection with absolute target tol. Declared singular
/// points are isolated by geometric refinement down to width 1e-12.
double axis_integral(const LogModulus& v, double r, double R, double tol = 1e-8);

/// Elementwise axis_integral over the grid. Windows with shared endpoints
/// reuse the integrals of the elementary segments between endpoints.
std::vector<double> axis_integral_grid(const LogModulus& v, const WindowGrid& grid,
                                       double tol = 1e-8);

} // namespace zd
