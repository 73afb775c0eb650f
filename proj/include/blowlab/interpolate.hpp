#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace blowlab {

/// Cubic (4-point Lagrange) interpolation of samples on a uniform grid
/// x_i = x0 + i h. Clamps to the boundary stencil near the ends and to the
/// end values outside the grid.
inline double cubic_interp_uniform(const std::vector<double>& y, double x0, double h,
                                   double x) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(y.size());
    if (n == 0) return 0.0;
    if (n == 1) return y[0];
    const double t = (x - x0) / h;
    if (t <= 0.0) return y.front();
    if (t >= static_cast<double>(n - 1)) return y.back();
    if (n < 4) {  // fall back to linear
        const std::ptrdiff_t i = std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(t), n - 2);
        const double f = t - i;
        return (1.0 - f) * y[i] + f * y[i + 1];
    }
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(std::floor(t));
    i = std::clamp<std::ptrdiff_t>(i - 1, 0, n - 4);
    const double s = t - (i + 1);  // offset from the second stencil point
    const double ym = y[i], y0v = y[i + 1], y1 = y[i + 2], y2 = y[i + 3];
    const double a = -ym / 6.0 + y0v / 2.0 - y1 / 2.0 + y2 / 6.0;
    const double b = ym / 2.0 - y0v + y1 / 2.0;
    const double c = -ym / 3.0 - y0v / 2.0 + y1 - y2 / 6.0;
    return ((a * s + b) * s + c) * s + y0v;
}

/// Cubic interpolation on a sorted, possibly non-uniform grid (Lagrange on
/// the 4 nearest nodes). Outside the grid returns `outside`.
inline double cubic_interp_sorted(const std::vector<double>& xs, const std::vector<double>& ys,
                                  double x, double outside = 0.0) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(xs.size());
    if (n == 0) return outside;
    if (x < xs.front() || x > xs.back()) return outside;
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    std::ptrdiff_t i = std::distance(xs.begin(), it) - 1;
    std::ptrdiff_t lo = std::clamp<std::ptrdiff_t>(i - 1, 0, std::max<std::ptrdiff_t>(n - 4, 0));
    const std::ptrdiff_t m = std::min<std::ptrdiff_t>(4, n);
    double acc = 0.0;
    for (std::ptrdiff_t j = lo; j < lo + m; ++j) {
        double lagr = 1.0;
        for (std::ptrdiff_t k = lo; k < lo + m; ++k)
            if (k != j) lagr *= (x - xs[k]) / (xs[j] - xs[k]);
        acc += lagr * ys[j];
    }
    return acc;
}

}  // namespace blowlab
