#pragma once

#include <cmath>

namespace blowlab {

/// exp(-1/t) for t > 0, else 0. Building block for all C-infinity cutoffs.
inline double bump_seed(double t) {
    return t > 0.0 ? std::exp(-1.0 / t) : 0.0;
}

/// C-infinity monotone bridge: 0 for t <= 0, 1 for t >= 1, symmetric about
/// t = 1/2 where it equals exactly 0.5.
inline double smooth_step01(double t) {
    const double g0 = bump_seed(t);
    const double g1 = bump_seed(1.0 - t);
    if (g0 == 0.0) return 0.0;
    if (g1 == 0.0) return 1.0;
    return g0 / (g0 + g1);
}

/// Plateau cutoff: 1 for |xi| <= 1, 0 for |xi| >= 2, smooth bridge between.
inline double plateau_cutoff(double xi) {
    return smooth_step01(2.0 - std::abs(xi));
}

/// Cutoff pinning the blowup region in similarity variables:
/// plateau_cutoff(z e^{-s/2} / eps0). Equals 1 for |z| <= eps0 e^{s/2} and
/// vanishes for |z| >= 2 eps0 e^{s/2}.
inline double similarity_cutoff(double z, double s, double eps0) {
    return plateau_cutoff(z * std::exp(-s / 2.0) / eps0);
}

/// Inner cutoff selecting the spectral region: plateau_cutoff(|z| / (K0 sqrt(s))).
inline double inner_cutoff(double z, double s, double K0) {
    return plateau_cutoff(std::abs(z) / (K0 * std::sqrt(s)));
}

/// One-sided smooth plateau on [lo1, hi1] rising from 0 on [lo0, lo1] and
/// falling to 0 on [hi1, hi0]; lo0 < lo1 <= hi1 < hi0.
inline double window_cutoff(double x, double lo0, double lo1, double hi1, double hi0) {
    if (x <= lo0 || x >= hi0) return 0.0;
    if (x < lo1) return smooth_step01((x - lo0) / (lo1 - lo0));
    if (x <= hi1) return 1.0;
    return smooth_step01((hi0 - x) / (hi0 - hi1));
}

}  // namespace blowlab
