#pragma once

#include <cmath>
#include <stdexcept>

namespace blowlab {

inline double kappa_of(double p) { return std::pow(p - 1.0, -1.0 / (p - 1.0)); }

/// Universal blowup profile f(eta) = (p-1 + (p-1)^2 eta^2 / (4p))^{-1/(p-1)}.
inline double blowup_profile(double eta, double p) {
    const double pm1 = p - 1.0;
    return std::pow(pm1 + pm1 * pm1 / (4.0 * p) * eta * eta, -1.0 / pm1);
}

/// Profile with its 1/s correction: f(z/sqrt(s)) + kappa/(2 p s).
inline double profile_phi(double z, double s, double p) {
    return blowup_profile(z / std::sqrt(s), p) + kappa_of(p) / (2.0 * p * s);
}

/// Gaussian weight mu(z) = e^{-z^2/4} / sqrt(4 pi) of the similarity operator.
inline double gaussian_weight(double z) {
    return std::exp(-z * z / 4.0) / std::sqrt(4.0 * M_PI);
}

/// Eigenfunction h_m(z) = sum_n m! / (n! (m-2n)!) (-1)^n z^{m-2n} of
/// d^2/dz^2 - (z/2) d/dz + 1: a rescaled Hermite polynomial, evaluated by
/// the stable three-term recurrence h_{m+1} = z h_m - 2 m h_{m-1}.
inline double hermite_h(int m, double z) {
    if (m < 0 || m > 10) throw std::invalid_argument("hermite_h: order out of range");
    double hm1 = 1.0;        // h_0
    if (m == 0) return hm1;
    double h = z;            // h_1
    for (int k = 1; k < m; ++k) {
        const double next = z * h - 2.0 * k * hm1;
        hm1 = h;
        h = next;
    }
    return h;
}

/// Squared weighted norm: integral of h_m^2 d(mu) = 2^m m!.
inline double hermite_norm_sq(int m) {
    double r = 1.0;
    for (int k = 1; k <= m; ++k) r *= 2.0 * k;
    return r;
}

/// Dual eigenfunction k_m = h_m / ||h_m||^2.
inline double hermite_dual(int m, double z) {
    return hermite_h(m, z) / hermite_norm_sq(m);
}

}  // namespace blowlab
