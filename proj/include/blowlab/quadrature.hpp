#pragma once

#include <functional>
#include <vector>

namespace blowlab {

/// Gauss-Hermite rule for integrals against e^{-u^2} on the real line.
/// Nodes/weights from the Golub-Welsch eigenproblem of the Jacobi matrix.
struct GaussHermiteRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit GaussHermiteRule(int n);

    /// integral of g(u) e^{-u^2} du
    double integrate(const std::function<double(double)>& g) const;
};

/// Shared 128-node rule (spec'd default for all d(mu) integrals).
const GaussHermiteRule& mu_rule();

/// integral of g(z) d(mu)(z), mu = e^{-z^2/4}/sqrt(4 pi), via z = 2u.
double integrate_mu(const std::function<double(double)>& g);

/// Same, but g is only trusted on |z| <= z_max; outside, `tail` supplies the
/// extension value (pass nullptr to extend by zero). Returns the integral and
/// writes the absolute tail contribution into *tail_mass when non-null.
double integrate_mu_truncated(const std::function<double(double)>& g, double z_max,
                              const std::function<double(double)>& tail,
                              double* tail_mass = nullptr);

}  // namespace blowlab
