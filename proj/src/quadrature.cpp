#include "blowlab/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace blowlab {

GaussHermiteRule::GaussHermiteRule(int n) {
    if (n < 1) throw std::invalid_argument("GaussHermiteRule: need n >= 1");
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double beta = std::sqrt(k / 2.0);
        jacobi(k, k - 1) = beta;
        jacobi(k - 1, k) = beta;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("GaussHermiteRule: eigensolve failed");
    nodes.resize(n);
    weights.resize(n);
    const double mu0 = std::sqrt(M_PI);  // integral of e^{-u^2}
    for (int i = 0; i < n; ++i) {
        nodes[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        weights[i] = mu0 * v0 * v0;
    }
}

double GaussHermiteRule::integrate(const std::function<double(double)>& g) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * g(nodes[i]);
    return acc;
}

const GaussHermiteRule& mu_rule() {
    static const GaussHermiteRule rule(128);
    return rule;
}

double integrate_mu(const std::function<double(double)>& g) {
    // z = 2u maps d(mu) to e^{-u^2}/sqrt(pi) du
    const auto& rule = mu_rule();
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * g(2.0 * rule.nodes[i]);
    return acc / std::sqrt(M_PI);
}

double integrate_mu_truncated(const std::function<double(double)>& g, double z_max,
                              const std::function<double(double)>& tail,
                              double* tail_mass) {
    const auto& rule = mu_rule();
    double acc = 0.0, tacc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double z = 2.0 * rule.nodes[i];
        if (std::abs(z) <= z_max) {
            acc += rule.weights[i] * g(z);
        } else if (tail) {
            const double contrib = rule.weights[i] * tail(z);
            acc += contrib;
            tacc += std::abs(contrib);
        }
    }
    if (tail_mass) *tail_mass = tacc / std::sqrt(M_PI);
    return acc / std::sqrt(M_PI);
}

}  // namespace blowlab
