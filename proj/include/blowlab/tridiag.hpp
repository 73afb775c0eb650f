#pragma once

#include <stdexcept>
#include <vector>

namespace blowlab {

/// Thomas solve for a constant-coefficient tridiagonal matrix with identity
/// rows at both ends (Dirichlet). The elimination coefficients depend only on
/// the matrix, so they are precomputed once and reused every step.
class DirichletTridiag {
public:
    DirichletTridiag(std::size_t n, double lower, double diag, double upper)
        : n_(n), lower_(lower), cprime_(n, 0.0), inv_denom_(n, 1.0), dprime_(n, 0.0) {
        if (n < 3) throw std::invalid_argument("DirichletTridiag: need n >= 3");
        for (std::size_t i = 1; i + 1 < n_; ++i) {
            const double denom = diag - lower * cprime_[i - 1];
            inv_denom_[i] = 1.0 / denom;
            cprime_[i] = upper * inv_denom_[i];
        }
    }

    void solve(std::vector<double>& rhs) {
        dprime_[0] = rhs[0];
        for (std::size_t i = 1; i + 1 < n_; ++i)
            dprime_[i] = (rhs[i] - lower_ * dprime_[i - 1]) * inv_denom_[i];
        // identity end row: rhs[n-1] already holds the solution there
        for (std::size_t i = n_ - 1; i-- > 0;)
            rhs[i] = dprime_[i] - cprime_[i] * rhs[i + 1];
    }

private:
    std::size_t n_;
    double lower_;
    std::vector<double> cprime_, inv_denom_, dprime_;
};

}  // namespace blowlab
