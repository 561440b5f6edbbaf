#include "poisprox/power_method.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "poisprox/image.hpp"

namespace poisprox {

SpectralEstimate estimate_spectral_norm(const LinearOperator& op, double tol, int max_iters) {
    if (tol <= 0.0) throw std::invalid_argument("estimate_spectral_norm: tol must be positive");
    if (max_iters < 1)
        throw std::invalid_argument("estimate_spectral_norm: max_iters must be positive");

    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::vector<double> v(op.input_dim());
    for (double& x : v) x = 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
    double vn = norm2(v);
    for (double& x : v) x /= vn;

    std::vector<double> av(op.output_dim());
    std::vector<double> w(op.input_dim());
    double sigma = 0.0;
    for (int it = 1; it <= max_iters; ++it) {
        op.apply(v, av);
        op.apply_adjoint(av, w);
        const double lambda = norm2(w);  // ~ ||A||^2 for unit v
        if (lambda == 0.0) return {0.0, true, it};
        const double sigma_new = std::sqrt(lambda);
        const bool settled = it > 1 && std::abs(sigma_new - sigma) <= tol * sigma_new;
        sigma = sigma_new;
        if (settled) return {sigma, true, it};
        for (std::size_t i = 0; i < w.size(); ++i) v[i] = w[i] / lambda;
    }
    return {sigma, false, max_iters};
}

}  // namespace poisprox
