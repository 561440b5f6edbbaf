#pragma once

#include <functional>
#include <span>
#include <vector>

#include "poisprox/image.hpp"

namespace poisprox {

// Separable sparsity penalty Psi(alpha) = sum_i psi(alpha[i]).
// psi must be convex, even, non-decreasing on R+, psi(0) = 0, and admit a
// positive right derivative at zero. The l1 kind is psi(t) = |t|.
struct PenaltySpec {
    enum class Kind { l1, generic };

    Kind kind = Kind::l1;
    std::function<double(double)> psi;   // psi(t)
    std::function<double(double)> dpsi;  // psi'(t) on (0, inf)
    double right_deriv_zero = 1.0;       // psi'_+(0)

    static PenaltySpec l1();
    // Validates admissibility on sampled points; throws on violations.
    static PenaltySpec generic(std::function<double(double)> psi,
                               std::function<double(double)> dpsi,
                               double right_deriv_zero);

    double eval(double t) const;
};

// Componentwise proximity operator of beta * (Poisson anti log-likelihood):
// (x[i] - beta + sqrt((x[i] - beta)^2 + 4 beta y[i])) / 2, evaluated in a
// cancellation-free form. Output is strictly positive where y[i] > 0 and
// non-negative where y[i] = 0.
std::vector<double> prox_poisson(std::span<const double> x, double beta, const CountMap& y);

// sign(b) * max(|b| - delta, 0); delta >= 0.
std::vector<double> soft_threshold(std::span<const double> b, double delta);

// Proximity operator of delta * Psi. The l1 kind reduces to soft
// thresholding; the generic kind solves a = b - delta * psi'(a) per
// coordinate by bisection-safeguarded root finding on (0, |b|].
std::vector<double> prox_penalty(std::span<const double> b, double delta,
                                 const PenaltySpec& spec);

// Projection onto the positive orthant.
std::vector<double> project_nonneg(std::span<const double> v);

}  // namespace poisprox
