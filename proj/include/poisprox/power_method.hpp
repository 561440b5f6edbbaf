#pragma once

#include "poisprox/linop.hpp"

namespace poisprox {

struct SpectralEstimate {
    double value = 0.0;
    bool converged = false;
    int iterations = 0;
};

// Power iteration on A^T A with a deterministic random start vector.
// A converged estimate is within relative tol of ||A||; callers inflate by
// (1 + tol) where an upper bound is required. When max_iters runs out the
// best estimate is returned with converged = false.
SpectralEstimate estimate_spectral_norm(const LinearOperator& op,
                                        double tol = 1e-6,
                                        int max_iters = 1000);

}  // namespace poisprox
