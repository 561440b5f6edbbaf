#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poisprox/image.hpp"
#include "poisprox/objective.hpp"
#include "poisprox/trace.hpp"

namespace poisprox {

// Relaxation values are kept inside [kThetaMin, 2 - kThetaMin] so that
// sum theta_t (2 - theta_t) diverges.
inline constexpr double kThetaMin = 1e-3;

struct PrimalConfig {
    double mu = 1.0;     // proximal scale
    double theta = 1.8;  // constant relaxation, used when schedule is empty
    std::vector<double> theta_schedule;  // optional; cycled over iterations
    std::size_t n_iter = 500;
    // stop once the relative objective change over 50 iterations drops
    // below 1e-10 (trace then ends early)
    bool early_stop = false;

    double theta_at(std::size_t t) const {
        return theta_schedule.empty() ? theta : theta_schedule[t % theta_schedule.size()];
    }
};

struct PrimalDualConfig {
    double sigma = 0.0;
    double tau = 0.0;
    double zeta = 0.0;  // verified bound with zeta >= ||Phi||^2 (1 + ||H||^2)
    std::size_t n_iter = 500;
    bool early_stop = false;

    // Warm start; defaults to the all-zero initialization.
    std::optional<CoeffVector> alpha0;
    std::optional<std::vector<double>> xi0;
    std::optional<std::vector<double>> eta0;

    static PrimalDualConfig from_zeta(double zeta, std::size_t n_iter);
};

struct Solution {
    CoeffVector alpha_hat;
    ImageGrid x_hat;  // non-negative reconstruction
    double final_objective = 0.0;
    bool converged = false;
    std::string criterion;
};

// Feasibility and consensus diagnostics of the final primal iterate.
struct PrimalDiagnostics {
    double resid_ker_l1 = 0.0;  // ||x1 - Phi alpha|| of z at the last iteration
    double resid_ker_l2 = 0.0;  // ||x2 - H x1|| of z at the last iteration
    double x1_norm = 0.0;
    double consensus_spread_early = 0.0;  // ||p1-p2|| + ||p2-p3|| at t = 10
    double consensus_spread_final = 0.0;  // same at the last iteration
};

struct RunResult {
    Solution solution;
    SolverTrace trace;
    std::optional<PrimalDiagnostics> primal_diagnostics;
};

// sigma = tau = 0.95 / sqrt(zeta), so that sigma * tau * zeta = 0.9025 < 1.
std::pair<double, double> suggest_steps(double zeta);

// Inflated power-method bound ||Phi||^2 (1 + ||H||^2) for the step-size rule.
double compute_zeta(const ProblemInstance& inst, double tol = 1e-6);

// Product-space scheme: averages the separable prox of the fidelity,
// penalty and positivity terms with the two kernel projectors, then applies
// the relaxed update. Rejects invalid relaxation schedules before iterating.
RunResult solve_primal(const ProblemInstance& inst, const PrimalConfig& cfg,
                       const ImageGrid* x_true = nullptr);

// Primal-dual scheme: dual ascent on the fidelity and positivity channels
// via the Moreau identity, proximal descent on the coefficients, plus
// extrapolation. Rejects sigma * tau * zeta >= 1 before iterating.
RunResult solve_primal_dual(const ProblemInstance& inst, const PrimalDualConfig& cfg,
                            const ImageGrid* x_true = nullptr);

struct GapRate {
    double ratio = 0.0;
    // set when the gap at t_hi has hit floating-point floor; ratio is 1 when
    // the trace is flat (stagnation) and +inf otherwise
    bool exact_convergence = false;
};

// Suboptimality ratio (J(t_lo) - J_ref) / (J(t_hi) - J_ref) with J_ref the
// best objective in the trace; about t_hi / t_lo under O(1/t) decay.
GapRate objective_gap_rate(const SolverTrace& trace, std::size_t t_lo, std::size_t t_hi);

}  // namespace poisprox
