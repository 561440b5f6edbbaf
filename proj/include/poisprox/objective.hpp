#pragma once

#include <limits>
#include <span>

#include "poisprox/dictionary.hpp"
#include "poisprox/image.hpp"
#include "poisprox/linop.hpp"
#include "poisprox/prox.hpp"

namespace poisprox {

enum class InfinityReason { none, negative_pixel, zero_intensity_positive_count };

// Value in (-inf, +inf]; never NaN, never -inf. Infinite values carry the
// reason they left the domain.
struct ExtendedReal {
    double value = 0.0;
    InfinityReason reason = InfinityReason::none;

    bool finite() const { return reason == InfinityReason::none; }

    static ExtendedReal of(double v) { return {v, InfinityReason::none}; }
    static ExtendedReal infinite(InfinityReason r) {
        return {std::numeric_limits<double>::infinity(), r};
    }
};

// Poisson anti log-likelihood fidelity: sum over pixels of
//   y[i] > 0:  -y[i] log(eta[i]) + eta[i]   for eta[i] > 0, else +inf
//   y[i] = 0:  eta[i]                        for eta[i] >= 0, else +inf
ExtendedReal eval_fidelity(std::span<const double> eta, const CountMap& y);

// Psi(alpha); non-negative, zero iff alpha = 0 for admissible penalties.
double eval_penalty(std::span<const double> alpha, const PenaltySpec& spec);

// One deconvolution problem: counts y, blur H, dictionary Phi, gamma > 0,
// and the sparsity penalty. Built through make_problem, which validates
// dimensions and checks that a feasible point with finite objective exists.
struct ProblemInstance {
    CountMap y;
    LinOpPtr blur;
    Dictionary dict;
    double gamma = 0.0;
    PenaltySpec penalty;

    std::size_t image_dim() const { return y.size(); }
    std::size_t coeff_dim() const { return dict.synthesis->input_dim(); }
};

ProblemInstance make_problem(CountMap y, LinOpPtr blur, Dictionary dict, double gamma,
                             PenaltySpec penalty);

// J(alpha) = f1(H Phi alpha) + gamma Psi(alpha) + indicator(Phi alpha >= 0).
// Pixel values of Phi alpha in [-1e-12, 0) are treated as zero before the
// positivity check (floating-point slop from frame round-trips).
ExtendedReal eval_objective(std::span<const double> alpha, const ProblemInstance& inst);

// Objective terms evaluated at the positive part of Phi alpha, which is what
// iteration traces report: mid-run iterates can carry small infeasibilities
// that vanish at convergence. pos_violation is the norm of the negative part
// of Phi alpha.
struct ObjectiveBreakdown {
    double objective = 0.0;  // +inf allowed
    double fidelity = 0.0;   // +inf allowed
    double penalty = 0.0;
    double pos_violation = 0.0;
};

ObjectiveBreakdown eval_objective_positive_part(std::span<const double> alpha,
                                                const ProblemInstance& inst);

// Mean absolute pixel error between a reconstruction and the ground truth.
double mae(const ImageGrid& x_hat, const ImageGrid& x_true);

}  // namespace poisprox
