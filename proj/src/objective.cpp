#include "poisprox/objective.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace poisprox {

namespace {

constexpr double kPositivitySlop = 1e-12;

}  // namespace

ExtendedReal eval_fidelity(std::span<const double> eta, const CountMap& y) {
    if (eta.size() != y.size())
        throw std::invalid_argument("eval_fidelity: expected vector of length " +
                                    std::to_string(y.size()) + ", got " +
                                    std::to_string(eta.size()));
    double sum = 0.0;
    for (std::size_t i = 0; i < eta.size(); ++i) {
        const double e = eta[i];
        if (!std::isfinite(e))
            throw std::invalid_argument("eval_fidelity: eta must be finite");
        if (e < 0.0) return ExtendedReal::infinite(InfinityReason::negative_pixel);
        if (y.counts[i] > 0) {
            if (e == 0.0)
                return ExtendedReal::infinite(InfinityReason::zero_intensity_positive_count);
            sum += e - static_cast<double>(y.counts[i]) * std::log(e);
        } else {
            sum += e;
        }
    }
    return ExtendedReal::of(sum);
}

double eval_penalty(std::span<const double> alpha, const PenaltySpec& spec) {
    double sum = 0.0;
    for (double a : alpha) {
        if (!std::isfinite(a))
            throw std::invalid_argument("eval_penalty: alpha must be finite");
        sum += spec.eval(a);
    }
    return sum;
}

ProblemInstance make_problem(CountMap y, LinOpPtr blur, Dictionary dict, double gamma,
                             PenaltySpec penalty) {
    if (!blur || !dict.synthesis)
        throw std::invalid_argument("make_problem: null operator");
    if (!(gamma > 0.0))
        throw std::invalid_argument("make_problem: gamma must be positive, got " +
                                    std::to_string(gamma));
    const std::size_t n = y.size();
    if (blur->output_dim() != n)
        throw std::invalid_argument("make_problem: blur output length " +
                                    std::to_string(blur->output_dim()) +
                                    " does not match count map length " + std::to_string(n));
    if (dict.synthesis->output_dim() != blur->input_dim())
        throw std::invalid_argument("make_problem: dictionary output length " +
                                    std::to_string(dict.synthesis->output_dim()) +
                                    " does not match blur input length " +
                                    std::to_string(blur->input_dim()));
    if (dict.synthesis->input_dim() < dict.synthesis->output_dim())
        throw std::invalid_argument("make_problem: dictionary must be a frame (L >= n)");

    ProblemInstance inst{std::move(y), std::move(blur), std::move(dict), gamma,
                         std::move(penalty)};

    // Feasibility witness: alpha = Phi^T(1) gives Phi alpha = c > 0, so J is
    // finite somewhere; a failure means the instance admits no minimizer.
    const std::vector<double> ones(inst.dict.synthesis->output_dim(), 1.0);
    const std::vector<double> witness = apply_adjoint(*inst.dict.synthesis, ones);
    if (!eval_objective(witness, inst).finite())
        throw std::invalid_argument(
            "make_problem: no feasible point with finite objective was found");
    return inst;
}

ExtendedReal eval_objective(std::span<const double> alpha, const ProblemInstance& inst) {
    if (alpha.size() != inst.coeff_dim())
        throw std::invalid_argument("eval_objective: expected coefficients of length " +
                                    std::to_string(inst.coeff_dim()) + ", got " +
                                    std::to_string(alpha.size()));
    std::vector<double> x = apply(*inst.dict.synthesis, alpha);
    for (double& v : x) {
        if (v < 0.0) {
            if (v < -kPositivitySlop)
                return ExtendedReal::infinite(InfinityReason::negative_pixel);
            v = 0.0;
        }
    }
    std::vector<double> eta = apply(*inst.blur, x);
    for (double& v : eta)
        if (v < 0.0 && v >= -kPositivitySlop) v = 0.0;
    const ExtendedReal fid = eval_fidelity(eta, inst.y);
    if (!fid.finite()) return fid;
    return ExtendedReal::of(fid.value + inst.gamma * eval_penalty(alpha, inst.penalty));
}

ObjectiveBreakdown eval_objective_positive_part(std::span<const double> alpha,
                                                const ProblemInstance& inst) {
    if (alpha.size() != inst.coeff_dim())
        throw std::invalid_argument("eval_objective_positive_part: expected coefficients of "
                                    "length " + std::to_string(inst.coeff_dim()) + ", got " +
                                    std::to_string(alpha.size()));
    std::vector<double> x = apply(*inst.dict.synthesis, alpha);
    double viol = 0.0;
    for (double& v : x) {
        if (v < 0.0) {
            viol += v * v;
            v = 0.0;
        }
    }
    std::vector<double> eta = apply(*inst.blur, x);
    for (double& v : eta)
        if (v < 0.0) v = 0.0;  // roundoff from the transform round trip

    ObjectiveBreakdown out;
    out.pos_violation = std::sqrt(viol);
    out.penalty = inst.gamma * eval_penalty(alpha, inst.penalty);
    const ExtendedReal fid = eval_fidelity(eta, inst.y);
    out.fidelity = fid.value;
    out.objective = fid.finite() ? fid.value + out.penalty : fid.value;
    return out;
}

double mae(const ImageGrid& x_hat, const ImageGrid& x_true) {
    if (x_hat.width != x_true.width || x_hat.height != x_true.height)
        throw std::invalid_argument("mae: image dimensions differ, " +
                                    std::to_string(x_hat.width) + "x" +
                                    std::to_string(x_hat.height) + " vs " +
                                    std::to_string(x_true.width) + "x" +
                                    std::to_string(x_true.height));
    double s = 0.0;
    for (std::size_t i = 0; i < x_hat.size(); ++i)
        s += std::abs(x_hat.pixels[i] - x_true.pixels[i]);
    return s / static_cast<double>(x_hat.size());
}

}  // namespace poisprox
