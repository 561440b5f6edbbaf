#include "poisprox/prox.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace poisprox {

PenaltySpec PenaltySpec::l1() {
    PenaltySpec spec;
    spec.kind = Kind::l1;
    spec.right_deriv_zero = 1.0;
    return spec;
}

PenaltySpec PenaltySpec::generic(std::function<double(double)> psi,
                                 std::function<double(double)> dpsi,
                                 double right_deriv_zero) {
    if (!psi || !dpsi)
        throw std::invalid_argument("PenaltySpec: psi and dpsi must be provided");
    if (!(right_deriv_zero > 0.0))
        throw std::invalid_argument(
            "PenaltySpec: psi must admit a positive right derivative at zero");
    if (std::abs(psi(0.0)) > 1e-12)
        throw std::invalid_argument("PenaltySpec: psi(0) must be zero");

    // sampled admissibility: even, non-decreasing and midpoint-convex on R+
    const double samples[] = {0.1, 0.3, 0.7, 1.5, 3.0, 7.0, 20.0};
    double prev = 0.0;
    for (double a : samples) {
        const double pa = psi(a);
        if (std::abs(pa - psi(-a)) > 1e-12 * (1.0 + std::abs(pa)))
            throw std::invalid_argument("PenaltySpec: psi must be even");
        if (pa < prev - 1e-12)
            throw std::invalid_argument("PenaltySpec: psi must be non-decreasing on [0, inf)");
        if (dpsi(a) < -1e-12)
            throw std::invalid_argument("PenaltySpec: psi' must be non-negative on (0, inf)");
        prev = pa;
    }
    for (std::size_t i = 0; i + 1 < std::size(samples); ++i) {
        const double a = samples[i], b = samples[i + 1];
        const double mid = psi(0.5 * (a + b));
        if (mid > 0.5 * (psi(a) + psi(b)) + 1e-10 * (1.0 + std::abs(mid)))
            throw std::invalid_argument("PenaltySpec: psi failed the midpoint convexity check");
    }

    PenaltySpec spec;
    spec.kind = Kind::generic;
    spec.psi = std::move(psi);
    spec.dpsi = std::move(dpsi);
    spec.right_deriv_zero = right_deriv_zero;
    return spec;
}

double PenaltySpec::eval(double t) const {
    return kind == Kind::l1 ? std::abs(t) : psi(t);
}

std::vector<double> prox_poisson(std::span<const double> x, double beta, const CountMap& y) {
    if (!(beta > 0.0))
        throw std::invalid_argument("prox_poisson: beta must be positive, got " +
                                    std::to_string(beta));
    if (x.size() != y.size())
        throw std::invalid_argument("prox_poisson: expected vector of length " +
                                    std::to_string(y.size()) + ", got " +
                                    std::to_string(x.size()));
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = x[i] - beta;
        if (y.counts[i] == 0) {
            out[i] = std::max(r, 0.0);
            continue;
        }
        const double q = 4.0 * beta * static_cast<double>(y.counts[i]);
        const double s = std::sqrt(r * r + q);
        // (r + s) / 2 cancels for r < 0; use the product form there
        out[i] = r >= 0.0 ? 0.5 * (r + s) : 0.5 * q / (s - r);
    }
    return out;
}

std::vector<double> soft_threshold(std::span<const double> b, double delta) {
    if (delta < 0.0)
        throw std::invalid_argument("soft_threshold: delta must be non-negative, got " +
                                    std::to_string(delta));
    std::vector<double> out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        const double mag = std::abs(b[i]) - delta;
        out[i] = mag > 0.0 ? (b[i] > 0.0 ? mag : -mag) : 0.0;
    }
    return out;
}

namespace {

// Unique root of g(a) = a + delta * psi'(a) - b on (0, b], b > 0; secant
// steps confined to a shrinking bisection bracket.
double solve_scalar_prox(double b, double delta, const PenaltySpec& spec, std::size_t coord) {
    double lo = 0.0, hi = b;
    auto g = [&](double a) { return a + delta * spec.dpsi(a) - b; };
    double glo = spec.right_deriv_zero * delta - b;  // limit of g at 0+
    double ghi = g(hi);
    if (glo > 0.0 || ghi < 0.0 || !std::isfinite(ghi))
        throw std::runtime_error("prox_penalty: root bracketing failed at coordinate " +
                                 std::to_string(coord) + " (psi' is not monotone admissible)");
    double a = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double ga = g(a);
        if (!std::isfinite(ga))
            throw std::runtime_error("prox_penalty: psi' returned a non-finite value at coordinate " +
                                     std::to_string(coord));
        if (std::abs(ga) <= 1e-10 * (1.0 + b)) return a;
        if (ga > 0.0) {
            hi = a;
            ghi = ga;
        } else {
            lo = a;
            glo = ga;
        }
        if (hi - lo <= 1e-12 * (1.0 + b)) return 0.5 * (lo + hi);
        // secant proposal, bisection fallback
        double next = 0.5 * (lo + hi);
        const double denom = ghi - glo;
        if (denom > 0.0) {
            const double sec = lo - glo * (hi - lo) / denom;
            const double margin = 0.01 * (hi - lo);
            if (sec > lo + margin && sec < hi - margin) next = sec;
        }
        a = next;
    }
    return a;
}

}  // namespace

std::vector<double> prox_penalty(std::span<const double> b, double delta,
                                 const PenaltySpec& spec) {
    if (!(delta > 0.0))
        throw std::invalid_argument("prox_penalty: delta must be positive, got " +
                                    std::to_string(delta));
    if (spec.kind == PenaltySpec::Kind::l1) return soft_threshold(b, delta);

    std::vector<double> out(b.size());
    const double dead_zone = delta * spec.right_deriv_zero;
    for (std::size_t i = 0; i < b.size(); ++i) {
        const double ab = std::abs(b[i]);
        if (ab <= dead_zone) {
            out[i] = 0.0;
            continue;
        }
        const double a = solve_scalar_prox(ab, delta, spec, i);
        out[i] = b[i] > 0.0 ? a : -a;
    }
    return out;
}

std::vector<double> project_nonneg(std::span<const double> v) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] > 0.0 ? v[i] : 0.0;
    return out;
}

}  // namespace poisprox
