#include "poisprox/product_space.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "poisprox/convolution.hpp"

namespace poisprox {

namespace {

void check_point(const ProductPoint& p, std::size_t n1, std::size_t n2, std::size_t L,
                 const char* who) {
    if (p.x1.size() != n1 || p.x2.size() != n2 || p.alpha.size() != L)
        throw std::invalid_argument(std::string(who) + ": product point blocks (" +
                                    std::to_string(p.x1.size()) + ", " +
                                    std::to_string(p.x2.size()) + ", " +
                                    std::to_string(p.alpha.size()) + ") do not match (" +
                                    std::to_string(n1) + ", " + std::to_string(n2) + ", " +
                                    std::to_string(L) + ")");
}

}  // namespace

ProductPoint project_ker_l1(const ProductPoint& p, const Dictionary& dict) {
    const auto& phi = *dict.synthesis;
    const std::size_t n = phi.output_dim();
    const std::size_t L = phi.input_dim();
    check_point(p, n, p.x2.size(), L, "project_ker_l1");
    const double c = dict.frame.frame_constant;
    if (!(c > 0.0))
        throw std::invalid_argument("project_ker_l1: frame constant must be positive");

    // r = x1 - Phi alpha;  (L1 L1^T)^{-1} = I / (1 + c) for a tight frame
    std::vector<double> r = apply(phi, p.alpha.coeffs);
    for (std::size_t i = 0; i < n; ++i) r[i] = p.x1.pixels[i] - r[i];
    const std::vector<double> w = apply_adjoint(phi, r);

    ProductPoint out = p;
    const double inv = 1.0 / (1.0 + c);
    for (std::size_t i = 0; i < n; ++i) out.x1.pixels[i] -= r[i] * inv;
    for (std::size_t i = 0; i < L; ++i) out.alpha.coeffs[i] += w[i] * inv;

    // a wrong frame constant leaves an O(||r||) residual; a tight frame
    // leaves roundoff
    std::vector<double> resid = apply(phi, out.alpha.coeffs);
    for (std::size_t i = 0; i < n; ++i) resid[i] = out.x1.pixels[i] - resid[i];
    if (norm2(resid) > 1e-9 * std::max(1.0, norm2(r)))
        throw std::invalid_argument(
            "project_ker_l1: dictionary failed the tight-frame identity");
    return out;
}

ProductPoint project_ker_l2(const ProductPoint& p, const LinOpPtr& blur) {
    if (!blur) throw std::invalid_argument("project_ker_l2: null operator");
    const std::size_t n_in = blur->input_dim();
    const std::size_t n_out = blur->output_dim();
    check_point(p, n_in, n_out, p.alpha.size(), "project_ker_l2");

    // r = x2 - H x1
    std::vector<double> r = apply(*blur, p.x1.pixels);
    for (std::size_t i = 0; i < n_out; ++i) r[i] = p.x2.pixels[i] - r[i];

    // u = (I + H H^*)^{-1} r
    std::vector<double> u;
    if (auto conv = std::dynamic_pointer_cast<const ConvolutionOp>(blur)) {
        u = conv->solve_id_plus_hht(r);
    } else if (blur->kind() == OperatorKind::identity) {
        u = r;
        for (double& v : u) v *= 0.5;
    } else {
        throw std::invalid_argument(
            "project_ker_l2: operator carries no stored transfer function");
    }

    const std::vector<double> htu = apply_adjoint(*blur, u);
    ProductPoint out = p;
    for (std::size_t i = 0; i < n_in; ++i) out.x1.pixels[i] += htu[i];
    for (std::size_t i = 0; i < n_out; ++i) out.x2.pixels[i] -= u[i];
    return out;
}

}  // namespace poisprox
