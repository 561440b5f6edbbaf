#include "poisprox/dictionary.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "poisprox/image.hpp"

namespace poisprox {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

bool is_pow2(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

// One orthonormal Haar step over the leading cw x ch block, rows then
// columns; buf is the full width-w row-major grid.
void haar_step_analysis(std::vector<double>& buf, std::size_t w, std::size_t cw,
                        std::size_t ch, std::vector<double>& tmp) {
    for (std::size_t r = 0; r < ch; ++r) {
        double* row = buf.data() + r * w;
        for (std::size_t c = 0; c < cw / 2; ++c) {
            const double a = row[2 * c], b = row[2 * c + 1];
            tmp[c] = (a + b) * kInvSqrt2;
            tmp[cw / 2 + c] = (a - b) * kInvSqrt2;
        }
        std::copy(tmp.begin(), tmp.begin() + cw, row);
    }
    for (std::size_t c = 0; c < cw; ++c) {
        for (std::size_t r = 0; r < ch / 2; ++r) {
            const double a = buf[(2 * r) * w + c], b = buf[(2 * r + 1) * w + c];
            tmp[r] = (a + b) * kInvSqrt2;
            tmp[ch / 2 + r] = (a - b) * kInvSqrt2;
        }
        for (std::size_t r = 0; r < ch; ++r) buf[r * w + c] = tmp[r];
    }
}

void haar_step_synthesis(std::vector<double>& buf, std::size_t w, std::size_t cw,
                         std::size_t ch, std::vector<double>& tmp) {
    for (std::size_t c = 0; c < cw; ++c) {
        for (std::size_t r = 0; r < ch / 2; ++r) {
            const double s = buf[r * w + c], d = buf[(ch / 2 + r) * w + c];
            tmp[2 * r] = (s + d) * kInvSqrt2;
            tmp[2 * r + 1] = (s - d) * kInvSqrt2;
        }
        for (std::size_t r = 0; r < ch; ++r) buf[r * w + c] = tmp[r];
    }
    for (std::size_t r = 0; r < ch; ++r) {
        double* row = buf.data() + r * w;
        for (std::size_t c = 0; c < cw / 2; ++c) {
            const double s = row[c], d = row[cw / 2 + c];
            tmp[2 * c] = (s + d) * kInvSqrt2;
            tmp[2 * c + 1] = (s - d) * kInvSqrt2;
        }
        std::copy(tmp.begin(), tmp.begin() + cw, row);
    }
}

// Full-depth orthonormal 2-D Haar basis; L = n, Mallat coefficient packing.
class HaarSynthesisOp final : public LinearOperator {
public:
    HaarSynthesisOp(std::size_t w, std::size_t h) : w_(w), h_(h) {}

    std::size_t input_dim() const override { return w_ * h_; }
    std::size_t output_dim() const override { return w_ * h_; }
    OperatorKind kind() const override { return OperatorKind::dictionary_synthesis; }

    void apply(std::span<const double> in, std::span<double> out) const override {
        std::vector<double> buf(in.begin(), in.end());
        std::vector<double> tmp(std::max(w_, h_));
        // level sizes from coarsest back to finest
        std::vector<std::pair<std::size_t, std::size_t>> sizes;
        for (std::size_t cw = w_, ch = h_; cw >= 2 && ch >= 2; cw /= 2, ch /= 2)
            sizes.emplace_back(cw, ch);
        for (auto it = sizes.rbegin(); it != sizes.rend(); ++it)
            haar_step_synthesis(buf, w_, it->first, it->second, tmp);
        std::copy(buf.begin(), buf.end(), out.begin());
    }

    void apply_adjoint(std::span<const double> in, std::span<double> out) const override {
        std::vector<double> buf(in.begin(), in.end());
        std::vector<double> tmp(std::max(w_, h_));
        for (std::size_t cw = w_, ch = h_; cw >= 2 && ch >= 2; cw /= 2, ch /= 2)
            haar_step_analysis(buf, w_, cw, ch, tmp);
        std::copy(buf.begin(), buf.end(), out.begin());
    }

private:
    std::size_t w_, h_;
};

// Single-level stationary Haar: four full-size bands [LL, LH, HL, HH] with
// unit-norm 2x2 atoms (entries +-1/2), periodic boundary. L = 4n, c = 4.
class UndecimatedHaarSynthesisOp final : public LinearOperator {
public:
    UndecimatedHaarSynthesisOp(std::size_t w, std::size_t h) : w_(w), h_(h) {}

    std::size_t input_dim() const override { return 4 * w_ * h_; }
    std::size_t output_dim() const override { return w_ * h_; }
    OperatorKind kind() const override { return OperatorKind::dictionary_synthesis; }

    void apply(std::span<const double> in, std::span<double> out) const override {
        const std::size_t n = w_ * h_;
        for (std::size_t r = 0; r < h_; ++r) {
            for (std::size_t c = 0; c < w_; ++c) {
                double acc = 0.0;
                for (std::size_t band = 0; band < 4; ++band) {
                    const double* coeff = in.data() + band * n;
                    for (std::size_t dr = 0; dr < 2; ++dr) {
                        for (std::size_t dc = 0; dc < 2; ++dc) {
                            const std::size_t rr = (r + h_ - dr) % h_;
                            const std::size_t cc = (c + w_ - dc) % w_;
                            acc += stencil(band, dr, dc) * coeff[rr * w_ + cc];
                        }
                    }
                }
                out[r * w_ + c] = acc;
            }
        }
    }

    void apply_adjoint(std::span<const double> in, std::span<double> out) const override {
        const std::size_t n = w_ * h_;
        for (std::size_t band = 0; band < 4; ++band) {
            double* coeff = out.data() + band * n;
            for (std::size_t r = 0; r < h_; ++r) {
                for (std::size_t c = 0; c < w_; ++c) {
                    double acc = 0.0;
                    for (std::size_t dr = 0; dr < 2; ++dr)
                        for (std::size_t dc = 0; dc < 2; ++dc)
                            acc += stencil(band, dr, dc) *
                                   in[((r + dr) % h_) * w_ + (c + dc) % w_];
                    coeff[r * w_ + c] = acc;
                }
            }
        }
    }

private:
    // band 0 = LL, 1 = LH (high along width), 2 = HL (high along height), 3 = HH
    static double stencil(std::size_t band, std::size_t dr, std::size_t dc) {
        const double sr = (band == 2 || band == 3) && dr == 1 ? -0.5 : 0.5;
        const double sc = (band == 1 || band == 3) && dc == 1 ? -1.0 : 1.0;
        return sr * sc;
    }

    std::size_t w_, h_;
};

}  // namespace

Dictionary make_dictionary(FrameKind kind, std::size_t width, std::size_t height) {
    if (width == 0 || height == 0)
        throw std::invalid_argument("make_dictionary: dimensions must be positive");

    LinOpPtr op;
    switch (kind) {
        case FrameKind::identity:
            op = make_identity(width * height);
            break;
        case FrameKind::orthonormal_haar:
        case FrameKind::undecimated_haar:
            if (!is_pow2(width) || !is_pow2(height))
                throw std::invalid_argument("make_dictionary: Haar transforms need power-of-two "
                                            "dimensions, got " + std::to_string(width) + "x" +
                                            std::to_string(height));
            if (kind == FrameKind::orthonormal_haar)
                op = std::make_shared<HaarSynthesisOp>(width, height);
            else
                op = std::make_shared<UndecimatedHaarSynthesisOp>(width, height);
            break;
    }

    // Measure c on random vectors and verify Phi Phi^T = c I.
    std::mt19937_64 rng(0xd1c7u);
    const std::size_t n = op->output_dim();
    double c_measured = 0.0;
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<double> v(n);
        for (double& x : v)
            x = 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
        const std::vector<double> w = apply(*op, apply_adjoint(*op, v));
        const double c_est = dot(w, v) / dot(v, v);
        std::vector<double> resid(n);
        for (std::size_t i = 0; i < n; ++i) resid[i] = w[i] - c_est * v[i];
        if (norm2(resid) > 1e-10 * norm2(v))
            throw std::runtime_error("make_dictionary: frame check failed, Phi Phi^T != c I");
        c_measured += c_est / 8.0;
    }
    return Dictionary{op, TightFrameDescriptor{c_measured, kind}};
}

}  // namespace poisprox
