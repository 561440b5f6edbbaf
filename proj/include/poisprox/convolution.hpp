#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "poisprox/image.hpp"
#include "poisprox/linop.hpp"

namespace poisprox {

// Periodic (circular) convolution with a fixed point-spread function,
// applied in the frequency domain where the operator is diagonal.
// The PSF is normalized to unit sum at construction; its center taps
// (kh/2, kw/2) land on pixel (0, 0) of the embedding grid.
class ConvolutionOp final : public LinearOperator {
public:
    ConvolutionOp(const ImageGrid& psf, std::size_t width, std::size_t height);
    ~ConvolutionOp() override;

    ConvolutionOp(const ConvolutionOp&) = delete;
    ConvolutionOp& operator=(const ConvolutionOp&) = delete;

    std::size_t input_dim() const override { return width_ * height_; }
    std::size_t output_dim() const override { return width_ * height_; }
    OperatorKind kind() const override { return OperatorKind::convolution; }

    void apply(std::span<const double> in, std::span<double> out) const override;
    void apply_adjoint(std::span<const double> in, std::span<double> out) const override;

    std::size_t image_width() const { return width_; }
    std::size_t image_height() const { return height_; }

    // Solves (I + H H^T) u = rhs pointwise in the frequency domain,
    // dividing each mode by 1 + |h_hat|^2.
    std::vector<double> solve_id_plus_hht(std::span<const double> rhs) const;

    // Largest transfer-function modulus; equals the spectral norm of H.
    double max_transfer_modulus() const;

private:
    struct Plans;

    void forward_fft(const double* in, std::complex<double>* spec) const;
    void inverse_fft(std::complex<double>* spec, double* out) const;

    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::size_t spec_size_ = 0;  // height * (width/2 + 1), half-spectrum
    std::vector<std::complex<double>> transfer_;
    std::unique_ptr<Plans> plans_;
};

std::shared_ptr<const ConvolutionOp> make_convolution(const ImageGrid& psf,
                                                      std::size_t width,
                                                      std::size_t height);

// k x k sampled Gaussian, normalized to unit sum.
ImageGrid gaussian_psf(double sigma, std::size_t size);

// Accepts either a built-in "gaussian:sigma=<s>,size=<k>" spec string or a
// path to a plain-text matrix file (optionally carrying a "w h" header line).
ImageGrid load_psf(const std::string& spec_or_path);

}  // namespace poisprox
