#include "poisprox/convolution.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "poisprox/text_io.hpp"

namespace poisprox {

namespace {

struct FftwDeleter {
    void operator()(void* p) const { fftw_free(p); }
};
using RealBuf = std::unique_ptr<double[], FftwDeleter>;
using ComplexBuf = std::unique_ptr<fftw_complex[], FftwDeleter>;

RealBuf alloc_real(std::size_t n) { return RealBuf(fftw_alloc_real(n)); }
ComplexBuf alloc_complex(std::size_t n) { return ComplexBuf(fftw_alloc_complex(n)); }

}  // namespace

struct ConvolutionOp::Plans {
    fftw_plan forward = nullptr;
    fftw_plan backward = nullptr;

    ~Plans() {
        if (forward) fftw_destroy_plan(forward);
        if (backward) fftw_destroy_plan(backward);
    }
};

ConvolutionOp::ConvolutionOp(const ImageGrid& psf, std::size_t width, std::size_t height)
    : width_(width), height_(height) {
    if (width == 0 || height == 0)
        throw std::invalid_argument("ConvolutionOp: image dimensions must be positive");
    if (psf.width > width || psf.height > height)
        throw std::invalid_argument("ConvolutionOp: PSF " + std::to_string(psf.width) + "x" +
                                    std::to_string(psf.height) + " exceeds image " +
                                    std::to_string(width) + "x" + std::to_string(height));
    double sum = 0.0;
    for (double v : psf.pixels) {
        if (v < 0.0)
            throw std::invalid_argument("ConvolutionOp: PSF entries must be non-negative");
        sum += v;
    }
    if (sum <= 0.0)
        throw std::invalid_argument("ConvolutionOp: all-zero PSF would give the zero map");

    spec_size_ = height_ * (width_ / 2 + 1);
    plans_ = std::make_unique<Plans>();
    {
        RealBuf real = alloc_real(width_ * height_);
        ComplexBuf spec = alloc_complex(spec_size_);
        plans_->forward =
            fftw_plan_dft_r2c_2d(static_cast<int>(height_), static_cast<int>(width_),
                                 real.get(), spec.get(), FFTW_ESTIMATE);
        plans_->backward =
            fftw_plan_dft_c2r_2d(static_cast<int>(height_), static_cast<int>(width_),
                                 spec.get(), real.get(), FFTW_ESTIMATE);
        if (!plans_->forward || !plans_->backward)
            throw std::runtime_error("ConvolutionOp: FFT planning failed");
    }

    // Unit-sum kernel, center taps on pixel (0, 0) with periodic wrap.
    RealBuf embedded = alloc_real(width_ * height_);
    std::memset(embedded.get(), 0, width_ * height_ * sizeof(double));
    const std::size_t cr = psf.height / 2;
    const std::size_t cc = psf.width / 2;
    for (std::size_t r = 0; r < psf.height; ++r) {
        for (std::size_t c = 0; c < psf.width; ++c) {
            const std::size_t rr = (r + height_ - cr) % height_;
            const std::size_t jj = (c + width_ - cc) % width_;
            embedded.get()[rr * width_ + jj] += psf.at(r, c) / sum;
        }
    }
    ComplexBuf spec = alloc_complex(spec_size_);
    fftw_execute_dft_r2c(plans_->forward, embedded.get(), spec.get());
    transfer_.resize(spec_size_);
    for (std::size_t k = 0; k < spec_size_; ++k)
        transfer_[k] = {spec.get()[k][0], spec.get()[k][1]};
}

ConvolutionOp::~ConvolutionOp() = default;

void ConvolutionOp::forward_fft(const double* in, std::complex<double>* spec) const {
    RealBuf real = alloc_real(width_ * height_);
    ComplexBuf out = alloc_complex(spec_size_);
    std::memcpy(real.get(), in, width_ * height_ * sizeof(double));
    fftw_execute_dft_r2c(plans_->forward, real.get(), out.get());
    for (std::size_t k = 0; k < spec_size_; ++k)
        spec[k] = {out.get()[k][0], out.get()[k][1]};
}

void ConvolutionOp::inverse_fft(std::complex<double>* spec, double* out) const {
    ComplexBuf in = alloc_complex(spec_size_);
    RealBuf real = alloc_real(width_ * height_);
    for (std::size_t k = 0; k < spec_size_; ++k) {
        in.get()[k][0] = spec[k].real();
        in.get()[k][1] = spec[k].imag();
    }
    fftw_execute_dft_c2r(plans_->backward, in.get(), real.get());
    const double scale = 1.0 / static_cast<double>(width_ * height_);
    for (std::size_t i = 0; i < width_ * height_; ++i) out[i] = real.get()[i] * scale;
}

void ConvolutionOp::apply(std::span<const double> in, std::span<double> out) const {
    std::vector<std::complex<double>> spec(spec_size_);
    forward_fft(in.data(), spec.data());
    for (std::size_t k = 0; k < spec_size_; ++k) spec[k] *= transfer_[k];
    inverse_fft(spec.data(), out.data());
}

void ConvolutionOp::apply_adjoint(std::span<const double> in, std::span<double> out) const {
    std::vector<std::complex<double>> spec(spec_size_);
    forward_fft(in.data(), spec.data());
    for (std::size_t k = 0; k < spec_size_; ++k) spec[k] *= std::conj(transfer_[k]);
    inverse_fft(spec.data(), out.data());
}

std::vector<double> ConvolutionOp::solve_id_plus_hht(std::span<const double> rhs) const {
    if (rhs.size() != width_ * height_)
        throw std::invalid_argument("solve_id_plus_hht: expected vector of length " +
                                    std::to_string(width_ * height_) + ", got " +
                                    std::to_string(rhs.size()));
    std::vector<std::complex<double>> spec(spec_size_);
    forward_fft(rhs.data(), spec.data());
    for (std::size_t k = 0; k < spec_size_; ++k)
        spec[k] /= 1.0 + std::norm(transfer_[k]);
    std::vector<double> out(width_ * height_);
    inverse_fft(spec.data(), out.data());
    return out;
}

double ConvolutionOp::max_transfer_modulus() const {
    double m = 0.0;
    for (const auto& t : transfer_) m = std::max(m, std::abs(t));
    return m;
}

std::shared_ptr<const ConvolutionOp> make_convolution(const ImageGrid& psf,
                                                      std::size_t width,
                                                      std::size_t height) {
    return std::make_shared<const ConvolutionOp>(psf, width, height);
}

ImageGrid gaussian_psf(double sigma, std::size_t size) {
    if (sigma <= 0.0) throw std::invalid_argument("gaussian_psf: sigma must be positive");
    if (size == 0) throw std::invalid_argument("gaussian_psf: size must be positive");
    ImageGrid psf(size, size);
    const double c = (static_cast<double>(size) - 1.0) / 2.0;
    double sum = 0.0;
    for (std::size_t r = 0; r < size; ++r) {
        for (std::size_t col = 0; col < size; ++col) {
            const double dr = static_cast<double>(r) - c;
            const double dc = static_cast<double>(col) - c;
            const double v = std::exp(-(dr * dr + dc * dc) / (2.0 * sigma * sigma));
            psf.at(r, col) = v;
            sum += v;
        }
    }
    for (double& v : psf.pixels) v /= sum;
    return psf;
}

ImageGrid load_psf(const std::string& spec_or_path) {
    const std::string prefix = "gaussian:";
    if (spec_or_path.rfind(prefix, 0) == 0) {
        double sigma = 0.0;
        std::size_t size = 0;
        std::string rest = spec_or_path.substr(prefix.size());
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("load_psf: malformed gaussian spec item '" + item +
                                            "', expected key=value");
            const std::string key = item.substr(0, eq);
            const std::string value = item.substr(eq + 1);
            if (key == "sigma")
                sigma = std::stod(value);
            else if (key == "size")
                size = static_cast<std::size_t>(std::stoul(value));
            else
                throw std::invalid_argument("load_psf: unknown gaussian spec key '" + key + "'");
        }
        if (sigma <= 0.0 || size == 0)
            throw std::invalid_argument(
                "load_psf: gaussian spec needs sigma=<positive> and size=<positive>");
        return gaussian_psf(sigma, size);
    }
    TextMatrix m = load_text_matrix(spec_or_path);
    return ImageGrid(m.cols, m.rows, std::move(m.values));
}

}  // namespace poisprox
