#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace poisprox {

// Row-major 2-D real image; pixel (r, c) sits at pixels[r * width + c].
struct ImageGrid {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<double> pixels;

    ImageGrid() = default;

    ImageGrid(std::size_t w, std::size_t h)
        : width(w), height(h), pixels(w * h, 0.0) {
        if (w == 0 || h == 0)
            throw std::invalid_argument("ImageGrid: dimensions must be positive");
    }

    ImageGrid(std::size_t w, std::size_t h, std::vector<double> px)
        : width(w), height(h), pixels(std::move(px)) {
        if (w == 0 || h == 0)
            throw std::invalid_argument("ImageGrid: dimensions must be positive");
        if (pixels.size() != w * h)
            throw std::invalid_argument("ImageGrid: expected " + std::to_string(w * h) +
                                        " pixels, got " + std::to_string(pixels.size()));
        for (double v : pixels)
            if (!std::isfinite(v))
                throw std::invalid_argument("ImageGrid: pixel values must be finite");
    }

    std::size_t size() const { return pixels.size(); }
    double& at(std::size_t r, std::size_t c) { return pixels[r * width + c]; }
    double at(std::size_t r, std::size_t c) const { return pixels[r * width + c]; }
};

// Coefficient vector in the dictionary domain.
struct CoeffVector {
    std::vector<double> coeffs;

    CoeffVector() = default;
    explicit CoeffVector(std::size_t len) : coeffs(len, 0.0) {}
    explicit CoeffVector(std::vector<double> c) : coeffs(std::move(c)) {
        for (double v : coeffs)
            if (!std::isfinite(v))
                throw std::invalid_argument("CoeffVector: entries must be finite");
    }

    std::size_t size() const { return coeffs.size(); }
};

// Non-negative integer counts, one per pixel, row-major like ImageGrid.
struct CountMap {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::int64_t> counts;

    CountMap() = default;

    CountMap(std::size_t w, std::size_t h, std::vector<std::int64_t> c)
        : width(w), height(h), counts(std::move(c)) {
        if (w == 0 || h == 0)
            throw std::invalid_argument("CountMap: dimensions must be positive");
        if (counts.size() != w * h)
            throw std::invalid_argument("CountMap: expected " + std::to_string(w * h) +
                                        " counts, got " + std::to_string(counts.size()));
        for (std::int64_t v : counts)
            if (v < 0)
                throw std::invalid_argument("CountMap: counts must be non-negative, got " +
                                            std::to_string(v));
    }

    std::size_t size() const { return counts.size(); }

    std::int64_t max_count() const {
        std::int64_t m = 0;
        for (std::int64_t v : counts) m = std::max(m, v);
        return m;
    }

    std::int64_t total() const {
        std::int64_t s = 0;
        for (std::int64_t v : counts) s += v;
        return s;
    }
};

inline double dot(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dot: length mismatch, " + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()));
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace poisprox
