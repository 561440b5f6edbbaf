#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "poisprox/image.hpp"

namespace poisprox {

// Synthetic ground-truth scene. point_sources puts isolated spikes of value
// `scale` on a constant background; gaussian_blobs places blobs whose
// individual integrated flux is `scale`; constant fills with `scale`.
// Placement is deterministic (low-discrepancy), so a phantom spec alone
// reproduces the image.
struct PhantomSpec {
    enum class Kind { constant, point_sources, gaussian_blobs };

    Kind kind = Kind::point_sources;
    std::size_t width = 32;
    std::size_t height = 32;
    double scale = 30.0;
    std::size_t count = 8;      // spikes or blobs
    double background = 1.0;    // point_sources only
    double sigma = 2.0;         // gaussian_blobs only
};

ImageGrid make_phantom(const PhantomSpec& spec);

// Parses "constant:scale=10,width=8,height=8",
// "point-sources:count=8,scale=30,background=1,width=32,height=32" or
// "gaussian-blobs:count=3,scale=50,sigma=2,width=32,height=32".
PhantomSpec parse_phantom_spec(const std::string& text);
std::string format_phantom_spec(const PhantomSpec& spec);

// Independent Poisson draw per pixel; a zero mean yields a zero count
// deterministically. Same seed, same counts, on every platform.
CountMap sample_poisson(const ImageGrid& mean, std::uint64_t seed);

// Plain-text image format: first line "w h", then h rows of w values.
// Reals round-trip at 17 significant digits; counts are written as integers.
void save_image(const ImageGrid& img, const std::filesystem::path& path);
ImageGrid load_image(const std::filesystem::path& path);
void save_count_map(const CountMap& counts, const std::filesystem::path& path);
CountMap load_count_map(const std::filesystem::path& path);

}  // namespace poisprox
