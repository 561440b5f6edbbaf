#pragma once

#include <cstddef>

#include "poisprox/linop.hpp"

namespace poisprox {

enum class FrameKind { orthonormal_haar, undecimated_haar, identity };

// Descriptor of a verified tight frame: Phi Phi^T = c I.
struct TightFrameDescriptor {
    double frame_constant = 1.0;
    FrameKind kind = FrameKind::identity;
};

// Synthesis operator Phi: R^L -> R^n together with its verified frame data.
struct Dictionary {
    LinOpPtr synthesis;
    TightFrameDescriptor frame;
};

// Builds the synthesis operator for a width x height image and measures the
// frame constant on random vectors (verified to 1e-10 relative error).
// Haar kinds require power-of-two dimensions. orthonormal_haar gives L = n
// and c = 1; undecimated_haar is a single-level stationary transform with
// L = 4n and unit-norm atoms.
Dictionary make_dictionary(FrameKind kind, std::size_t width, std::size_t height);

}  // namespace poisprox
