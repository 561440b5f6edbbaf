#pragma once

#include "poisprox/dictionary.hpp"
#include "poisprox/image.hpp"
#include "poisprox/linop.hpp"

namespace poisprox {

// Point of the product space H x K x H': image block, blur block,
// coefficient block.
struct ProductPoint {
    ImageGrid x1;
    ImageGrid x2;
    CoeffVector alpha;
};

// Orthogonal projector onto ker [I  0  -Phi]. Uses the tight-frame identity
// (I + Phi Phi^T)^{-1} = I / (1 + c); the x2 block passes through unchanged.
// Rejects dictionaries whose frame constant does not reproduce the kernel
// (residual of the output exceeds the tightness guard).
ProductPoint project_ker_l1(const ProductPoint& p, const Dictionary& dict);

// Orthogonal projector onto ker [-H  I  0]. The inverse (I + H H^*)^{-1} is
// applied pointwise in the frequency domain from the stored transfer
// function; the alpha block passes through unchanged. Accepts convolution
// handles (and the identity, whose transfer is trivially one); anything else
// is rejected.
ProductPoint project_ker_l2(const ProductPoint& p, const LinOpPtr& blur);

}  // namespace poisprox
