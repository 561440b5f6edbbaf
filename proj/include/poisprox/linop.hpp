#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace poisprox {

enum class OperatorKind { identity, convolution, dictionary_synthesis, composition, block_stack };

// Matrix-free linear operator with forward and adjoint application.
// Operators are immutable after construction; apply/apply_adjoint are pure
// and may be called concurrently on distinct output buffers.
class LinearOperator {
public:
    virtual ~LinearOperator() = default;

    virtual std::size_t input_dim() const = 0;
    virtual std::size_t output_dim() const = 0;
    virtual OperatorKind kind() const = 0;

    // in.size() == input_dim(), out.size() == output_dim(); checked by the
    // free-function wrappers below.
    virtual void apply(std::span<const double> in, std::span<double> out) const = 0;
    // in.size() == output_dim(), out.size() == input_dim()
    virtual void apply_adjoint(std::span<const double> in, std::span<double> out) const = 0;
};

using LinOpPtr = std::shared_ptr<const LinearOperator>;

// Checked application; rejects dimension mismatches with explicit sizes.
std::vector<double> apply(const LinearOperator& op, std::span<const double> v);
std::vector<double> apply_adjoint(const LinearOperator& op, std::span<const double> v);

LinOpPtr make_identity(std::size_t n);
// s * op, realized as composition with a scalar multiple
LinOpPtr make_scaled(LinOpPtr op, double s);
// outer(inner(v))
LinOpPtr make_composition(LinOpPtr outer, LinOpPtr inner);
// v -> [top(v); bottom(v)], adjoint [u1; u2] -> top^T(u1) + bottom^T(u2)
LinOpPtr make_block_stack(LinOpPtr top, LinOpPtr bottom);

}  // namespace poisprox
