#include "poisprox/linop.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace poisprox {

namespace {

void check_length(const char* what, std::size_t expected, std::size_t got) {
    if (expected != got)
        throw std::invalid_argument(std::string(what) + ": expected vector of length " +
                                    std::to_string(expected) + ", got " + std::to_string(got));
}

class IdentityOp final : public LinearOperator {
public:
    explicit IdentityOp(std::size_t n) : n_(n) {}

    std::size_t input_dim() const override { return n_; }
    std::size_t output_dim() const override { return n_; }
    OperatorKind kind() const override { return OperatorKind::identity; }

    void apply(std::span<const double> in, std::span<double> out) const override {
        std::copy(in.begin(), in.end(), out.begin());
    }
    void apply_adjoint(std::span<const double> in, std::span<double> out) const override {
        std::copy(in.begin(), in.end(), out.begin());
    }

private:
    std::size_t n_;
};

class ScaledOp final : public LinearOperator {
public:
    ScaledOp(LinOpPtr op, double s) : op_(std::move(op)), s_(s) {}

    std::size_t input_dim() const override { return op_->input_dim(); }
    std::size_t output_dim() const override { return op_->output_dim(); }
    OperatorKind kind() const override { return OperatorKind::composition; }

    void apply(std::span<const double> in, std::span<double> out) const override {
        op_->apply(in, out);
        for (double& v : out) v *= s_;
    }
    void apply_adjoint(std::span<const double> in, std::span<double> out) const override {
        op_->apply_adjoint(in, out);
        for (double& v : out) v *= s_;
    }

private:
    LinOpPtr op_;
    double s_;
};

class CompositionOp final : public LinearOperator {
public:
    CompositionOp(LinOpPtr outer, LinOpPtr inner)
        : outer_(std::move(outer)), inner_(std::move(inner)) {
        if (outer_->input_dim() != inner_->output_dim())
            throw std::invalid_argument(
                "make_composition: inner output length " + std::to_string(inner_->output_dim()) +
                " does not match outer input length " + std::to_string(outer_->input_dim()));
    }

    std::size_t input_dim() const override { return inner_->input_dim(); }
    std::size_t output_dim() const override { return outer_->output_dim(); }
    OperatorKind kind() const override { return OperatorKind::composition; }

    void apply(std::span<const double> in, std::span<double> out) const override {
        std::vector<double> mid(inner_->output_dim());
        inner_->apply(in, mid);
        outer_->apply(mid, out);
    }
    void apply_adjoint(std::span<const double> in, std::span<double> out) const override {
        std::vector<double> mid(outer_->input_dim());
        outer_->apply_adjoint(in, mid);
        inner_->apply_adjoint(mid, out);
    }

private:
    LinOpPtr outer_;
    LinOpPtr inner_;
};

class BlockStackOp final : public LinearOperator {
public:
    BlockStackOp(LinOpPtr top, LinOpPtr bottom)
        : top_(std::move(top)), bottom_(std::move(bottom)) {
        if (top_->input_dim() != bottom_->input_dim())
            throw std::invalid_argument(
                "make_block_stack: input lengths differ, " + std::to_string(top_->input_dim()) +
                " vs " + std::to_string(bottom_->input_dim()));
    }

    std::size_t input_dim() const override { return top_->input_dim(); }
    std::size_t output_dim() const override { return top_->output_dim() + bottom_->output_dim(); }
    OperatorKind kind() const override { return OperatorKind::block_stack; }

    void apply(std::span<const double> in, std::span<double> out) const override {
        top_->apply(in, out.subspan(0, top_->output_dim()));
        bottom_->apply(in, out.subspan(top_->output_dim()));
    }
    void apply_adjoint(std::span<const double> in, std::span<double> out) const override {
        std::vector<double> tmp(input_dim());
        top_->apply_adjoint(in.subspan(0, top_->output_dim()), out);
        bottom_->apply_adjoint(in.subspan(top_->output_dim()), tmp);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += tmp[i];
    }

private:
    LinOpPtr top_;
    LinOpPtr bottom_;
};

}  // namespace

std::vector<double> apply(const LinearOperator& op, std::span<const double> v) {
    check_length("apply", op.input_dim(), v.size());
    std::vector<double> out(op.output_dim());
    op.apply(v, out);
    return out;
}

std::vector<double> apply_adjoint(const LinearOperator& op, std::span<const double> v) {
    check_length("apply_adjoint", op.output_dim(), v.size());
    std::vector<double> out(op.input_dim());
    op.apply_adjoint(v, out);
    return out;
}

LinOpPtr make_identity(std::size_t n) {
    if (n == 0) throw std::invalid_argument("make_identity: dimension must be positive");
    return std::make_shared<IdentityOp>(n);
}

LinOpPtr make_scaled(LinOpPtr op, double s) {
    if (!op) throw std::invalid_argument("make_scaled: null operator");
    return std::make_shared<ScaledOp>(std::move(op), s);
}

LinOpPtr make_composition(LinOpPtr outer, LinOpPtr inner) {
    if (!outer || !inner) throw std::invalid_argument("make_composition: null operator");
    return std::make_shared<CompositionOp>(std::move(outer), std::move(inner));
}

LinOpPtr make_block_stack(LinOpPtr top, LinOpPtr bottom) {
    if (!top || !bottom) throw std::invalid_argument("make_block_stack: null operator");
    return std::make_shared<BlockStackOp>(std::move(top), std::move(bottom));
}

}  // namespace poisprox
