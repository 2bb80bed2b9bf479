#pragma once

#include <memory>

#include "yanglab/module.hpp"

namespace yanglab {

/// Tensor product of two weight modules through the known fragment of the
/// coproduct:
///   D(H_0)   = H_0 (x) 1 + 1 (x) H_0
///   D(H_1)   = H_1 (x) 1 + H_0 (x) H_0 + 1 (x) H_1 - 2 X_0^- (x) X_0^+
///   D(X_0^+-)= X_0^+- (x) 1 + 1 (x) X_0^+-
///   D(X_1^+) = X_1^+ (x) 1 + 1 (x) X_1^+ + H_0 (x) X_0^+
///   D(X_1^-) = X_1^- (x) 1 + 1 (x) X_1^- + X_0^- (x) H_0
/// These six lines are the primitive actions; everything above them is
/// engine-derived. Each leg action goes through the leg's own engine, so a
/// dense factor resolves its X_1^+- by commutators.
class TensorModule final : public Module {
public:
    TensorModule(std::shared_ptr<const Module> left, std::shared_ptr<const Module> right);

    const Module& left() const { return *left_; }
    const Module& right() const { return *right_; }

    ModuleKind kind() const override { return ModuleKind::Tensor; }
    const FieldContext& context() const override { return ctx_; }
    Rational weight(const BasisIndex& i) const override;
    bool has_primitive(const GeneratorSymbol& g) const override {
        return is_base_generator(g) || (g.kind != GenKind::H && g.level == 1);
    }
    WeightVector primitive_act(const GeneratorSymbol& g, const BasisIndex& i) const override;
    std::vector<BasisIndex> basis_window(int window) const override;

private:
    std::shared_ptr<const Module> left_, right_;
    FieldContext ctx_;
};

/// Expansion of u (x) v into the pair basis.
WeightVector tensor_expand(const WeightVector& left, const WeightVector& right);

} // namespace yanglab
