#include "yanglab/tensor.hpp"

#include <algorithm>

namespace yanglab {

TensorModule::TensorModule(std::shared_ptr<const Module> left,
                           std::shared_ptr<const Module> right)
    : left_(std::move(left)), right_(std::move(right)),
      ctx_(merge_contexts(left_->context(), right_->context())) {}

Rational TensorModule::weight(const BasisIndex& i) const {
    if (!i.is_pair()) throw validation_error("tensor module expects pair indices");
    return left_->weight(i.left()) + right_->weight(i.right());
}

WeightVector tensor_expand(const WeightVector& left, const WeightVector& right) {
    WeightVector out;
    for (const auto& [li, lc] : left.terms())
        for (const auto& [ri, rc] : right.terms())
            out.add_term(BasisIndex::pair(li, ri), lc * rc);
    return out;
}

WeightVector TensorModule::primitive_act(const GeneratorSymbol& g, const BasisIndex& i) const {
    if (!i.is_pair()) throw validation_error("tensor module expects pair indices");
    const WeightVector el = WeightVector::unit(i.left());
    const WeightVector er = WeightVector::unit(i.right());
    auto act_l = [&](const GeneratorSymbol& s) { return apply_generator(*left_, s, i.left()); };
    auto act_r = [&](const GeneratorSymbol& s) { return apply_generator(*right_, s, i.right()); };

    const GeneratorSymbol h0 = GeneratorSymbol::h(0);
    const GeneratorSymbol x0p = GeneratorSymbol::xplus(0);
    const GeneratorSymbol x0m = GeneratorSymbol::xminus(0);

    if (g.kind == GenKind::H && g.level == 0)
        return tensor_expand(act_l(h0), er) + tensor_expand(el, act_r(h0));

    if (g.kind == GenKind::H && g.level == 1) {
        WeightVector out = tensor_expand(act_l(g), er);
        out += tensor_expand(act_l(h0), act_r(h0));
        out += tensor_expand(el, act_r(g));
        out -= tensor_expand(act_l(x0m), act_r(x0p)) * QuadScalar(2);
        return out;
    }

    if (g.level == 0)  // X_0^+-
        return tensor_expand(act_l(g), er) + tensor_expand(el, act_r(g));

    // X_1^+-
    WeightVector out = tensor_expand(act_l(g), er) + tensor_expand(el, act_r(g));
    if (g.kind == GenKind::XPlus)
        out += tensor_expand(act_l(h0), act_r(x0p));
    else
        out += tensor_expand(act_l(x0m), act_r(h0));
    return out;
}

std::vector<BasisIndex> TensorModule::basis_window(int window) const {
    std::vector<BasisIndex> out;
    for (const BasisIndex& li : left_->basis_window(window))
        for (const BasisIndex& ri : right_->basis_window(window))
            out.push_back(BasisIndex::pair(li, ri));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace yanglab
