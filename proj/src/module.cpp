#include "yanglab/module.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>

namespace yanglab {

namespace {

// T = H_1 - 1/2 H_0^2, the inner term of the level-raising commutator
WeightVector apply_t(const Module& m, const WeightVector& v, Derivation mode) {
    WeightVector h1 = apply_generator(m, GeneratorSymbol::h(1), v, mode);
    WeightVector h00 = apply_generator(m, GeneratorSymbol::h(0),
                                       apply_generator(m, GeneratorSymbol::h(0), v, mode), mode);
    return h1 - h00 * QuadScalar(Rational(1, 2));
}

WeightVector derive_on_basis(const Module& m, const GeneratorSymbol& g,
                             const BasisIndex& i, Derivation mode) {
    WeightVector e = WeightVector::unit(i);
    if (g.kind == GenKind::H) {
        // H_r = X_r^+ X_0^- - X_0^- X_r^+
        assert(g.level >= 2);
        GeneratorSymbol xr = GeneratorSymbol::xplus(g.level);
        GeneratorSymbol x0m = GeneratorSymbol::xminus(0);
        return apply_generator(m, xr, apply_generator(m, x0m, e, mode), mode) -
               apply_generator(m, x0m, apply_generator(m, xr, e, mode), mode);
    }
    // X_{l+1}^+- = +-1/2 [T, X_l^+-]
    assert(g.level >= 1);
    GeneratorSymbol xl{g.kind, g.level - 1};
    WeightVector commutator = apply_t(m, apply_generator(m, xl, e, mode), mode) -
                              apply_generator(m, xl, apply_t(m, e, mode), mode);
    Rational half(1, 2);
    return commutator * QuadScalar(g.kind == GenKind::XPlus ? half : -half);
}

} // namespace

WeightVector apply_generator(const Module& m, const GeneratorSymbol& g,
                             const BasisIndex& i, Derivation mode) {
    bool base_only = mode == Derivation::BaseOnly;
    bool primitive = base_only ? is_base_generator(g) : m.has_primitive(g);
    if (primitive) return m.primitive_act(g, i);

    if (!m.memo_enabled_) return derive_on_basis(m, g, i, mode);

    Module::MemoKey key{base_only, g.kind, g.level, i};
    {
        std::shared_lock lock(m.memo_mutex_);
        auto it = m.memo_.find(key);
        if (it != m.memo_.end()) return it->second;
    }
    WeightVector computed = derive_on_basis(m, g, i, mode);
    std::unique_lock lock(m.memo_mutex_);
    auto [it, inserted] = m.memo_.emplace(std::move(key), std::move(computed));
    return it->second;  // first writer wins; results are identical anyway
}

WeightVector apply_generator(const Module& m, const GeneratorSymbol& g,
                             const WeightVector& v, Derivation mode) {
    WeightVector out;
    for (const auto& [i, c] : v.terms())
        out += apply_generator(m, g, i, mode) * c;
    return out;
}

WeightVector apply_word(const Module& m, std::span<const GeneratorSymbol> word,
                        WeightVector v, Derivation mode) {
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        v = apply_generator(m, *it, v, mode);
    return v;
}

std::optional<Rational> weight_of(const Module& m, const WeightVector& v) {
    if (v.is_zero()) return std::nullopt;
    std::optional<Rational> w;
    for (const auto& [i, c] : v.terms()) {
        Rational wi = m.weight(i);
        if (!w) {
            w = wi;
        } else if (*w != wi) {
            return std::nullopt;
        }
    }
    return w;
}

std::vector<BasisIndex> weight_space_basis(const Module& m, const Rational& weight,
                                           int window) {
    std::vector<BasisIndex> out;
    for (BasisIndex& i : m.basis_window(window))
        if (m.weight(i) == weight) out.push_back(std::move(i));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace yanglab
