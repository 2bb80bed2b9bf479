#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <span>
#include <vector>

#include "yanglab/weight_vector.hpp"

namespace yanglab {

enum class ModuleKind { Wm, Dense, Tensor };

/// How apply_generator resolves a generator that is not in the minimal
/// generating set {X_0^+, X_0^-, H_0, H_1}:
///   ModulePrimitives — use every primitive action the module offers
///                      (e.g. the explicit coproduct X_1^+- on tensors);
///   BaseOnly         — derive everything above the minimal set, used to
///                      cross-check the extra primitives.
enum class Derivation { ModulePrimitives, BaseOnly };

/// A weight module presented through primitive generator actions.
///
/// Implementations must provide primitive actions at least for the minimal
/// generating set; all higher generators are derived mechanically by the
/// engine. Modules are immutable after construction and safe to share
/// across threads (the memo cache is internally synchronized).
class Module {
public:
    virtual ~Module() = default;

    virtual ModuleKind kind() const = 0;
    virtual const FieldContext& context() const = 0;

    /// H_0 eigenvalue of the basis vector.
    virtual Rational weight(const BasisIndex& i) const = 0;

    /// True when the module supplies a closed primitive action for g.
    virtual bool has_primitive(const GeneratorSymbol& g) const = 0;

    /// Action of a primitive generator on a basis vector.
    virtual WeightVector primitive_act(const GeneratorSymbol& g, const BasisIndex& i) const = 0;

    /// Basis labels inside the finite window: all of {0..m} for W_m,
    /// ladder slots [-K, K] for dense modules, their products for tensors.
    /// Sorted in canonical index order.
    virtual std::vector<BasisIndex> basis_window(int window) const = 0;

    /// Disable/enable the derivation memo. Not thread-safe; call before
    /// sharing the module across workers.
    void set_memoization(bool on) { memo_enabled_ = on; }

private:
    friend WeightVector apply_generator(const Module&, const GeneratorSymbol&,
                                        const BasisIndex&, Derivation);
    struct MemoKey {
        bool base_only;
        GenKind kind;
        unsigned level;
        BasisIndex index;
        auto operator<=>(const MemoKey&) const = default;
    };
    bool memo_enabled_ = true;
    mutable std::map<MemoKey, WeightVector> memo_;
    mutable std::shared_mutex memo_mutex_;
};

/// True for the minimal generating set {X_0^+, X_0^-, H_0, H_1}.
inline bool is_base_generator(const GeneratorSymbol& g) {
    return g.kind == GenKind::H ? g.level <= 1 : g.level == 0;
}

/// Action of an arbitrary generator on a basis vector. Non-primitive
/// generators expand through
///   X_{l+1}^+- = +-1/2 [H_1 - 1/2 H_0^2, X_l^+-]      and
///   H_r        = X_r^+ X_0^- - X_0^- X_r^+   (r >= 2),
/// which is exact on any module presenting the minimal generating set.
WeightVector apply_generator(const Module& m, const GeneratorSymbol& g,
                             const BasisIndex& i,
                             Derivation mode = Derivation::ModulePrimitives);

WeightVector apply_generator(const Module& m, const GeneratorSymbol& g,
                             const WeightVector& v,
                             Derivation mode = Derivation::ModulePrimitives);

/// Right-to-left composition: the last generator of the word acts first.
/// The empty word is the identity.
WeightVector apply_word(const Module& m, std::span<const GeneratorSymbol> word,
                        WeightVector v,
                        Derivation mode = Derivation::ModulePrimitives);

/// Common weight of the support, absent for zero or mixed-weight vectors.
std::optional<Rational> weight_of(const Module& m, const WeightVector& v);

/// All window labels of the given weight, in canonical order.
std::vector<BasisIndex> weight_space_basis(const Module& m, const Rational& weight,
                                           int window);

} // namespace yanglab
