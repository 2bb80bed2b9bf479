#pragma once

#include "yanglab/module.hpp"

namespace yanglab {

/// Dense module V(mu, tau, b_mu): basis v_{mu+2k} over all integers k,
/// neither highest nor lowest weight. The sl2 ladder action is
///   X_0^- . v_k = v_{k-1},   X_0^+ . v_k = a(k) v_{k+1},
///   H_0 . v_k = (mu+2k) v_k,
/// with a(k) = 1/4 (tau - (mu+2k+1)^2), and H_1 acts diagonally by b(k).
///
/// Requires 0 < mu <= 2 and tau != (mu+2k+1)^2 for every integer k, so that
/// no a(k) vanishes; both are checked exactly at construction. The field
/// context is Q(sqrt(tau)); b_mu may carry a sqrt(tau) part.
///
/// The coefficient accessors are virtual so tests can seed single-value
/// mutations and confirm the relation checker catches them.
class DenseModule : public Module {
public:
    DenseModule(Rational mu, Rational tau, QuadScalar b_mu);

    const Rational& mu() const { return mu_; }
    const Rational& tau() const { return tau_; }
    const QuadScalar& b_origin() const { return b_mu_; }

    /// a_{mu+2k} = 1/4 (tau - (mu+2k+1)^2); never zero on a valid module.
    virtual QuadScalar a_coeff(long k) const;

    /// H_1 eigenvalue on v_{mu+2k}, by the closed form
    ///   b(k) = (mu+2k)(a(0)+b(0))/mu + k(mu+2k) - a(k).
    /// Single evaluations are O(1); the defining recursions are checked in
    /// tests, not used here.
    virtual QuadScalar b_coeff(long k) const;

    ModuleKind kind() const override { return ModuleKind::Dense; }
    const FieldContext& context() const override { return ctx_; }
    Rational weight(const BasisIndex& i) const override;
    bool has_primitive(const GeneratorSymbol& g) const override { return is_base_generator(g); }
    WeightVector primitive_act(const GeneratorSymbol& g, const BasisIndex& i) const override;
    std::vector<BasisIndex> basis_window(int window) const override;

private:
    Rational mu_, tau_;
    FieldContext ctx_;
    QuadScalar b_mu_;
};

/// Level-1 ladder action in closed form (sign = +1 or -1):
///   X_1^- . v_k = -1/2 (b(k-1) - b(k) + 2 mu + 4k - 2) v_{k-1}
///   X_1^+ . v_k = 1/2 a(k) (b(k+1) - b(k) - 2 mu - 4k - 2) v_{k+1}
/// Used as an oracle against the engine's commutator derivation.
WeightVector dense_x1_closed_form(const DenseModule& m, int sign, long k);

} // namespace yanglab
