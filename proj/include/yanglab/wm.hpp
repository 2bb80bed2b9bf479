#pragma once

#include "yanglab/module.hpp"

namespace yanglab {

/// The (m+1)-dimensional simple module W_m(a): the highest-weight-m module
/// of sl2 pulled back through evaluation at a. Basis slots 0..m carry
/// weights 2s - m.
///
/// Only the minimal generating set is exposed as primitive; the closed
/// forms for higher generators live in wm_closed_form_act and serve as the
/// engine's correctness oracle.
class WmModule final : public Module {
public:
    WmModule(int m, QuadScalar a);

    int highest() const { return m_; }
    const QuadScalar& evaluation() const { return a_; }

    ModuleKind kind() const override { return ModuleKind::Wm; }
    const FieldContext& context() const override { return a_.context(); }
    Rational weight(const BasisIndex& i) const override;
    bool has_primitive(const GeneratorSymbol& g) const override { return is_base_generator(g); }
    WeightVector primitive_act(const GeneratorSymbol& g, const BasisIndex& i) const override;
    std::vector<BasisIndex> basis_window(int window) const override;

private:
    int m_;
    QuadScalar a_;
};

/// Closed-form action of any generator level on W_m(a):
///   x_k^+ . w_s = (s+a)^k (s+1) w_{s+1}
///   x_k^- . w_s = (s+a-1)^k (m-s+1) w_{s-1}
///   h_k   . w_s = ((s+a-1)^k s (m-s+1) - (s+a)^k (s+1)(m-s)) w_s
/// with w_{m+1} = w_{-1} = 0. Throws on slots outside 0..m.
WeightVector wm_closed_form_act(int m, const QuadScalar& a,
                                const GeneratorSymbol& g, const BasisIndex& i);

/// Monic polynomial given by its roots, pi(u) = prod (u - root_i).
struct DrinfeldPoly {
    std::vector<QuadScalar> roots;

    /// Drinfeld polynomial of W_m(a): roots a, a+1, ..., a+m-1.
    static DrinfeldPoly for_wm(int m, const QuadScalar& a);
};

/// Coefficients (mu_0, ..., mu_K) of u^-1..u^-K-1 in the expansion of
/// pi(u+1)/pi(u) about u = infinity, by exact series division.
std::vector<QuadScalar> drinfeld_series(const DrinfeldPoly& poly, unsigned K);

/// Eigenvalues of H_0..H_K on the top vector w_m, from the closed form.
std::vector<QuadScalar> wm_highest_series(int m, const QuadScalar& a, unsigned K);

} // namespace yanglab
