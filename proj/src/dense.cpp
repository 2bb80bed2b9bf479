#include "yanglab/dense.hpp"

namespace yanglab {

namespace {

long checked_slot(const BasisIndex& i) {
    if (i.is_pair()) throw validation_error("dense module expects plain ladder slots");
    return i.slot();
}

} // namespace

DenseModule::DenseModule(Rational mu, Rational tau, QuadScalar b_mu)
    : mu_(std::move(mu)), tau_(std::move(tau)), ctx_(tau_), b_mu_(0) {
    if (mu_.sign() <= 0 || mu_ > Rational(2)) throw validation_error("mu not in (0,2]");

    // a(k) = 0 iff tau = (mu+2k+1)^2 for an integer k; decidable over Q
    if (auto s = rational_square_root(tau_)) {
        for (const Rational& root : {*s, -*s}) {
            Rational k = (root - mu_ - Rational(1)) / Rational(2);
            if (k.is_integer())
                throw validation_error("a coefficient vanishes at k = " + k.str() +
                                       " (tau = (mu+2k+1)^2)");
        }
    }

    // re-embed b_mu into Q(sqrt(tau)); rejects foreign extensions
    FieldContext merged = merge_contexts(ctx_, b_mu.context());
    (void)merged;
    b_mu_ = QuadScalar(b_mu.rat(), b_mu.quad(), ctx_);
}

QuadScalar DenseModule::a_coeff(long k) const {
    Rational x = mu_ + Rational(2 * k + 1);
    return QuadScalar((tau_ - x * x) * Rational(1, 4), Rational(0), ctx_);
}

QuadScalar DenseModule::b_coeff(long k) const {
    Rational weight = mu_ + Rational(2 * k);
    QuadScalar ladder = (a_coeff(0) + b_mu_) * QuadScalar(weight / mu_);
    return ladder + QuadScalar(Rational(k) * weight, Rational(0), ctx_) - a_coeff(k);
}

Rational DenseModule::weight(const BasisIndex& i) const {
    return mu_ + Rational(2 * checked_slot(i));
}

WeightVector DenseModule::primitive_act(const GeneratorSymbol& g, const BasisIndex& i) const {
    long k = checked_slot(i);
    switch (g.kind) {
        case GenKind::XPlus:
            return WeightVector::unit(BasisIndex(k + 1), a_coeff(k));
        case GenKind::XMinus:
            return WeightVector::unit(BasisIndex(k - 1), QuadScalar(Rational(1), Rational(0), ctx_));
        default:
            if (g.level == 0)
                return WeightVector::unit(i, QuadScalar(weight(i), Rational(0), ctx_));
            return WeightVector::unit(i, b_coeff(k));
    }
}

std::vector<BasisIndex> DenseModule::basis_window(int window) const {
    std::vector<BasisIndex> out;
    out.reserve(2 * static_cast<size_t>(window) + 1);
    for (long k = -window; k <= window; ++k) out.emplace_back(k);
    return out;
}

WeightVector dense_x1_closed_form(const DenseModule& m, int sign, long k) {
    QuadScalar two_mu(m.mu() * Rational(2), Rational(0), m.context());
    QuadScalar half(Rational(1, 2), Rational(0), m.context());
    if (sign < 0) {
        QuadScalar c = (m.b_coeff(k - 1) - m.b_coeff(k) + two_mu + QuadScalar(4 * k - 2)) * -half;
        return WeightVector::unit(BasisIndex(k - 1), std::move(c));
    }
    QuadScalar c = m.a_coeff(k) * half *
                   (m.b_coeff(k + 1) - m.b_coeff(k) - two_mu - QuadScalar(4 * k + 2));
    return WeightVector::unit(BasisIndex(k + 1), std::move(c));
}

} // namespace yanglab
