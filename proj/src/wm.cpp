#include "yanglab/wm.hpp"

namespace yanglab {

namespace {

long checked_slot(int m, const BasisIndex& i) {
    if (i.is_pair() || i.slot() < 0 || i.slot() > m)
        throw validation_error("index " + i.str() + " out of range for W_" + std::to_string(m));
    return i.slot();
}

} // namespace

WmModule::WmModule(int m, QuadScalar a) : m_(m), a_(std::move(a)) {
    if (m < 1) throw validation_error("W_m requires m >= 1");
}

Rational WmModule::weight(const BasisIndex& i) const {
    return Rational(2 * checked_slot(m_, i) - m_);
}

WeightVector WmModule::primitive_act(const GeneratorSymbol& g, const BasisIndex& i) const {
    return wm_closed_form_act(m_, a_, g, i);
}

std::vector<BasisIndex> WmModule::basis_window(int) const {
    std::vector<BasisIndex> out;
    out.reserve(static_cast<size_t>(m_) + 1);
    for (int s = 0; s <= m_; ++s) out.emplace_back(s);
    return out;
}

WeightVector wm_closed_form_act(int m, const QuadScalar& a,
                                const GeneratorSymbol& g, const BasisIndex& i) {
    long s = checked_slot(m, i);
    QuadScalar sa = a + QuadScalar(Rational(s));
    switch (g.kind) {
        case GenKind::XPlus: {
            if (s == m) return {};
            QuadScalar c = pow(sa, g.level) * QuadScalar(Rational(s + 1));
            return WeightVector::unit(BasisIndex(s + 1), std::move(c));
        }
        case GenKind::XMinus: {
            if (s == 0) return {};
            QuadScalar c = pow(sa - QuadScalar(1), g.level) * QuadScalar(Rational(m - s + 1));
            return WeightVector::unit(BasisIndex(s - 1), std::move(c));
        }
        default: {
            QuadScalar c = pow(sa - QuadScalar(1), g.level) * QuadScalar(Rational(s) * Rational(m - s + 1)) -
                           pow(sa, g.level) * QuadScalar(Rational(s + 1) * Rational(m - s));
            WeightVector out;
            out.add_term(i, std::move(c));
            return out;
        }
    }
}

DrinfeldPoly DrinfeldPoly::for_wm(int m, const QuadScalar& a) {
    DrinfeldPoly p;
    for (int j = 0; j < m; ++j) p.roots.push_back(a + QuadScalar(Rational(j)));
    return p;
}

namespace {

// ascending coefficients of prod (u - r_i), monic
std::vector<QuadScalar> coefficients_from_roots(const std::vector<QuadScalar>& roots) {
    std::vector<QuadScalar> c{QuadScalar(1)};
    for (const QuadScalar& r : roots) {
        std::vector<QuadScalar> next(c.size() + 1, QuadScalar(0));
        for (size_t j = 0; j < c.size(); ++j) {
            next[j + 1] += c[j];
            next[j] -= c[j] * r;
        }
        // keep ascending order: next[0..deg] with next[deg]=1
        std::swap(c, next);
    }
    return c;
}

} // namespace

std::vector<QuadScalar> drinfeld_series(const DrinfeldPoly& poly, unsigned K) {
    if (poly.roots.empty()) throw validation_error("Drinfeld polynomial must have degree >= 1");
    const size_t m = poly.roots.size();

    std::vector<QuadScalar> shifted; // roots of pi(u+1)
    shifted.reserve(m);
    for (const QuadScalar& r : poly.roots) shifted.push_back(r - QuadScalar(1));

    std::vector<QuadScalar> num = coefficients_from_roots(shifted);
    std::vector<QuadScalar> den = coefficients_from_roots(poly.roots);

    // In x = 1/u both pi(u+1) u^-m and pi(u) u^-m become power series
    // n(x), d(x) with constant term 1; divide to order K+1.
    auto at = [m](const std::vector<QuadScalar>& c, size_t j) {
        return j <= m ? c[m - j] : QuadScalar(0);
    };
    std::vector<QuadScalar> q(K + 2, QuadScalar(0));
    for (size_t j = 0; j <= K + 1; ++j) {
        QuadScalar acc = at(num, j);
        for (size_t t = 1; t <= j && t <= m; ++t) acc -= at(den, t) * q[j - t];
        q[j] = std::move(acc);
    }

    return {q.begin() + 1, q.end()}; // mu_k is the x^{k+1} coefficient
}

std::vector<QuadScalar> wm_highest_series(int m, const QuadScalar& a, unsigned K) {
    std::vector<QuadScalar> out;
    out.reserve(K + 1);
    BasisIndex top(m);
    for (unsigned k = 0; k <= K; ++k) {
        WeightVector hv = wm_closed_form_act(m, a, GeneratorSymbol::h(k), top);
        out.push_back(hv.coeff(top));
    }
    return out;
}

} // namespace yanglab
