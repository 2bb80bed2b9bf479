#include "yanglab/simplicity.hpp"

#include <algorithm>

#include "yanglab/dense.hpp"
#include "yanglab/matrix.hpp"
#include "yanglab/wm.hpp"

namespace yanglab {

SimplicityVerdict simplicity_criterion(const Rational& mu, const Rational& tau,
                                       const QuadScalar& b_mu, const QuadScalar& r,
                                       std::optional<FieldContext> working_field) {
    // validates (mu, tau) and a_mu != 0 exactly as for module construction
    DenseModule probe_module(mu, tau, working_field ? QuadScalar(0) : b_mu);

    FieldContext field = working_field.value_or(probe_module.context());
    QuadScalar b = QuadScalar(b_mu.rat(), b_mu.quad(), merge_contexts(field, b_mu.context()));
    QuadScalar rr = QuadScalar(r.rat(), r.quad(), merge_contexts(field, r.context()));

    SimplicityVerdict verdict;
    auto sqrt_tau = sqrt_in_field(QuadScalar(tau, Rational(0), field));
    if (!sqrt_tau) {
        verdict.simple = true;
        verdict.field_obstruction = true;
        return verdict;
    }

    QuadScalar a_mu(tau - (mu + Rational(1)) * (mu + Rational(1)), Rational(0), field);
    a_mu *= QuadScalar(Rational(1, 4));
    QuadScalar mu_s(mu, Rational(0), field);
    QuadScalar half(Rational(1, 2));
    QuadScalar base = (mu_s * mu_s + mu_s) * half - a_mu + mu_s * (rr - QuadScalar(1));
    QuadScalar mu_plus_1(mu + Rational(1), Rational(0), field);

    for (int sign : {+1, -1}) {
        QuadScalar signed_root = sign > 0 ? *sqrt_tau : -*sqrt_tau;
        SimplicityWitness w;
        w.sign = sign;
        w.b_critical = base + mu_s * signed_root * half;
        w.t = (-mu_plus_1 - signed_root) * half;
        verdict.witnesses.push_back(std::move(w));
    }

    std::vector<SimplicityWitness> matched;
    for (const SimplicityWitness& w : verdict.witnesses)
        if (w.b_critical == b) matched.push_back(w);
    if (!matched.empty()) {
        verdict.simple = false;
        verdict.witnesses = std::move(matched);
    }
    return verdict;
}

namespace {

struct Walk {
    std::vector<LadderRung> rungs;
    bool closed = true;
};

// scale so the last labeled nonzero coordinate is 1, like eigenvectors
WeightVector normalize_rung(const WeightVector& v) {
    return v * v.terms().rbegin()->second.inverse();
}

bool is_h1_eigenvector(const Module& m, const WeightVector& v) {
    WeightVector image = apply_generator(m, GeneratorSymbol::h(1), v);
    return image.is_zero() || v.proportional_to(image);
}

// walk one direction from the seed; `forward` is X_0^+ or X_0^-, `backward`
// the opposite ladder operator used for the fold-back check
bool walk_direction(const TensorModule& u, const WeightVector& seed,
                    const GeneratorSymbol& forward, const GeneratorSymbol& backward,
                    int steps, std::vector<LadderRung>& out) {
    WeightVector current = seed;
    for (int s = 0; s < steps; ++s) {
        WeightVector next = apply_generator(u, forward, current);
        if (next.is_zero()) return true;  // terminal rung; chain ends cleanly
        if (!is_h1_eigenvector(u, next)) return false;
        WeightVector back = apply_generator(u, backward, next);
        if (back.is_zero() || !current.proportional_to(back)) return false;
        out.push_back({*weight_of(u, next), normalize_rung(next)});
        current = std::move(next);
    }
    return true;
}

} // namespace

std::optional<std::vector<LadderRung>> submodule_probe(const TensorModule& u, int window) {
    if (window < 3) throw window_error("probe window must be >= 3");
    const auto* dense = dynamic_cast<const DenseModule*>(&u.left());
    const auto* wm = dynamic_cast<const WmModule*>(&u.right());
    if (dense == nullptr || wm == nullptr || wm->highest() != 1)
        throw validation_error("submodule probe expects U = dense (x) W_1");

    const Rational seed_weight = dense->mu() + Rational(1);
    Matrix h1 = operator_matrix(u, GeneratorSymbol::h(1), seed_weight, window);

    for (const EigenPair& eig : h1_eigenvectors(h1)) {
        std::vector<LadderRung> rungs{{seed_weight, normalize_rung(eig.vector)}};
        const int steps = window - 2;
        if (!walk_direction(u, eig.vector, GeneratorSymbol::xplus(0),
                            GeneratorSymbol::xminus(0), steps, rungs))
            continue;
        if (!walk_direction(u, eig.vector, GeneratorSymbol::xminus(0),
                            GeneratorSymbol::xplus(0), steps, rungs))
            continue;
        std::sort(rungs.begin(), rungs.end(),
                  [](const LadderRung& a, const LadderRung& b) { return a.weight < b.weight; });
        return rungs;
    }
    return std::nullopt;
}

} // namespace yanglab
