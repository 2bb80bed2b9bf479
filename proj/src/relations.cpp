#include "yanglab/relations.hpp"

#include <omp.h>

#include <cstdlib>
#include <exception>

namespace yanglab {

std::string relation_name(RelationId id) {
    switch (id) {
        case RelationId::HHCommute: return "HH-commute";
        case RelationId::H0XLadder: return "H0-X ladder";
        case RelationId::XXtoH: return "XX-to-H";
        case RelationId::Eq1: return "Eq-(1)";
        default: return "Eq-(2)";
    }
}

std::vector<RelationInstance> relation_instances(unsigned K) {
    std::vector<RelationInstance> out;
    for (unsigned k = 0; k <= K; ++k)
        for (unsigned l = k + 1; l <= K; ++l)
            out.push_back({RelationId::HHCommute, k, l, 0});
    for (unsigned k = 0; k <= K; ++k)
        for (int sign : {+1, -1})
            out.push_back({RelationId::H0XLadder, k, 0, sign});
    for (unsigned k = 0; k <= K; ++k)
        for (unsigned l = 0; l <= K; ++l)
            out.push_back({RelationId::XXtoH, k, l, 0});
    for (RelationId id : {RelationId::Eq1, RelationId::Eq2})
        for (unsigned k = 0; k <= K; ++k)
            for (unsigned l = 0; l <= K; ++l)
                for (int sign : {+1, -1})
                    out.push_back({id, k, l, sign});
    return out;
}

namespace {

WeightVector commutator(const Module& m, const GeneratorSymbol& g1,
                        const GeneratorSymbol& g2, const WeightVector& v) {
    return apply_generator(m, g1, apply_generator(m, g2, v)) -
           apply_generator(m, g2, apply_generator(m, g1, v));
}

WeightVector anticommutator(const Module& m, const GeneratorSymbol& g1,
                            const GeneratorSymbol& g2, const WeightVector& v) {
    return apply_generator(m, g1, apply_generator(m, g2, v)) +
           apply_generator(m, g2, apply_generator(m, g1, v));
}

} // namespace

WeightVector relation_residual(const Module& m, const RelationInstance& inst,
                               const BasisIndex& i) {
    const WeightVector e = WeightVector::unit(i);
    const QuadScalar sign(Rational(inst.sign));
    switch (inst.id) {
        case RelationId::HHCommute:
            return commutator(m, GeneratorSymbol::h(inst.k), GeneratorSymbol::h(inst.l), e);
        case RelationId::H0XLadder: {
            GeneratorSymbol x = GeneratorSymbol::x(inst.sign, inst.k);
            return commutator(m, GeneratorSymbol::h(0), x, e) -
                   apply_generator(m, x, e) * (sign * QuadScalar(2));
        }
        case RelationId::XXtoH:
            return commutator(m, GeneratorSymbol::xplus(inst.k), GeneratorSymbol::xminus(inst.l), e) -
                   apply_generator(m, GeneratorSymbol::h(inst.k + inst.l), e);
        case RelationId::Eq1: {
            GeneratorSymbol xl = GeneratorSymbol::x(inst.sign, inst.l);
            GeneratorSymbol xl1 = GeneratorSymbol::x(inst.sign, inst.l + 1);
            return commutator(m, GeneratorSymbol::h(inst.k + 1), xl, e) -
                   commutator(m, GeneratorSymbol::h(inst.k), xl1, e) -
                   anticommutator(m, GeneratorSymbol::h(inst.k), xl, e) * sign;
        }
        default: {
            GeneratorSymbol xk = GeneratorSymbol::x(inst.sign, inst.k);
            GeneratorSymbol xk1 = GeneratorSymbol::x(inst.sign, inst.k + 1);
            GeneratorSymbol xl = GeneratorSymbol::x(inst.sign, inst.l);
            GeneratorSymbol xl1 = GeneratorSymbol::x(inst.sign, inst.l + 1);
            return commutator(m, xk1, xl, e) - commutator(m, xk, xl1, e) -
                   anticommutator(m, xk, xl, e) * sign;
        }
    }
}

int relation_worker_count() {
    int n = omp_get_max_threads();
    if (const char* env = std::getenv("YANGLAB_THREADS")) {
        int cap = std::atoi(env);
        if (cap > 0 && cap < n) n = cap;
    }
    return n;
}

std::vector<RelationReport> check_defining_relations_serial(const Module& m, unsigned K,
                                                            std::span<const BasisIndex> sample) {
    std::vector<RelationInstance> instances = relation_instances(K);
    std::vector<RelationReport> out;
    out.reserve(instances.size() * sample.size());
    for (const RelationInstance& inst : instances)
        for (const BasisIndex& i : sample)
            out.push_back({inst.id, inst.k, inst.l, inst.sign, i, relation_residual(m, inst, i)});
    return out;
}

std::vector<RelationReport> check_defining_relations(const Module& m, unsigned K,
                                                     std::span<const BasisIndex> sample) {
    const std::vector<RelationInstance> instances = relation_instances(K);
    const size_t n_inst = instances.size();
    const size_t n_samp = sample.size();
    std::vector<RelationReport> out(n_inst * n_samp);
    std::exception_ptr failure;

    // items are independent and land at fixed offsets, so the merged
    // report order matches the serial reference exactly
    #pragma omp parallel for schedule(dynamic) num_threads(relation_worker_count())
    for (long long w = 0; w < static_cast<long long>(n_inst * n_samp); ++w) {
        try {
            const RelationInstance& inst = instances[static_cast<size_t>(w) / n_samp];
            const BasisIndex& i = sample[static_cast<size_t>(w) % n_samp];
            out[static_cast<size_t>(w)] =
                {inst.id, inst.k, inst.l, inst.sign, i, relation_residual(m, inst, i)};
        } catch (...) {
            #pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

} // namespace yanglab
