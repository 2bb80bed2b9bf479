#pragma once

#include <span>
#include <string>

#include "yanglab/module.hpp"

namespace yanglab {

enum class RelationId { HHCommute, H0XLadder, XXtoH, Eq1, Eq2 };

std::string relation_name(RelationId id);

/// One relation of the defining presentation, instantiated at levels (k,l)
/// and sign (+1/-1, or 0 where the relation has no sign):
///   HH-commute : [H_k, H_l] = 0                         (k < l)
///   H0-X ladder: [H_0, X_k^s] = 2s X_k^s
///   XX-to-H    : [X_k^+, X_l^-] = H_{k+l}
///   Eq-(1)     : [H_{k+1}, X_l^s] - [H_k, X_{l+1}^s] = s (H_k X_l^s + X_l^s H_k)
///   Eq-(2)     : [X_{k+1}^s, X_l^s] - [X_k^s, X_{l+1}^s] = s (X_k^s X_l^s + X_l^s X_k^s)
struct RelationInstance {
    RelationId id;
    unsigned k = 0, l = 0;
    int sign = 0;
};

/// Every relation instance with levels <= K, in a fixed deterministic order.
std::vector<RelationInstance> relation_instances(unsigned K);

/// LHS - RHS of the instance applied to the basis vector; zero iff the
/// relation holds there.
WeightVector relation_residual(const Module& m, const RelationInstance& inst,
                               const BasisIndex& i);

struct RelationReport {
    RelationId id;
    unsigned k = 0, l = 0;
    int sign = 0;
    BasisIndex index;
    WeightVector residual;

    bool pass() const { return residual.is_zero(); }
    bool operator==(const RelationReport&) const = default;
};

/// Evaluates every instance with levels <= K on every sample vector.
/// Work items are independent; the default entry point fans them out over
/// OpenMP workers (capped by YANGLAB_THREADS) and assembles reports in the
/// same deterministic order as the serial reference.
std::vector<RelationReport> check_defining_relations(const Module& m, unsigned K,
                                                     std::span<const BasisIndex> sample);

/// Serial reference implementation; must produce bit-identical reports.
std::vector<RelationReport> check_defining_relations_serial(const Module& m, unsigned K,
                                                            std::span<const BasisIndex> sample);

/// Worker cap honoring the YANGLAB_THREADS environment variable.
int relation_worker_count();

} // namespace yanglab
