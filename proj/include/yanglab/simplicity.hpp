#pragma once

#include <optional>

#include "yanglab/tensor.hpp"

namespace yanglab {

/// One critical point of the simplicity criterion for
/// U = V(mu,tau,b_mu) (x) W_1(r): the value of b_mu at which U becomes
/// reducible, together with the eigen-ratio t of the submodule's rung at
/// weight mu+1. The sign labels the branch of +- mu sqrt(tau); the '+'
/// branch pairs with t = (-(mu+1) - sqrt(tau))/2 and the '-' branch with
/// t = (-(mu+1) + sqrt(tau))/2, which is the pairing forced by
/// b = mu (r - 1 - t) - a_mu.
struct SimplicityWitness {
    int sign = +1;
    QuadScalar t;
    QuadScalar b_critical;
    bool operator==(const SimplicityWitness&) const = default;
};

struct SimplicityVerdict {
    bool simple = true;
    /// Both critical points when simple; the matched one(s) when reducible.
    /// Empty when the working field cannot express sqrt(tau).
    std::vector<SimplicityWitness> witnesses;
    /// sqrt(tau) is absent from the working field, so no rational-in-field
    /// b_mu can reach a critical point; simplicity then holds for field
    /// reasons and no witnesses are representable.
    bool field_obstruction = false;
};

/// Closed-form simplicity decision:
/// U simple  <=>  b_mu != (mu^2 + mu +- mu sqrt(tau))/2 - a_mu + mu (r-1).
/// Computes in `working_field` when given (default Q(sqrt(tau))) and
/// compares exactly. (mu, tau) must define a valid dense module.
SimplicityVerdict simplicity_criterion(const Rational& mu, const Rational& tau,
                                       const QuadScalar& b_mu, const QuadScalar& r,
                                       std::optional<FieldContext> working_field = {});

struct LadderRung {
    Rational weight;
    WeightVector vector;
    bool operator==(const LadderRung&) const = default;
};

/// Windowed search for a proper submodule of U = dense (x) W_1: starting
/// from each H_1 eigenvector at weight mu+1, walks the X_0^+- orbit for
/// K-2 rungs each way and demands every rung be a nonzero H_1 eigenvector
/// whose X_0^-+ X_0^+- image folds back onto the previous rung. Returns the
/// one-dimensional ladder when a walk closes, absent otherwise. Rung
/// vectors are normalized like eigenvectors (last labeled coordinate 1)
/// and sorted by weight. This is a necessary check over the window, not a
/// proof of reducibility.
std::optional<std::vector<LadderRung>> submodule_probe(const TensorModule& u, int window);

} // namespace yanglab
