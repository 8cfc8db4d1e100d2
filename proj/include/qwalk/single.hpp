#pragma once

#include <variant>
#include <vector>

#include "qwalk/measure.hpp"
#include "qwalk/state.hpp"

namespace qwalk {

// Hadamard rotation on the coin at every site; position untouched.
SingleState hadamard_coin(const SingleState& s);

// Conditional shift: coin 0 moves one site left, coin 1 one site right.
// Throws BoundaryOverflowError when the support touches the lattice edge.
SingleState conditional_shift(const SingleState& s);

// One step of the standard walk: conditional_shift(hadamard_coin(s)).
SingleState hadamard_walk_step(const SingleState& s);

// Reduced coin-retaining shift. The coin-0 component is mapped by
// (Σ|x-1⟩⟨x| ± Σ|x+1⟩⟨x|)/√2 and the coin-1 component by
// (Σ|x+1⟩⟨x| ± Σ|x-1⟩⟨x|)/√2; coin labels never change. The operator is not
// an isometry for generic states, so the image norm is reported and the
// result is renormalized when normalize_each_step is set.
WithNorm<SingleState> coinless_step_reduced(const SingleState& s, SignVariant sign,
                                            bool normalize_each_step);

// Three-register step: a basis permutation moving (coin, ancilla) =
// (0,0) left, (0,1) right, (1,0) right, (1,1) left. Exactly norm-preserving.
ExtendedState extended_step(const ExtendedState& s);

// Inverse basis permutation; composed with extended_step it is the identity.
ExtendedState extended_step_inverse(const ExtendedState& s);

// Classical baseline: P'(x) = P(x-1)/2 + P(x+1)/2.
Distribution classical_step(const Distribution& d);

struct SingleRun {
    std::variant<SingleState, ExtendedState> state;
    std::vector<double> prior_norms;  // image norm at each step, before renormalization

    Distribution distribution() const;
};

// Iterates the configured single-particle step N times on a lattice sized
// half_width = N around the initial position.
SingleRun run_single(const WalkConfig& config);

// Classical random-walk baseline from a delta distribution at the origin.
Distribution run_classical(const WalkConfig& config);

// Per-step variance of the position distribution for steps in
// [min_steps, config.steps], computed from a single incremental evolution.
// Valid for the hadamard, coinless, extended and classical kinds.
std::vector<std::pair<int, double>> variance_scan(const WalkConfig& config, int min_steps);

}  // namespace qwalk
