#pragma once

#include <vector>

#include "qwalk/measure.hpp"
#include "qwalk/state.hpp"

namespace qwalk {

// One step of the two-particle walk: the reduced coin-retaining shift applied
// independently to (coin1, pos1) and (coin2, pos2). Coin sectors never mix.
WithNorm<PairState> pair_step(const PairState& s, SignVariant sign, bool normalize_each_step);

// Local condensate kick on one particle (1 or 2):
//   |0,x⟩ → (1/2)[|1,x-1⟩ + |1,x+1⟩ + 2|0,x⟩]
//   |1,x⟩ → (1/2)[|0,x-1⟩ + |0,x+1⟩ + 2|1,x⟩]
// The coin flips whenever the particle moves and is kept when it stays. Not
// norm-preserving (a point state's image has norm² 3/2); no renormalization.
PairState bec_local_apply(const PairState& s, int particle);

struct BecStepResult {
    PairState state;
    // Squared norm of the co-located image relative to the input, before
    // renormalization. Exceeds 1 because the local kicks are not isometries.
    double survival = 1.0;
};

// Constrained condensate step. The bound pair moves as a unit with the local
// kick's amplitudes: each co-located component |c1,c2⟩ at y yields
// (1/2)|c̄1,c̄2⟩ at y−1 and y+1 plus |c1,c2⟩ at y; the combinations that
// would separate the particles are suppressed. The result stays on the
// x1 = x2 diagonal and is renormalized. Requires co-located input support.
BecStepResult bec_constrained_step(const PairState& s);

struct PairRun {
    PairState state;
    // pair kind: image norm per step before renormalization.
    // bec kind: survival per step.
    std::vector<double> prior_norms;
};

// Iterates pair_step or bec_constrained_step N times on a lattice sized
// half_width = N around the shared initial position.
PairRun run_pair(const WalkConfig& config);

// Coincidence probabilities after each step 1..config.steps of the pair walk,
// from one incremental evolution (renormalized every step).
std::vector<std::pair<int, Coincidence>> coincidence_scan(const WalkConfig& config);

}  // namespace qwalk
