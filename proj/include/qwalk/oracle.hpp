#pragma once

#include <Eigen/Dense>

#include "qwalk/state.hpp"

namespace qwalk {
namespace oracle {

// Dense reference operators over flattened state vectors. These are literal
// entry-by-entry transcriptions of the step rules, independent of the loop
// implementations in single.cpp/pair.cpp, and are used to generate and check
// expected values in tests.
//
// Position shifts wrap cyclically so every transcription is a square matrix
// acting on the whole lattice; differential tests only ever drive states
// whose support stays away from the edge, where wrap and hard boundary agree.
enum class DenseKind {
    HadamardCoin,      // single index (coin, x)
    ConditionalShift,  // single index
    HadamardStep,      // single index; shift · (H ⊗ 1)
    CoinlessReduced,   // single index; the reduced coin-retaining shift
    ExtendedStep,      // extended index (coin, ancilla, x)
    BecLocal,          // single index; the per-particle condensate kick
    PairStep,          // pair index (c1, c2, x1, x2); reduced shift on both particles
    BecStep            // pair index; co-moving condensate kick on the diagonal
};

// Flattened dimension the kind acts on for the given lattice.
int dense_dimension(DenseKind kind, const Lattice& lattice);

// Throws DimensionTooLargeError when the flattened dimension exceeds 4096.
Eigen::MatrixXcd dense_operator(DenseKind kind, SignVariant sign, const Lattice& lattice);

// Flattening that matches the state layouts exactly.
Eigen::VectorXcd flatten(const SingleState& s);
Eigen::VectorXcd flatten(const ExtendedState& s);
Eigen::VectorXcd flatten(const PairState& s);
SingleState unflatten_single(const Eigen::VectorXcd& v, const Lattice& lattice);
ExtendedState unflatten_extended(const Eigen::VectorXcd& v, const Lattice& lattice);
PairState unflatten_pair(const Eigen::VectorXcd& v, const Lattice& lattice);

enum class PathKind { CoinlessReduced, HadamardStep };

// Sums the exact ±(1/√2)^N contribution of every left/right decision sequence
// into per-(coin, position) amplitudes. Signed path counts are integers, so
// the result is exact up to one final dyadic scaling. The returned state is
// unnormalized. Throws TooManyStepsError for steps > 12.
SingleState enumerate_paths(PathKind kind, SignVariant sign, int steps, CoinSpec initial);

}  // namespace oracle
}  // namespace qwalk
