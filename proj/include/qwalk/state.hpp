#pragma once

#include <array>
#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "qwalk/errors.hpp"

namespace qwalk {

using Amp = std::complex<double>;

inline constexpr double kInvSqrt2 = 0.7071067811865475244008443621048490;

// Bounded 1-D lattice: sites origin-half_width .. origin+half_width, unit
// step length. half_width must be at least the planned number of steps so
// that a walk never reaches the edge.
struct Lattice {
    int origin = 0;
    int half_width = 0;

    int size() const { return 2 * half_width + 1; }
    int min_site() const { return origin - half_width; }
    int max_site() const { return origin + half_width; }
    bool contains(int x) const { return x >= min_site() && x <= max_site(); }
    int index_of(int x) const { return x - min_site(); }
    int site_at(int index) const { return min_site() + index; }
    bool operator==(const Lattice&) const = default;
};

// Coin(2) ⊗ position amplitudes, dense over the lattice. amp is coin-major:
// amp[c * size + i] is the amplitude of coin c at site index i.
struct SingleState {
    Lattice lattice;
    std::vector<Amp> amp;

    SingleState() = default;
    explicit SingleState(const Lattice& lat) : lattice(lat), amp(2 * static_cast<size_t>(lat.size())) {}

    Amp& at(int coin, int x) { return amp[static_cast<size_t>(coin) * lattice.size() + lattice.index_of(x)]; }
    const Amp& at(int coin, int x) const {
        return amp[static_cast<size_t>(coin) * lattice.size() + lattice.index_of(x)];
    }

    double norm_sq() const;
    double norm() const;
};

// Coin(2) ⊗ momentum-ancilla(2) ⊗ position. amp[(c*2 + a) * size + i].
struct ExtendedState {
    Lattice lattice;
    std::vector<Amp> amp;

    ExtendedState() = default;
    explicit ExtendedState(const Lattice& lat) : lattice(lat), amp(4 * static_cast<size_t>(lat.size())) {}

    Amp& at(int coin, int ancilla, int x) {
        return amp[(static_cast<size_t>(coin) * 2 + ancilla) * lattice.size() + lattice.index_of(x)];
    }
    const Amp& at(int coin, int ancilla, int x) const {
        return amp[(static_cast<size_t>(coin) * 2 + ancilla) * lattice.size() + lattice.index_of(x)];
    }

    double norm_sq() const;
    double norm() const;
};

// Two particles on a shared lattice: coin1(2) ⊗ coin2(2) ⊗ pos1 ⊗ pos2.
// amp[((c1*2 + c2) * size + i1) * size + i2].
struct PairState {
    Lattice lattice;
    std::vector<Amp> amp;

    PairState() = default;
    explicit PairState(const Lattice& lat)
        : lattice(lat), amp(4 * static_cast<size_t>(lat.size()) * static_cast<size_t>(lat.size())) {}

    Amp& at(int c1, int c2, int x1, int x2) {
        const size_t n = lattice.size();
        return amp[((static_cast<size_t>(c1) * 2 + c2) * n + lattice.index_of(x1)) * n + lattice.index_of(x2)];
    }
    const Amp& at(int c1, int c2, int x1, int x2) const {
        const size_t n = lattice.size();
        return amp[((static_cast<size_t>(c1) * 2 + c2) * n + lattice.index_of(x1)) * n + lattice.index_of(x2)];
    }

    double norm_sq() const;
    double norm() const;
};

// The ± carried by the reduced shift operator.
enum class SignVariant { Plus, Minus };

enum class WalkKind { Hadamard, CoinlessReduced, Extended, Pair, Bec, Classical };

// Single-particle coin states selectable as initial conditions.
enum class CoinSpec { Zero, One, Plus, PlusI };

// Two-particle coin states: the four Bell states plus the complex-amplitude
// variant (|01⟩ + i|10⟩)/√2.
enum class PairSpec { PsiPlus, PsiMinus, PhiPlus, PhiMinus, PsiI };

struct InitialSpec {
    std::variant<CoinSpec, PairSpec> state = CoinSpec::PlusI;
    int origin = 0;

    bool is_pair() const { return std::holds_alternative<PairSpec>(state); }
    CoinSpec coin() const;  // throws ConfigError if a pair spec is stored
    PairSpec pair() const;  // throws ConfigError if a coin spec is stored
};

struct WalkConfig {
    WalkKind kind = WalkKind::Hadamard;
    int steps = 0;
    SignVariant sign = SignVariant::Plus;
    InitialSpec initial{};
    bool normalize_each_step = true;
    std::array<Amp, 2> ancilla_amplitudes{Amp{kInvSqrt2, 0.0}, Amp{kInvSqrt2, 0.0}};

    void validate() const;  // throws ConfigError
};

// A state together with the norm it had before renormalization.
template <class State>
struct WithNorm {
    State state;
    double prior_norm = 1.0;
};

// Rescales to unit norm and reports the previous norm as a diagnostic.
// Throws ZeroNormError when the norm is below 1e-300.
WithNorm<SingleState> normalize(SingleState s);
WithNorm<ExtendedState> normalize(ExtendedState s);
WithNorm<PairState> normalize(PairState s);

// Localized initial states at the requested origin.
SingleState make_initial_single(const InitialSpec& spec, const Lattice& lattice);
PairState make_initial_pair(const InitialSpec& spec, const Lattice& lattice);
ExtendedState make_initial_extended(const InitialSpec& spec, const std::array<Amp, 2>& ancilla,
                                    const Lattice& lattice);

// String forms used by the CLI and the python bindings.
SignVariant parse_sign(const std::string& s);
WalkKind parse_walk_kind(const std::string& s);
InitialSpec parse_initial(const std::string& s, int origin = 0);
std::string to_string(SignVariant s);
std::string to_string(WalkKind k);
std::string to_string(const InitialSpec& spec);

}  // namespace qwalk
