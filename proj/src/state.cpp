#include "qwalk/state.hpp"

#include <cmath>

namespace qwalk {

namespace {

double vector_norm_sq(const std::vector<Amp>& v) {
    double total = 0.0;
    for (const Amp& a : v) total += std::norm(a);
    return total;
}

double scale_to_unit(std::vector<Amp>& v) {
    const double n = std::sqrt(vector_norm_sq(v));
    if (n < 1e-300) throw ZeroNormError("cannot normalize a state with norm < 1e-300");
    const double inv = 1.0 / n;
    for (Amp& a : v) a *= inv;
    return n;
}

}  // namespace

double SingleState::norm_sq() const { return vector_norm_sq(amp); }
double SingleState::norm() const { return std::sqrt(norm_sq()); }
double ExtendedState::norm_sq() const { return vector_norm_sq(amp); }
double ExtendedState::norm() const { return std::sqrt(norm_sq()); }
double PairState::norm_sq() const { return vector_norm_sq(amp); }
double PairState::norm() const { return std::sqrt(norm_sq()); }

WithNorm<SingleState> normalize(SingleState s) {
    const double prior = scale_to_unit(s.amp);
    return {std::move(s), prior};
}

WithNorm<ExtendedState> normalize(ExtendedState s) {
    const double prior = scale_to_unit(s.amp);
    return {std::move(s), prior};
}

WithNorm<PairState> normalize(PairState s) {
    const double prior = scale_to_unit(s.amp);
    return {std::move(s), prior};
}

CoinSpec InitialSpec::coin() const {
    if (const CoinSpec* c = std::get_if<CoinSpec>(&state)) return *c;
    throw ConfigError("a single-particle walk requires a coin initial state");
}

PairSpec InitialSpec::pair() const {
    if (const PairSpec* p = std::get_if<PairSpec>(&state)) return *p;
    throw ConfigError("a two-particle walk requires a pair initial state");
}

void WalkConfig::validate() const {
    if (steps < 0) throw ConfigError("steps must be non-negative");
    const bool pair_kind = kind == WalkKind::Pair || kind == WalkKind::Bec;
    if (pair_kind && !initial.is_pair())
        throw ConfigError("walk kind '" + to_string(kind) + "' requires a pair initial state");
    if (!pair_kind && kind != WalkKind::Classical && initial.is_pair())
        throw ConfigError("walk kind '" + to_string(kind) + "' requires a coin initial state");
    const double anorm =
        std::norm(ancilla_amplitudes[0]) + std::norm(ancilla_amplitudes[1]);
    if (std::abs(anorm - 1.0) > 1e-12)
        throw ConfigError("ancilla amplitudes must have unit norm");
}

SingleState make_initial_single(const InitialSpec& spec, const Lattice& lattice) {
    if (!lattice.contains(spec.origin)) throw ConfigError("initial position outside the lattice");
    SingleState s(lattice);
    const int x0 = spec.origin;
    switch (spec.coin()) {
        case CoinSpec::Zero:
            s.at(0, x0) = 1.0;
            break;
        case CoinSpec::One:
            s.at(1, x0) = 1.0;
            break;
        case CoinSpec::Plus:
            s.at(0, x0) = kInvSqrt2;
            s.at(1, x0) = kInvSqrt2;
            break;
        case CoinSpec::PlusI:
            s.at(0, x0) = kInvSqrt2;
            s.at(1, x0) = Amp{0.0, kInvSqrt2};
            break;
    }
    return s;
}

PairState make_initial_pair(const InitialSpec& spec, const Lattice& lattice) {
    if (!lattice.contains(spec.origin)) throw ConfigError("initial position outside the lattice");
    PairState s(lattice);
    const int x0 = spec.origin;
    switch (spec.pair()) {
        case PairSpec::PsiPlus:
            s.at(0, 1, x0, x0) = kInvSqrt2;
            s.at(1, 0, x0, x0) = kInvSqrt2;
            break;
        case PairSpec::PsiMinus:
            s.at(0, 1, x0, x0) = kInvSqrt2;
            s.at(1, 0, x0, x0) = -kInvSqrt2;
            break;
        case PairSpec::PhiPlus:
            s.at(0, 0, x0, x0) = kInvSqrt2;
            s.at(1, 1, x0, x0) = kInvSqrt2;
            break;
        case PairSpec::PhiMinus:
            s.at(0, 0, x0, x0) = kInvSqrt2;
            s.at(1, 1, x0, x0) = -kInvSqrt2;
            break;
        case PairSpec::PsiI:
            s.at(0, 1, x0, x0) = kInvSqrt2;
            s.at(1, 0, x0, x0) = Amp{0.0, kInvSqrt2};
            break;
    }
    return s;
}

ExtendedState make_initial_extended(const InitialSpec& spec, const std::array<Amp, 2>& ancilla,
                                    const Lattice& lattice) {
    if (!lattice.contains(spec.origin)) throw ConfigError("initial position outside the lattice");
    const double anorm = std::norm(ancilla[0]) + std::norm(ancilla[1]);
    if (std::abs(anorm - 1.0) > 1e-12) throw ConfigError("ancilla amplitudes must have unit norm");
    std::array<Amp, 2> coin{};
    switch (spec.coin()) {
        case CoinSpec::Zero:
            coin = {Amp{1.0, 0.0}, Amp{0.0, 0.0}};
            break;
        case CoinSpec::One:
            coin = {Amp{0.0, 0.0}, Amp{1.0, 0.0}};
            break;
        case CoinSpec::Plus:
            coin = {Amp{kInvSqrt2, 0.0}, Amp{kInvSqrt2, 0.0}};
            break;
        case CoinSpec::PlusI:
            coin = {Amp{kInvSqrt2, 0.0}, Amp{0.0, kInvSqrt2}};
            break;
    }
    ExtendedState s(lattice);
    for (int c = 0; c < 2; ++c)
        for (int a = 0; a < 2; ++a) s.at(c, a, spec.origin) = coin[c] * ancilla[a];
    return s;
}

SignVariant parse_sign(const std::string& s) {
    if (s == "plus") return SignVariant::Plus;
    if (s == "minus") return SignVariant::Minus;
    throw ConfigError("unknown sign variant '" + s + "' (expected plus|minus)");
}

WalkKind parse_walk_kind(const std::string& s) {
    if (s == "hadamard") return WalkKind::Hadamard;
    if (s == "coinless" || s == "coinless-reduced") return WalkKind::CoinlessReduced;
    if (s == "extended") return WalkKind::Extended;
    if (s == "pair") return WalkKind::Pair;
    if (s == "bec") return WalkKind::Bec;
    if (s == "classical") return WalkKind::Classical;
    throw ConfigError("unknown walk kind '" + s + "'");
}

InitialSpec parse_initial(const std::string& s, int origin) {
    InitialSpec spec;
    spec.origin = origin;
    if (s == "zero")
        spec.state = CoinSpec::Zero;
    else if (s == "one")
        spec.state = CoinSpec::One;
    else if (s == "plus")
        spec.state = CoinSpec::Plus;
    else if (s == "plus-i")
        spec.state = CoinSpec::PlusI;
    else if (s == "psi-plus")
        spec.state = PairSpec::PsiPlus;
    else if (s == "psi-minus")
        spec.state = PairSpec::PsiMinus;
    else if (s == "phi-plus")
        spec.state = PairSpec::PhiPlus;
    else if (s == "phi-minus")
        spec.state = PairSpec::PhiMinus;
    else if (s == "psi-i")
        spec.state = PairSpec::PsiI;
    else
        throw ConfigError("unknown initial state '" + s + "'");
    return spec;
}

std::string to_string(SignVariant s) { return s == SignVariant::Plus ? "plus" : "minus"; }

std::string to_string(WalkKind k) {
    switch (k) {
        case WalkKind::Hadamard: return "hadamard";
        case WalkKind::CoinlessReduced: return "coinless";
        case WalkKind::Extended: return "extended";
        case WalkKind::Pair: return "pair";
        case WalkKind::Bec: return "bec";
        case WalkKind::Classical: return "classical";
    }
    return "?";
}

std::string to_string(const InitialSpec& spec) {
    if (const CoinSpec* c = std::get_if<CoinSpec>(&spec.state)) {
        switch (*c) {
            case CoinSpec::Zero: return "zero";
            case CoinSpec::One: return "one";
            case CoinSpec::Plus: return "plus";
            case CoinSpec::PlusI: return "plus-i";
        }
    }
    switch (spec.pair()) {
        case PairSpec::PsiPlus: return "psi-plus";
        case PairSpec::PsiMinus: return "psi-minus";
        case PairSpec::PhiPlus: return "phi-plus";
        case PairSpec::PhiMinus: return "phi-minus";
        case PairSpec::PsiI: return "psi-i";
    }
    return "?";
}

}  // namespace qwalk
