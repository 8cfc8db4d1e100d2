#pragma once

#include <complex>
#include <random>

#include "qwalk/state.hpp"

namespace qwalk::testing {

inline bool amp_close(const Amp& a, const Amp& b, double tol) { return std::abs(a - b) <= tol; }

template <class State>
bool states_close(const State& a, const State& b, double tol) {
    if (a.amp.size() != b.amp.size()) return false;
    for (size_t k = 0; k < a.amp.size(); ++k)
        if (!amp_close(a.amp[k], b.amp[k], tol)) return false;
    return true;
}

template <class State>
double max_amp_diff(const State& a, const State& b) {
    double worst = 0.0;
    for (size_t k = 0; k < a.amp.size(); ++k) worst = std::max(worst, std::abs(a.amp[k] - b.amp[k]));
    return worst;
}

// Random normalized state with support at least `margin` sites from the edge.
inline SingleState random_single(const Lattice& lattice, std::mt19937& rng, int margin = 1) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    SingleState s(lattice);
    const int n = lattice.size();
    for (int c = 0; c < 2; ++c)
        for (int i = margin; i < n - margin; ++i)
            s.amp[static_cast<size_t>(c) * n + i] = Amp{gauss(rng), gauss(rng)};
    return normalize(std::move(s)).state;
}

inline ExtendedState random_extended(const Lattice& lattice, std::mt19937& rng, int margin = 1) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ExtendedState s(lattice);
    const int n = lattice.size();
    for (int b = 0; b < 4; ++b)
        for (int i = margin; i < n - margin; ++i)
            s.amp[static_cast<size_t>(b) * n + i] = Amp{gauss(rng), gauss(rng)};
    return normalize(std::move(s)).state;
}

}  // namespace qwalk::testing
