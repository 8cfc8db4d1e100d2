#include "qwalk/single.hpp"

#include <cmath>

namespace qwalk {

namespace {

// Support may not touch either lattice edge; every step operator moves
// amplitude by at most one site.
void check_interior(const SingleState& s, const char* who) {
    const int n = s.lattice.size();
    for (int c = 0; c < 2; ++c) {
        if (s.amp[static_cast<size_t>(c) * n] != Amp{} ||
            s.amp[static_cast<size_t>(c) * n + n - 1] != Amp{})
            throw BoundaryOverflowError(std::string(who) + ": support touches the lattice boundary");
    }
}

void check_interior(const ExtendedState& s, const char* who) {
    const int n = s.lattice.size();
    for (int b = 0; b < 4; ++b) {
        if (s.amp[static_cast<size_t>(b) * n] != Amp{} ||
            s.amp[static_cast<size_t>(b) * n + n - 1] != Amp{})
            throw BoundaryOverflowError(std::string(who) + ": support touches the lattice boundary");
    }
}

}  // namespace

SingleState hadamard_coin(const SingleState& s) {
    SingleState out(s.lattice);
    const int n = s.lattice.size();
    for (int i = 0; i < n; ++i) {
        const Amp a0 = s.amp[i];
        const Amp a1 = s.amp[static_cast<size_t>(n) + i];
        out.amp[i] = (a0 + a1) * kInvSqrt2;
        out.amp[static_cast<size_t>(n) + i] = (a0 - a1) * kInvSqrt2;
    }
    return out;
}

SingleState conditional_shift(const SingleState& s) {
    check_interior(s, "conditional_shift");
    SingleState out(s.lattice);
    const int n = s.lattice.size();
    for (int i = 1; i < n - 1; ++i) {
        out.amp[i - 1] = s.amp[i];
        out.amp[static_cast<size_t>(n) + i + 1] = s.amp[static_cast<size_t>(n) + i];
    }
    return out;
}

SingleState hadamard_walk_step(const SingleState& s) { return conditional_shift(hadamard_coin(s)); }

WithNorm<SingleState> coinless_step_reduced(const SingleState& s, SignVariant sign,
                                            bool normalize_each_step) {
    check_interior(s, "coinless_step_reduced");
    const double sgn = sign == SignVariant::Plus ? 1.0 : -1.0;
    SingleState out(s.lattice);
    const int n = s.lattice.size();
    for (int i = 1; i < n - 1; ++i) {
        const Amp a0 = s.amp[i] * kInvSqrt2;
        out.amp[i - 1] += a0;
        out.amp[i + 1] += sgn * a0;
        const Amp a1 = s.amp[static_cast<size_t>(n) + i] * kInvSqrt2;
        out.amp[static_cast<size_t>(n) + i + 1] += a1;
        out.amp[static_cast<size_t>(n) + i - 1] += sgn * a1;
    }
    const double prior = out.norm();
    if (normalize_each_step) return normalize(std::move(out));
    return {std::move(out), prior};
}

ExtendedState extended_step(const ExtendedState& s) {
    check_interior(s, "extended_step");
    ExtendedState out(s.lattice);
    const int n = s.lattice.size();
    // (coin, ancilla) → displacement: (0,0) and (1,1) move left, the rest right.
    for (int c = 0; c < 2; ++c)
        for (int a = 0; a < 2; ++a) {
            const int d = (c == a) ? -1 : +1;
            const size_t block = (static_cast<size_t>(c) * 2 + a) * n;
            for (int i = 1; i < n - 1; ++i) out.amp[block + i + d] = s.amp[block + i];
        }
    return out;
}

ExtendedState extended_step_inverse(const ExtendedState& s) {
    check_interior(s, "extended_step_inverse");
    ExtendedState out(s.lattice);
    const int n = s.lattice.size();
    for (int c = 0; c < 2; ++c)
        for (int a = 0; a < 2; ++a) {
            const int d = (c == a) ? +1 : -1;
            const size_t block = (static_cast<size_t>(c) * 2 + a) * n;
            for (int i = 1; i < n - 1; ++i) out.amp[block + i + d] = s.amp[block + i];
        }
    return out;
}

Distribution classical_step(const Distribution& d) {
    const int n = d.lattice.size();
    if (d.p[0] != 0.0 || d.p[n - 1] != 0.0)
        throw BoundaryOverflowError("classical_step: support touches the lattice boundary");
    Distribution out(d.lattice);
    for (int i = 1; i < n - 1; ++i) {
        out.p[i - 1] += 0.5 * d.p[i];
        out.p[i + 1] += 0.5 * d.p[i];
    }
    return out;
}

Distribution SingleRun::distribution() const {
    if (const SingleState* s = std::get_if<SingleState>(&state)) return position_distribution(*s);
    return position_distribution(std::get<ExtendedState>(state));
}

SingleRun run_single(const WalkConfig& config) {
    config.validate();
    const Lattice lattice{config.initial.origin, config.steps};
    SingleRun run;
    switch (config.kind) {
        case WalkKind::Hadamard: {
            SingleState s = make_initial_single(config.initial, lattice);
            for (int k = 0; k < config.steps; ++k) {
                s = hadamard_walk_step(s);
                run.prior_norms.push_back(s.norm());
                if (config.normalize_each_step) s = normalize(std::move(s)).state;
            }
            run.state = std::move(s);
            break;
        }
        case WalkKind::CoinlessReduced: {
            SingleState s = make_initial_single(config.initial, lattice);
            for (int k = 0; k < config.steps; ++k) {
                auto [next, prior] = coinless_step_reduced(s, config.sign, config.normalize_each_step);
                s = std::move(next);
                run.prior_norms.push_back(prior);
            }
            run.state = std::move(s);
            break;
        }
        case WalkKind::Extended: {
            ExtendedState s =
                make_initial_extended(config.initial, config.ancilla_amplitudes, lattice);
            for (int k = 0; k < config.steps; ++k) {
                s = extended_step(s);
                run.prior_norms.push_back(s.norm());
                if (config.normalize_each_step) s = normalize(std::move(s)).state;
            }
            run.state = std::move(s);
            break;
        }
        default:
            throw ConfigError("run_single: walk kind '" + to_string(config.kind) +
                              "' is not a single-particle quantum walk");
    }
    return run;
}

Distribution run_classical(const WalkConfig& config) {
    if (config.kind != WalkKind::Classical)
        throw ConfigError("run_classical: walk kind must be classical");
    if (config.steps < 0) throw ConfigError("steps must be non-negative");
    const Lattice lattice{config.initial.origin, config.steps};
    Distribution d(lattice);
    d.at(config.initial.origin) = 1.0;
    for (int k = 0; k < config.steps; ++k) d = classical_step(d);
    return d;
}

std::vector<std::pair<int, double>> variance_scan(const WalkConfig& config, int min_steps) {
    config.validate();
    if (min_steps < 1 || min_steps > config.steps)
        throw ConfigError("variance_scan: need 1 <= min_steps <= steps");
    std::vector<std::pair<int, double>> rows;
    const Lattice lattice{config.initial.origin, config.steps};

    if (config.kind == WalkKind::Classical) {
        Distribution d(lattice);
        d.at(config.initial.origin) = 1.0;
        for (int k = 1; k <= config.steps; ++k) {
            d = classical_step(d);
            if (k >= min_steps) rows.emplace_back(k, variance(d));
        }
        return rows;
    }

    auto record = [&](int k, const auto& state) {
        if (k < min_steps) return;
        // Measure a normalized copy so the scan also works when the evolving
        // state is deliberately left unnormalized.
        rows.emplace_back(k, variance(position_distribution(normalize(state).state)));
    };
    switch (config.kind) {
        case WalkKind::Hadamard: {
            SingleState s = make_initial_single(config.initial, lattice);
            for (int k = 1; k <= config.steps; ++k) {
                s = hadamard_walk_step(s);
                if (config.normalize_each_step) s = normalize(std::move(s)).state;
                record(k, s);
            }
            break;
        }
        case WalkKind::CoinlessReduced: {
            SingleState s = make_initial_single(config.initial, lattice);
            for (int k = 1; k <= config.steps; ++k) {
                s = coinless_step_reduced(s, config.sign, config.normalize_each_step).state;
                record(k, s);
            }
            break;
        }
        case WalkKind::Extended: {
            ExtendedState s =
                make_initial_extended(config.initial, config.ancilla_amplitudes, lattice);
            for (int k = 1; k <= config.steps; ++k) {
                s = extended_step(s);
                record(k, s);
            }
            break;
        }
        default:
            throw ConfigError("variance_scan: unsupported walk kind '" + to_string(config.kind) + "'");
    }
    return rows;
}

}  // namespace qwalk
