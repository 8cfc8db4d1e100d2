#include "qwalk/pair.hpp"

#include <cmath>

namespace qwalk {

namespace {

void check_interior(const PairState& s, const char* who) {
    const int n = s.lattice.size();
    const size_t nn = static_cast<size_t>(n) * n;
    for (int b = 0; b < 4; ++b)
        for (int i = 0; i < n; ++i) {
            const size_t base = b * nn;
            if (s.amp[base + static_cast<size_t>(0) * n + i] != Amp{} ||
                s.amp[base + static_cast<size_t>(n - 1) * n + i] != Amp{} ||
                s.amp[base + static_cast<size_t>(i) * n] != Amp{} ||
                s.amp[base + static_cast<size_t>(i) * n + n - 1] != Amp{})
                throw BoundaryOverflowError(std::string(who) +
                                            ": support touches the lattice boundary");
        }
}

// Reduced-shift spreading of one particle's position index. Writes into a
// zeroed output state.
void spread_particle(const PairState& in, PairState& out, int particle, double sgn) {
    const int n = in.lattice.size();
    const size_t nn = static_cast<size_t>(n) * n;
    for (int b = 0; b < 4; ++b) {
        const int coin = particle == 1 ? b >> 1 : b & 1;
        // coin 0 favours x-1, coin 1 favours x+1; the other direction takes the sign.
        const double wminus = coin == 0 ? kInvSqrt2 : sgn * kInvSqrt2;
        const double wplus = coin == 0 ? sgn * kInvSqrt2 : kInvSqrt2;
        const size_t base = b * nn;
        for (int i1 = 0; i1 < n; ++i1)
            for (int i2 = 0; i2 < n; ++i2) {
                const Amp a = in.amp[base + static_cast<size_t>(i1) * n + i2];
                if (a == Amp{}) continue;
                if (particle == 1) {
                    out.amp[base + static_cast<size_t>(i1 - 1) * n + i2] += wminus * a;
                    out.amp[base + static_cast<size_t>(i1 + 1) * n + i2] += wplus * a;
                } else {
                    out.amp[base + static_cast<size_t>(i1) * n + i2 - 1] += wminus * a;
                    out.amp[base + static_cast<size_t>(i1) * n + i2 + 1] += wplus * a;
                }
            }
    }
}

}  // namespace

WithNorm<PairState> pair_step(const PairState& s, SignVariant sign, bool normalize_each_step) {
    check_interior(s, "pair_step");
    const double sgn = sign == SignVariant::Plus ? 1.0 : -1.0;
    PairState tmp(s.lattice);
    spread_particle(s, tmp, 1, sgn);
    PairState out(s.lattice);
    spread_particle(tmp, out, 2, sgn);
    const double prior = out.norm();
    if (normalize_each_step) return normalize(std::move(out));
    return {std::move(out), prior};
}

PairState bec_local_apply(const PairState& s, int particle) {
    if (particle != 1 && particle != 2) throw ConfigError("bec_local_apply: particle must be 1 or 2");
    check_interior(s, "bec_local_apply");
    PairState out(s.lattice);
    const int n = s.lattice.size();
    const size_t nn = static_cast<size_t>(n) * n;
    for (int b = 0; b < 4; ++b) {
        const int flipped = particle == 1 ? b ^ 2 : b ^ 1;
        const size_t base = b * nn;
        const size_t fbase = flipped * nn;
        for (int i1 = 0; i1 < n; ++i1)
            for (int i2 = 0; i2 < n; ++i2) {
                const Amp a = s.amp[base + static_cast<size_t>(i1) * n + i2];
                if (a == Amp{}) continue;
                if (particle == 1) {
                    out.amp[fbase + static_cast<size_t>(i1 - 1) * n + i2] += 0.5 * a;
                    out.amp[fbase + static_cast<size_t>(i1 + 1) * n + i2] += 0.5 * a;
                    out.amp[base + static_cast<size_t>(i1) * n + i2] += a;
                } else {
                    out.amp[fbase + static_cast<size_t>(i1) * n + i2 - 1] += 0.5 * a;
                    out.amp[fbase + static_cast<size_t>(i1) * n + i2 + 1] += 0.5 * a;
                    out.amp[base + static_cast<size_t>(i1) * n + i2] += a;
                }
            }
    }
    return out;
}

BecStepResult bec_constrained_step(const PairState& s) {
    check_interior(s, "bec_constrained_step");
    const int n = s.lattice.size();
    const size_t nn = static_cast<size_t>(n) * n;
    for (int b = 0; b < 4; ++b)
        for (int i1 = 0; i1 < n; ++i1)
            for (int i2 = 0; i2 < n; ++i2)
                if (i1 != i2 && s.amp[b * nn + static_cast<size_t>(i1) * n + i2] != Amp{})
                    throw ConfigError("bec_constrained_step: input support must be co-located");

    const double in_norm_sq = s.norm_sq();
    if (in_norm_sq < 1e-300) throw ZeroNormError("bec_constrained_step: input state has zero norm");
    PairState out(s.lattice);
    for (int b = 0; b < 4; ++b) {
        const int flipped = b ^ 3;  // both coins flip when the pair moves
        const size_t base = b * nn;
        const size_t fbase = flipped * nn;
        for (int i = 0; i < n; ++i) {
            const Amp a = s.amp[base + static_cast<size_t>(i) * n + i];
            if (a == Amp{}) continue;
            out.amp[fbase + static_cast<size_t>(i - 1) * n + i - 1] += 0.5 * a;
            out.amp[fbase + static_cast<size_t>(i + 1) * n + i + 1] += 0.5 * a;
            out.amp[base + static_cast<size_t>(i) * n + i] += a;
        }
    }
    const double survival = out.norm_sq() / in_norm_sq;
    auto normalized = normalize(std::move(out));
    return {std::move(normalized.state), survival};
}

PairRun run_pair(const WalkConfig& config) {
    config.validate();
    if (config.kind != WalkKind::Pair && config.kind != WalkKind::Bec)
        throw ConfigError("run_pair: walk kind must be pair or bec");
    const Lattice lattice{config.initial.origin, config.steps};
    PairRun run;
    PairState s = make_initial_pair(config.initial, lattice);
    for (int k = 0; k < config.steps; ++k) {
        if (config.kind == WalkKind::Pair) {
            auto [next, prior] = pair_step(s, config.sign, config.normalize_each_step);
            s = std::move(next);
            run.prior_norms.push_back(prior);
        } else {
            auto [next, survival] = bec_constrained_step(s);
            s = std::move(next);
            run.prior_norms.push_back(survival);
        }
    }
    run.state = std::move(s);
    return run;
}

std::vector<std::pair<int, Coincidence>> coincidence_scan(const WalkConfig& config) {
    config.validate();
    if (config.kind != WalkKind::Pair && config.kind != WalkKind::Bec)
        throw ConfigError("coincidence_scan: walk kind must be pair or bec");
    std::vector<std::pair<int, Coincidence>> rows;
    const Lattice lattice{config.initial.origin, config.steps};
    PairState s = make_initial_pair(config.initial, lattice);
    for (int k = 1; k <= config.steps; ++k) {
        if (config.kind == WalkKind::Pair)
            s = pair_step(s, config.sign, true).state;
        else
            s = bec_constrained_step(s).state;
        rows.emplace_back(k, coincidence_probability(joint_distribution(s)));
    }
    return rows;
}

}  // namespace qwalk
