#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "qwalk/state.hpp"

namespace qwalk {

// Probability mass over lattice positions.
struct Distribution {
    Lattice lattice;
    std::vector<double> p;

    Distribution() = default;
    explicit Distribution(const Lattice& lat) : lattice(lat), p(lat.size(), 0.0) {}

    double& at(int x) { return p[lattice.index_of(x)]; }
    double at(int x) const { return p[lattice.index_of(x)]; }
    double total() const;
};

// Probability mass over position pairs, row-major in (x1, x2).
struct JointDistribution {
    Lattice lattice;
    std::vector<double> p;

    JointDistribution() = default;
    explicit JointDistribution(const Lattice& lat)
        : lattice(lat), p(static_cast<size_t>(lat.size()) * lat.size(), 0.0) {}

    double& at(int x1, int x2) {
        return p[static_cast<size_t>(lattice.index_of(x1)) * lattice.size() + lattice.index_of(x2)];
    }
    double at(int x1, int x2) const {
        return p[static_cast<size_t>(lattice.index_of(x1)) * lattice.size() + lattice.index_of(x2)];
    }
    double total() const;
};

struct Coincidence {
    double p_same = 0.0;
    double p_diff = 0.0;
};

// |amplitude|² summed over the internal registers. Throws NotNormalizedError
// when the state norm deviates from 1 by more than 1e-9.
Distribution position_distribution(const SingleState& s);
Distribution position_distribution(const ExtendedState& s);
JointDistribution joint_distribution(const PairState& s);

// p_same = Σ_x P(x,x); p_diff = 1 - p_same.
Coincidence coincidence_probability(const JointDistribution& j);

// Sums out the other particle. particle is 1 or 2.
Distribution marginal(const JointDistribution& j, int particle);

double mean(const Distribution& d);
double variance(const Distribution& d);

// Experiment repetitions needed for n position samples when a measurement
// yields one point with probability 1/2 and two points otherwise: ceil(2n/3).
long long runs_required(long long n_points);

// Least-squares slope of log(value) against log(step) over the given rows.
double fit_log_log_slope(const std::vector<std::pair<int, double>>& rows);

// Deterministic sampling helpers. The engine is the standardized mt19937_64;
// the uniform variate is derived by fixed bit manipulation so that output is
// reproducible across platforms for a given seed.
double next_uniform(std::mt19937_64& rng);
int sample_site(const Distribution& d, std::mt19937_64& rng);
std::pair<int, int> sample_joint_sites(const JointDistribution& j, std::mt19937_64& rng);

}  // namespace qwalk
