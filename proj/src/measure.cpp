#include "qwalk/measure.hpp"

#include <cmath>
#include <numeric>

namespace qwalk {

namespace {

void require_unit_norm(double norm_sq, const char* who) {
    if (std::abs(std::sqrt(norm_sq) - 1.0) > 1e-9)
        throw NotNormalizedError(std::string(who) + ": state is not normalized");
}

}  // namespace

double Distribution::total() const { return std::accumulate(p.begin(), p.end(), 0.0); }
double JointDistribution::total() const { return std::accumulate(p.begin(), p.end(), 0.0); }

Distribution position_distribution(const SingleState& s) {
    require_unit_norm(s.norm_sq(), "position_distribution");
    Distribution d(s.lattice);
    const int n = s.lattice.size();
    for (int c = 0; c < 2; ++c)
        for (int i = 0; i < n; ++i) d.p[i] += std::norm(s.amp[static_cast<size_t>(c) * n + i]);
    return d;
}

Distribution position_distribution(const ExtendedState& s) {
    require_unit_norm(s.norm_sq(), "position_distribution");
    Distribution d(s.lattice);
    const int n = s.lattice.size();
    for (int b = 0; b < 4; ++b)
        for (int i = 0; i < n; ++i) d.p[i] += std::norm(s.amp[static_cast<size_t>(b) * n + i]);
    return d;
}

JointDistribution joint_distribution(const PairState& s) {
    require_unit_norm(s.norm_sq(), "joint_distribution");
    JointDistribution j(s.lattice);
    const size_t n = s.lattice.size();
    const size_t nn = n * n;
    for (int b = 0; b < 4; ++b)
        for (size_t k = 0; k < nn; ++k) j.p[k] += std::norm(s.amp[b * nn + k]);
    return j;
}

Coincidence coincidence_probability(const JointDistribution& j) {
    const int n = j.lattice.size();
    double same = 0.0;
    for (int i = 0; i < n; ++i) same += j.p[static_cast<size_t>(i) * n + i];
    return {same, 1.0 - same};
}

Distribution marginal(const JointDistribution& j, int particle) {
    if (particle != 1 && particle != 2) throw ConfigError("marginal: particle must be 1 or 2");
    Distribution d(j.lattice);
    const int n = j.lattice.size();
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2) {
            const double v = j.p[static_cast<size_t>(i1) * n + i2];
            d.p[particle == 1 ? i1 : i2] += v;
        }
    return d;
}

double mean(const Distribution& d) {
    double m = 0.0;
    for (int i = 0; i < d.lattice.size(); ++i) m += d.p[i] * d.lattice.site_at(i);
    return m;
}

double variance(const Distribution& d) {
    const double m = mean(d);
    double m2 = 0.0;
    for (int i = 0; i < d.lattice.size(); ++i) {
        const double x = d.lattice.site_at(i);
        m2 += d.p[i] * x * x;
    }
    return m2 - m * m;
}

long long runs_required(long long n_points) {
    if (n_points < 0) throw ConfigError("runs_required: n_points must be non-negative");
    return (2 * n_points + 2) / 3;
}

double fit_log_log_slope(const std::vector<std::pair<int, double>>& rows) {
    if (rows.size() < 2) throw ConfigError("fit_log_log_slope: need at least two rows");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& [n, v] : rows) {
        if (n < 1 || v <= 0.0)
            throw ConfigError("fit_log_log_slope: rows must have positive step and value");
        const double lx = std::log(static_cast<double>(n));
        const double ly = std::log(v);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double k = static_cast<double>(rows.size());
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

double next_uniform(std::mt19937_64& rng) {
    // 53 random bits mapped to [0, 1); avoids the implementation-defined
    // std::uniform_real_distribution.
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int sample_site(const Distribution& d, std::mt19937_64& rng) {
    const double u = next_uniform(rng);
    double cum = 0.0;
    const int n = d.lattice.size();
    for (int i = 0; i < n; ++i) {
        cum += d.p[i];
        if (u < cum) return d.lattice.site_at(i);
    }
    return d.lattice.max_site();
}

std::pair<int, int> sample_joint_sites(const JointDistribution& j, std::mt19937_64& rng) {
    const double u = next_uniform(rng);
    double cum = 0.0;
    const int n = j.lattice.size();
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2) {
            cum += j.p[static_cast<size_t>(i1) * n + i2];
            if (u < cum) return {j.lattice.site_at(i1), j.lattice.site_at(i2)};
        }
    return {j.lattice.max_site(), j.lattice.max_site()};
}

}  // namespace qwalk
