#include "qwalk/oracle.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace qwalk {
namespace oracle {

namespace {

constexpr int kMaxDenseDim = 4096;
constexpr int kMaxPathSteps = 12;

int wrap(int i, int n) { return (i % n + n) % n; }

Eigen::MatrixXcd zero_matrix(int dim) { return Eigen::MatrixXcd::Zero(dim, dim); }

Eigen::MatrixXcd hadamard_coin_matrix(int n) {
    Eigen::MatrixXcd m = zero_matrix(2 * n);
    for (int c = 0; c < 2; ++c)
        for (int cp = 0; cp < 2; ++cp) {
            const double entry = kInvSqrt2 * ((c == 1 && cp == 1) ? -1.0 : 1.0);
            for (int i = 0; i < n; ++i) m(cp * n + i, c * n + i) = entry;
        }
    return m;
}

Eigen::MatrixXcd conditional_shift_matrix(int n) {
    Eigen::MatrixXcd m = zero_matrix(2 * n);
    for (int i = 0; i < n; ++i) {
        m(0 * n + wrap(i - 1, n), 0 * n + i) = 1.0;
        m(1 * n + wrap(i + 1, n), 1 * n + i) = 1.0;
    }
    return m;
}

Eigen::MatrixXcd coinless_reduced_matrix(int n, double sgn) {
    Eigen::MatrixXcd m = zero_matrix(2 * n);
    for (int i = 0; i < n; ++i) {
        m(0 * n + wrap(i - 1, n), 0 * n + i) += kInvSqrt2;
        m(0 * n + wrap(i + 1, n), 0 * n + i) += sgn * kInvSqrt2;
        m(1 * n + wrap(i + 1, n), 1 * n + i) += kInvSqrt2;
        m(1 * n + wrap(i - 1, n), 1 * n + i) += sgn * kInvSqrt2;
    }
    return m;
}

Eigen::MatrixXcd extended_step_matrix(int n) {
    Eigen::MatrixXcd m = zero_matrix(4 * n);
    for (int c = 0; c < 2; ++c)
        for (int a = 0; a < 2; ++a) {
            const int d = (c == a) ? -1 : +1;
            const int block = (c * 2 + a) * n;
            for (int i = 0; i < n; ++i) m(block + wrap(i + d, n), block + i) = 1.0;
        }
    return m;
}

Eigen::MatrixXcd bec_local_matrix(int n) {
    Eigen::MatrixXcd m = zero_matrix(2 * n);
    for (int c = 0; c < 2; ++c)
        for (int i = 0; i < n; ++i) {
            m((1 - c) * n + wrap(i - 1, n), c * n + i) += 0.5;
            m((1 - c) * n + wrap(i + 1, n), c * n + i) += 0.5;
            m(c * n + i, c * n + i) += 1.0;
        }
    return m;
}

// Tensor product of two single-particle operators, laid out in the pair
// index ((c1*2 + c2)*n + i1)*n + i2.
Eigen::MatrixXcd pair_product(const Eigen::MatrixXcd& m1, const Eigen::MatrixXcd& m2, int n) {
    const int d = 2 * n;
    auto pair_index = [n](int single1, int single2) {
        const int c1 = single1 / n, i1 = single1 % n;
        const int c2 = single2 / n, i2 = single2 % n;
        return ((c1 * 2 + c2) * n + i1) * n + i2;
    };
    Eigen::MatrixXcd m = zero_matrix(4 * n * n);
    for (int r1 = 0; r1 < d; ++r1)
        for (int c1 = 0; c1 < d; ++c1) {
            const Amp e1 = m1(r1, c1);
            if (e1 == Amp{}) continue;
            for (int r2 = 0; r2 < d; ++r2)
                for (int c2 = 0; c2 < d; ++c2) {
                    const Amp e2 = m2(r2, c2);
                    if (e2 == Amp{}) continue;
                    m(pair_index(r1, r2), pair_index(c1, c2)) = e1 * e2;
                }
        }
    return m;
}

Eigen::MatrixXcd bec_step_matrix(int n) {
    auto pair_index = [n](int c1, int c2, int i1, int i2) {
        return ((c1 * 2 + c2) * n + i1) * n + i2;
    };
    Eigen::MatrixXcd m = zero_matrix(4 * n * n);
    for (int c1 = 0; c1 < 2; ++c1)
        for (int c2 = 0; c2 < 2; ++c2)
            for (int i = 0; i < n; ++i) {
                const int col = pair_index(c1, c2, i, i);
                const int il = wrap(i - 1, n), ir = wrap(i + 1, n);
                m(pair_index(1 - c1, 1 - c2, il, il), col) += 0.5;
                m(pair_index(1 - c1, 1 - c2, ir, ir), col) += 0.5;
                m(col, col) += 1.0;
            }
    return m;
}

}  // namespace

int dense_dimension(DenseKind kind, const Lattice& lattice) {
    const int n = lattice.size();
    switch (kind) {
        case DenseKind::HadamardCoin:
        case DenseKind::ConditionalShift:
        case DenseKind::HadamardStep:
        case DenseKind::CoinlessReduced:
        case DenseKind::BecLocal:
            return 2 * n;
        case DenseKind::ExtendedStep:
            return 4 * n;
        case DenseKind::PairStep:
        case DenseKind::BecStep:
            return 4 * n * n;
    }
    return 0;
}

Eigen::MatrixXcd dense_operator(DenseKind kind, SignVariant sign, const Lattice& lattice) {
    const int dim = dense_dimension(kind, lattice);
    if (dim > kMaxDenseDim)
        throw DimensionTooLargeError("dense_operator: flattened dimension " + std::to_string(dim) +
                                     " exceeds " + std::to_string(kMaxDenseDim));
    const int n = lattice.size();
    const double sgn = sign == SignVariant::Plus ? 1.0 : -1.0;
    switch (kind) {
        case DenseKind::HadamardCoin:
            return hadamard_coin_matrix(n);
        case DenseKind::ConditionalShift:
            return conditional_shift_matrix(n);
        case DenseKind::HadamardStep:
            return conditional_shift_matrix(n) * hadamard_coin_matrix(n);
        case DenseKind::CoinlessReduced:
            return coinless_reduced_matrix(n, sgn);
        case DenseKind::ExtendedStep:
            return extended_step_matrix(n);
        case DenseKind::BecLocal:
            return bec_local_matrix(n);
        case DenseKind::PairStep: {
            const Eigen::MatrixXcd single = coinless_reduced_matrix(n, sgn);
            return pair_product(single, single, n);
        }
        case DenseKind::BecStep:
            return bec_step_matrix(n);
    }
    throw ConfigError("dense_operator: unknown kind");
}

Eigen::VectorXcd flatten(const SingleState& s) {
    return Eigen::Map<const Eigen::VectorXcd>(s.amp.data(), static_cast<Eigen::Index>(s.amp.size()));
}

Eigen::VectorXcd flatten(const ExtendedState& s) {
    return Eigen::Map<const Eigen::VectorXcd>(s.amp.data(), static_cast<Eigen::Index>(s.amp.size()));
}

Eigen::VectorXcd flatten(const PairState& s) {
    return Eigen::Map<const Eigen::VectorXcd>(s.amp.data(), static_cast<Eigen::Index>(s.amp.size()));
}

SingleState unflatten_single(const Eigen::VectorXcd& v, const Lattice& lattice) {
    SingleState s(lattice);
    if (static_cast<size_t>(v.size()) != s.amp.size())
        throw ConfigError("unflatten_single: size mismatch");
    for (size_t k = 0; k < s.amp.size(); ++k) s.amp[k] = v(static_cast<Eigen::Index>(k));
    return s;
}

ExtendedState unflatten_extended(const Eigen::VectorXcd& v, const Lattice& lattice) {
    ExtendedState s(lattice);
    if (static_cast<size_t>(v.size()) != s.amp.size())
        throw ConfigError("unflatten_extended: size mismatch");
    for (size_t k = 0; k < s.amp.size(); ++k) s.amp[k] = v(static_cast<Eigen::Index>(k));
    return s;
}

PairState unflatten_pair(const Eigen::VectorXcd& v, const Lattice& lattice) {
    PairState s(lattice);
    if (static_cast<size_t>(v.size()) != s.amp.size())
        throw ConfigError("unflatten_pair: size mismatch");
    for (size_t k = 0; k < s.amp.size(); ++k) s.amp[k] = v(static_cast<Eigen::Index>(k));
    return s;
}

SingleState enumerate_paths(PathKind kind, SignVariant sign, int steps, CoinSpec initial) {
    if (steps < 0) throw ConfigError("enumerate_paths: steps must be non-negative");
    if (steps > kMaxPathSteps)
        throw TooManyStepsError("enumerate_paths: " + std::to_string(steps) + " steps exceeds " +
                                std::to_string(kMaxPathSteps));
    const Lattice lattice{0, steps};
    const double sgn = sign == SignVariant::Plus ? 1.0 : -1.0;

    std::array<Amp, 2> coin_amp{};
    switch (initial) {
        case CoinSpec::Zero: coin_amp = {Amp{1.0, 0.0}, Amp{0.0, 0.0}}; break;
        case CoinSpec::One: coin_amp = {Amp{0.0, 0.0}, Amp{1.0, 0.0}}; break;
        case CoinSpec::Plus: coin_amp = {Amp{kInvSqrt2, 0.0}, Amp{kInvSqrt2, 0.0}}; break;
        case CoinSpec::PlusI: coin_amp = {Amp{kInvSqrt2, 0.0}, Amp{0.0, kInvSqrt2}}; break;
    }

    SingleState out(lattice);
    if (steps == 0) {
        out.at(0, 0) = coin_amp[0];
        out.at(1, 0) = coin_amp[1];
        return out;
    }

    const double scale = std::pow(2.0, -0.5 * steps);
    const std::uint64_t n_paths = std::uint64_t{1} << steps;

    if (kind == PathKind::CoinlessReduced) {
        // Per coin sector: each step chooses left or right; the disfavoured
        // direction carries the sign (right for coin 0, left for coin 1).
        for (int c = 0; c < 2; ++c) {
            if (coin_amp[c] == Amp{}) continue;
            std::vector<std::int64_t> counts(lattice.size(), 0);
            for (std::uint64_t mask = 0; mask < n_paths; ++mask) {
                int pos = 0;
                int signed_moves = 0;
                for (int k = 0; k < steps; ++k) {
                    const bool right = (mask >> k) & 1;
                    pos += right ? 1 : -1;
                    const bool disfavoured = (c == 0) ? right : !right;
                    if (disfavoured) ++signed_moves;
                }
                const std::int64_t contribution =
                    (sgn < 0.0 && (signed_moves & 1)) ? -1 : 1;
                counts[lattice.index_of(pos)] += contribution;
            }
            for (int i = 0; i < lattice.size(); ++i)
                if (counts[i] != 0)
                    out.amp[static_cast<size_t>(c) * lattice.size() + i] =
                        coin_amp[c] * (static_cast<double>(counts[i]) * scale);
        }
        return out;
    }

    // HadamardStep: a path is the coin value chosen at each step; the
    // Hadamard entry contributes (-1)^(c_prev * c_next) and the shift moves
    // the walker by the new coin value.
    std::array<std::vector<std::int64_t>, 2> counts{
        std::vector<std::int64_t>(lattice.size(), 0), std::vector<std::int64_t>(lattice.size(), 0)};
    for (int c0 = 0; c0 < 2; ++c0) {
        if (coin_amp[c0] == Amp{}) continue;
        std::vector<std::int64_t> sector(2 * static_cast<size_t>(lattice.size()), 0);
        for (std::uint64_t mask = 0; mask < n_paths; ++mask) {
            int pos = 0;
            int prev = c0;
            int flips = 0;
            int last = 0;
            for (int k = 0; k < steps; ++k) {
                const int c = static_cast<int>((mask >> k) & 1);
                if (prev == 1 && c == 1) ++flips;
                pos += c == 0 ? -1 : +1;
                prev = c;
                last = c;
            }
            sector[static_cast<size_t>(last) * lattice.size() + lattice.index_of(pos)] +=
                (flips & 1) ? -1 : 1;
        }
        for (int c = 0; c < 2; ++c)
            for (int i = 0; i < lattice.size(); ++i) {
                const std::int64_t count = sector[static_cast<size_t>(c) * lattice.size() + i];
                if (count != 0)
                    out.amp[static_cast<size_t>(c) * lattice.size() + i] +=
                        coin_amp[c0] * (static_cast<double>(count) * scale);
            }
    }
    return out;
}

}  // namespace oracle
}  // namespace qwalk
