#include <doctest.h>

#include <cmath>

#include "qwalk/oracle.hpp"
#include "qwalk/single.hpp"
#include "test_helpers.hpp"

using namespace qwalk;
using qwalk::testing::amp_close;
using qwalk::testing::states_close;

TEST_CASE("lattice indexing") {
    const Lattice lat{3, 2};
    CHECK(lat.size() == 5);
    CHECK(lat.min_site() == 1);
    CHECK(lat.max_site() == 5);
    CHECK(lat.index_of(1) == 0);
    CHECK(lat.site_at(4) == 5);
    CHECK(lat.contains(5));
    CHECK(!lat.contains(6));
}

TEST_CASE("normalize keeps an already-normalized state and reports prior norm 1") {
    InitialSpec spec;
    spec.state = CoinSpec::Plus;
    const SingleState s = make_initial_single(spec, Lattice{0, 2});
    const auto [normalized, prior] = normalize(s);
    CHECK(prior == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(states_close(normalized, s, 1e-15));
}

TEST_CASE("normalize scales amplitudes (1,1,2) to (1,1,2)/sqrt(6)") {
    SingleState s(Lattice{0, 1});
    s.at(0, -1) = 1.0;
    s.at(0, 0) = 1.0;
    s.at(0, 1) = 2.0;
    const auto [normalized, prior] = normalize(std::move(s));
    const double r6 = std::sqrt(6.0);
    CHECK(prior == doctest::Approx(r6).epsilon(1e-12));
    CHECK(amp_close(normalized.at(0, -1), Amp{1.0 / r6, 0.0}, 1e-15));
    CHECK(amp_close(normalized.at(0, 0), Amp{1.0 / r6, 0.0}, 1e-15));
    CHECK(amp_close(normalized.at(0, 1), Amp{2.0 / r6, 0.0}, 1e-15));
}

TEST_CASE("two reduced-shift steps accumulate norm^2 = 3/2") {
    // Cross-checked against path enumeration: the unnormalized two-step image
    // of a point state has squared norm 3/2.
    const SingleState enumerated =
        oracle::enumerate_paths(oracle::PathKind::CoinlessReduced, SignVariant::Plus, 2, CoinSpec::Plus);
    CHECK(enumerated.norm_sq() == doctest::Approx(1.5).epsilon(1e-12));

    WalkConfig config;
    config.kind = WalkKind::CoinlessReduced;
    config.steps = 2;
    config.initial.state = CoinSpec::Plus;
    const SingleRun run = run_single(config);
    REQUIRE(run.prior_norms.size() == 2);
    CHECK(run.prior_norms[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(run.prior_norms[1] * run.prior_norms[1] == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("normalize is idempotent to 1e-15 per amplitude") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        SingleState s = qwalk::testing::random_single(Lattice{0, 6}, rng);
        for (Amp& a : s.amp) a *= 3.7;  // denormalize
        const SingleState once = normalize(s).state;
        const SingleState twice = normalize(once).state;
        CHECK(states_close(once, twice, 1e-15));
    }
}

TEST_CASE("normalize rejects a fully projected-out state") {
    SingleState zero(Lattice{0, 3});
    CHECK_THROWS_AS(normalize(std::move(zero)), ZeroNormError);
}

TEST_CASE("initial states match their definitions") {
    const Lattice lat{0, 2};

    SUBCASE("single coin basis states") {
        InitialSpec spec;
        spec.state = CoinSpec::Zero;
        const SingleState zero = make_initial_single(spec, lat);
        CHECK(amp_close(zero.at(0, 0), Amp{1.0, 0.0}, 1e-15));
        CHECK(zero.at(1, 0) == Amp{});

        spec.state = CoinSpec::PlusI;
        const SingleState plus_i = make_initial_single(spec, lat);
        CHECK(amp_close(plus_i.at(0, 0), Amp{kInvSqrt2, 0.0}, 1e-15));
        CHECK(amp_close(plus_i.at(1, 0), Amp{0.0, kInvSqrt2}, 1e-15));
    }

    SUBCASE("entangled pair with complex amplitude") {
        InitialSpec spec;
        spec.state = PairSpec::PsiI;
        const PairState s = make_initial_pair(spec, lat);
        CHECK(amp_close(s.at(0, 1, 0, 0), Amp{kInvSqrt2, 0.0}, 1e-15));
        CHECK(amp_close(s.at(1, 0, 0, 0), Amp{0.0, kInvSqrt2}, 1e-15));
        CHECK(s.at(0, 0, 0, 0) == Amp{});
        CHECK(s.at(1, 1, 0, 0) == Amp{});
    }

    SUBCASE("phi-plus Bell state") {
        InitialSpec spec;
        spec.state = PairSpec::PhiPlus;
        const PairState s = make_initial_pair(spec, lat);
        CHECK(amp_close(s.at(0, 0, 0, 0), Amp{kInvSqrt2, 0.0}, 1e-15));
        CHECK(amp_close(s.at(1, 1, 0, 0), Amp{kInvSqrt2, 0.0}, 1e-15));
    }

    SUBCASE("every selectable initial state is normalized") {
        for (const CoinSpec c : {CoinSpec::Zero, CoinSpec::One, CoinSpec::Plus, CoinSpec::PlusI}) {
            InitialSpec spec;
            spec.state = c;
            CHECK(make_initial_single(spec, lat).norm() == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(make_initial_extended(spec, {Amp{kInvSqrt2, 0.0}, Amp{0.0, kInvSqrt2}}, lat).norm() ==
                  doctest::Approx(1.0).epsilon(1e-12));
        }
        for (const PairSpec p : {PairSpec::PsiPlus, PairSpec::PsiMinus, PairSpec::PhiPlus,
                                 PairSpec::PhiMinus, PairSpec::PsiI}) {
            InitialSpec spec;
            spec.state = p;
            CHECK(make_initial_pair(spec, lat).norm() == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("walk config validation") {
    WalkConfig config;
    config.kind = WalkKind::Pair;
    config.steps = 3;
    config.initial.state = CoinSpec::Plus;
    CHECK_THROWS_AS(config.validate(), ConfigError);

    config.initial.state = PairSpec::PsiI;
    CHECK_NOTHROW(config.validate());

    config.steps = -1;
    CHECK_THROWS_AS(config.validate(), ConfigError);

    config.steps = 3;
    config.ancilla_amplitudes = {Amp{1.0, 0.0}, Amp{1.0, 0.0}};
    CHECK_THROWS_AS(config.validate(), ConfigError);

    WalkConfig single;
    single.kind = WalkKind::Hadamard;
    single.initial.state = PairSpec::PsiI;
    CHECK_THROWS_AS(single.validate(), ConfigError);
}

TEST_CASE("string forms round-trip") {
    CHECK(parse_walk_kind("coinless") == WalkKind::CoinlessReduced);
    CHECK(parse_walk_kind(to_string(WalkKind::Bec)) == WalkKind::Bec);
    CHECK(parse_sign("minus") == SignVariant::Minus);
    CHECK(to_string(parse_initial("psi-i")) == "psi-i");
    CHECK(to_string(parse_initial("plus-i")) == "plus-i");
    CHECK_THROWS_AS(parse_initial("garbage"), ConfigError);
    CHECK_THROWS_AS(parse_walk_kind("garbage"), ConfigError);
    CHECK_THROWS_AS(parse_sign("garbage"), ConfigError);
}
