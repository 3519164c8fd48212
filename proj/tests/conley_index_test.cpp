#include <gtest/gtest.h>

#include <random>

#include "conley/conley_index.hpp"
#include "conley/perm_endo.hpp"
#include "oracles.hpp"

using namespace conley;
using M = RationalMatrix;

namespace {

std::vector<Rational> alternating(std::size_t n) {
    std::vector<Rational> v;
    for (std::size_t i = 1; i <= n; ++i) v.emplace_back(i % 2 ? 1 : -1);
    return v;
}

ConleyIndexData random_index_data(std::mt19937_64& rng, std::size_t d) {
    std::uniform_int_distribution<std::size_t> size(0, 3);
    std::vector<M> reps;
    for (std::size_t r = 0; r <= d; ++r) reps.push_back(oracle::random_matrix(rng, size(rng)));
    return {d, rng() % 2 ? Orientation::reversing : Orientation::preserving, std::move(reps)};
}

/// Alternating trace sum by naive powering.
std::vector<Rational> naive_index(const ConleyIndexData& data, std::size_t n_max) {
    std::vector<Rational> out(n_max);
    for (std::size_t r = 0; r < data.reps().size(); ++r) {
        auto t = oracle::naive_power_traces(data.rep(r), n_max);
        for (std::size_t n = 0; n < n_max; ++n) out[n] += (r % 2 ? -1 : 1) * t[n];
    }
    return out;
}

} // namespace

TEST(ConleyIndexData, Validation) {
    try {
        ConleyIndexData(3, Orientation::reversing, std::vector<M>(3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::dimension);
    }
    EXPECT_THROW(ConleyIndexData(1, Orientation::preserving, {M(), M(1, 2)}), Error);
    EXPECT_THROW(orientation_from_sign(0), Error);
}

TEST(IndexSequence, Examples) {
    IndexSequence a = index_sequence(canonical_attractor(3, Orientation::reversing), 8);
    EXPECT_EQ(a.window(8), std::vector<Rational>(8, 1));
    EXPECT_EQ(a.period(), 1u);

    IndexSequence r = index_sequence(canonical_repeller(3, Orientation::reversing), 8);
    EXPECT_EQ(r.window(8), alternating(8));
    EXPECT_EQ(r.period(), 2u);

    std::vector<M> reps(4);
    reps[1] = M{{-1}};
    IndexSequence h = index_sequence(ConleyIndexData(3, Orientation::reversing, reps), 8);
    EXPECT_EQ(h.window(8), alternating(8));
}

TEST(IndexSequence, AgreesWithNaiveTraceSum) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 100; ++t) {
        // Integer matrices keep the index integral.
        const std::size_t d = 1 + t % 4;
        std::vector<M> reps;
        std::uniform_int_distribution<int> e(-2, 2);
        for (std::size_t r = 0; r <= d; ++r) {
            const std::size_t n = (t + r) % 3;
            M m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) = e(rng);
            reps.push_back(m);
        }
        ConleyIndexData data(d, Orientation::preserving, reps);
        IndexSequence s = index_sequence(data, 12);
        const auto naive = naive_index(data, 12);
        const std::size_t shown = std::min<std::size_t>(12, s.prefix().size());
        for (std::size_t n = 1; n <= shown; ++n) EXPECT_EQ(s.value(n), naive[n - 1]);
    }
}

TEST(IndexSequence, NonIntegralIsInconsistent) {
    std::vector<M> reps(2);
    reps[0] = M{{Rational(1, 2)}};
    try {
        index_sequence(ConleyIndexData(1, Orientation::preserving, reps), 4);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::inconsistency);
    }
}

TEST(IndexSequence, SignedPermutationDataIsPeriodic) {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 100; ++t) {
        FiniteMap phi = oracle::random_permutation(rng, 1 + t % 6);
        FiniteMap psi = oracle::random_permutation(rng, 1 + (t / 6) % 6);
        std::vector<M> reps(4);
        reps[1] = reduced_perm_endo_matrix(phi);
        reps[2] = Rational(-1) * reduced_perm_endo_matrix(psi);
        // The window must cover the whole bound, or the period is capped at the window.
        const std::size_t bound = 2 * std::lcm(cycle_type(phi).lcm_of_lengths(), cycle_type(psi).lcm_of_lengths());
        IndexSequence s = index_sequence(ConleyIndexData(3, Orientation::reversing, reps), bound);
        EXPECT_EQ(bound % s.period(), 0u);
        // Trace law for h_1: never below -1.
        for (const auto& tr : trace_power_sequence(reps[1], 24)) EXPECT_GE(tr, -1);
    }
}

TEST(Canonical, Shapes) {
    ConleyIndexData a = canonical_attractor(3, Orientation::reversing);
    EXPECT_EQ(a.rep(0), (M{{1}}));
    for (std::size_t r = 1; r <= 3; ++r) EXPECT_TRUE(a.rep(r).empty());
    ConleyIndexData a1 = canonical_attractor(1, Orientation::preserving);
    EXPECT_EQ(a1.rep(0), (M{{1}}));
    EXPECT_TRUE(a1.rep(1).empty());

    EXPECT_EQ(canonical_repeller(3, Orientation::reversing).rep(3), (M{{-1}}));
    ConleyIndexData r2 = canonical_repeller(2, Orientation::preserving);
    EXPECT_EQ(r2.rep(2), (M{{1}}));
    EXPECT_EQ(index_sequence(r2, 4).window(4), std::vector<Rational>(4, 1));
    EXPECT_EQ(dold_decompose(index_sequence(canonical_repeller(3, Orientation::reversing), 4)),
              (DoldCoefficients{{1, 1}, {2, -1}}));
    EXPECT_THROW(canonical_attractor(0, Orientation::preserving), Error);
}

TEST(Duality, Examples) {
    const auto o = Orientation::reversing;
    EXPECT_EQ(szymczak_dual(canonical_repeller(3, o)), canonical_attractor(3, o));
    std::vector<M> reps(4);
    reps[1] = M{{-1}};
    EXPECT_EQ(szymczak_dual(ConleyIndexData(3, o, reps)).rep(2), (M{{1}}));
    EXPECT_TRUE(check_duality(canonical_repeller(3, o), canonical_attractor(3, o)));
    EXPECT_FALSE(check_duality(canonical_attractor(3, o), canonical_attractor(3, o)));
    try {
        check_duality(canonical_attractor(3, o), canonical_attractor(2, o));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::dimension);
    }
}

TEST(Duality, RandomData) {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 100; ++t) {
        ConleyIndexData data = random_index_data(rng, 1 + t % 4);
        ConleyIndexData dual = szymczak_dual(data);
        EXPECT_TRUE(check_duality(data, dual));
        EXPECT_TRUE(check_duality(dual, data));
        ConleyIndexData twice = szymczak_dual(dual);
        for (std::size_t r = 0; r <= data.ambient_dim(); ++r) EXPECT_TRUE(spectrum_equivalent(twice.rep(r), data.rep(r)));
    }
}
