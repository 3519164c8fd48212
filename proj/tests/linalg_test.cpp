#include <gtest/gtest.h>

#include <random>

#include "conley/linalg.hpp"
#include "oracles.hpp"

using namespace conley;

namespace {

using M = RationalMatrix;

std::vector<Rational> seq(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

bool spans_equal(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b, std::size_t n) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    std::vector<RationalVector> both = a;
    both.insert(both.end(), b.begin(), b.end());
    return rank(M::from_columns(n, both)) == a.size();
}

} // namespace

TEST(Matrix, ShapeErrors) {
    EXPECT_THROW(M(2, 2, {1, 2, 3}), Error);
    EXPECT_THROW(M(2, 3).trace(), Error);
    EXPECT_THROW(M(2, 3) * M(2, 3), Error);
    try {
        trace_power_sequence(M(2, 3), 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::dimension);
    }
}

TEST(Matrix, PowerMatchesRepeatedProduct) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        M a = oracle::random_matrix(rng, 4);
        M p = M::identity(4);
        for (std::size_t k = 0; k <= 6; ++k) {
            EXPECT_EQ(a.power(k), p);
            p = p * a;
        }
    }
}

TEST(TracePowers, SmallCases) {
    EXPECT_EQ(trace_power_sequence(M{{0, 1}, {1, 0}}, 4), seq({0, 2, 0, 2}));
    EXPECT_EQ(trace_power_sequence(M(), 3), seq({0, 0, 0}));
    EXPECT_EQ(trace_power_sequence(M{{2, 0}, {0, 3}}, 3), seq({5, 13, 35}));
}

TEST(TracePowers, NewtonRouteAgreesWithPowering) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 60; ++t) {
        M a = oracle::random_matrix(rng, 1 + t % 6);
        const auto direct = oracle::naive_power_traces(a, 12);
        EXPECT_EQ(trace_power_sequence(a, 12), direct);
        EXPECT_EQ(trace_power_sequence_newton(a, 12), direct);
    }
}

TEST(CharPoly, Examples) {
    EXPECT_EQ(char_poly(M{{2, 0}, {0, 3}}), (Polynomial{6, -5, 1}));
    EXPECT_EQ(char_poly(M()), Polynomial{1});
    EXPECT_EQ(char_poly(M{{0, 1}, {1, 0}}), (Polynomial{-1, 0, 1}));
}

TEST(CharPoly, AgreesWithFaddeevLeVerrier) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 80; ++t) {
        M a = oracle::random_matrix(rng, 1 + t % 6);
        EXPECT_EQ(char_poly(a), Polynomial(oracle::faddeev_char_poly(a))) << a.to_string();
    }
}

TEST(Determinant, AgreesWithLeibniz) {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 60; ++t) {
        M a = oracle::random_matrix(rng, 1 + t % 5);
        EXPECT_EQ(determinant(a), oracle::leibniz_det(a));
    }
    EXPECT_EQ(determinant(M()), 1);
}

TEST(Inverse, RoundTripAndSingular) {
    std::mt19937_64 rng(15);
    for (int t = 0; t < 30; ++t) {
        M p = oracle::random_invertible(rng, 1 + t % 5);
        EXPECT_EQ(p * inverse(p), M::identity(p.rows()));
    }
    try {
        inverse(M{{1, 2}, {2, 4}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::domain);
    }
}

TEST(GeneralizedSubspaces, Examples) {
    auto nil = generalized_subspaces(M{{0, 1}, {0, 0}});
    EXPECT_EQ(nil.kernel.size(), 2u);
    EXPECT_TRUE(nil.image.empty());

    auto id = generalized_subspaces(M::identity(3));
    EXPECT_TRUE(id.kernel.empty());
    EXPECT_EQ(id.image.size(), 3u);

    auto g = generalized_subspaces(M{{1, 1}, {0, 0}});
    ASSERT_EQ(g.kernel.size(), 1u);
    ASSERT_EQ(g.image.size(), 1u);
    EXPECT_TRUE(spans_equal(g.kernel, {{1, -1}}, 2));
    EXPECT_TRUE(spans_equal(g.image, {{1, 0}}, 2));
}

TEST(GeneralizedSubspaces, FittingDecomposition) {
    std::mt19937_64 rng(16);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + t % 6;
        // Mix in a nilpotent part so both subspaces are usually nontrivial.
        M a = oracle::random_matrix(rng, n);
        if (t % 2) {
            for (std::size_t i = 0; i < n; ++i) a(i, n - 1) = 0;
        }
        auto g = generalized_subspaces(a);
        EXPECT_EQ(g.kernel.size() + g.image.size(), n);
        // M(gim) = gim, and M is injective there.
        if (!g.image.empty()) {
            std::vector<RationalVector> images;
            for (const auto& v : g.image) images.push_back(a * v);
            EXPECT_TRUE(spans_equal(images, g.image, n));
        }
        // M restricted to gker is nilpotent of order <= n.
        for (const auto& v : g.kernel) {
            RationalVector w = v;
            for (std::size_t k = 0; k < n; ++k) w = a * w;
            for (const auto& x : w) EXPECT_EQ(x, 0);
        }
    }
}

TEST(Leray, Examples) {
    EXPECT_EQ(leray_reduction(M{{0, 1}, {0, 0}}), M());
    EXPECT_EQ(leray_reduction(M{{1, 1}, {0, 0}}), (M{{1}}));
    EXPECT_EQ(leray_reduction(M::identity(4)), M::identity(4));
}

TEST(Leray, PreservesTracesAndCommutesWithPowers) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 60; ++t) {
        M a = oracle::random_matrix(rng, 1 + t % 5);
        M r = leray_reduction(a);
        EXPECT_NE(determinant(r), 0);
        EXPECT_EQ(trace_power_sequence(a, 12), trace_power_sequence(r, 12));
        for (std::size_t k = 1; k <= 4; ++k) EXPECT_TRUE(conjugate(leray_reduction(a.power(k)), r.power(k)));
    }
}

TEST(SpectrumEquivalence, Examples) {
    EXPECT_TRUE(spectrum_equivalent(M{{1, 1}, {0, 1}}, M::identity(2)));
    EXPECT_TRUE(spectrum_equivalent(M{{0, 1}, {0, 0}}, M()));
    EXPECT_FALSE(spectrum_equivalent(M{{2}}, M{{3}}));
}

TEST(SpectrumEquivalence, NewtonRootsReproduceTraces) {
    // The stripped characteristic polynomial alone determines the power traces.
    std::mt19937_64 rng(18);
    for (int t = 0; t < 40; ++t) {
        M a = oracle::random_matrix(rng, 1 + t % 5);
        Polynomial p = char_poly(a).strip_x();
        // Companion matrix of p carries exactly the nonzero spectrum.
        const std::size_t d = static_cast<std::size_t>(p.degree());
        M c(d, d);
        for (std::size_t i = 0; i + 1 < d; ++i) c(i + 1, i) = 1;
        for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = -p.coefficient(i);
        EXPECT_EQ(oracle::naive_power_traces(c, a.rows()), oracle::naive_power_traces(a, a.rows()));
    }
}

TEST(SpectrumEquivalence, ShiftEquivalenceImpliesIt) {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 60; ++t) {
        M a = oracle::random_matrix(rng, 1 + t % 4);
        M b = t % 3 == 0 ? leray_reduction(a) : oracle::random_matrix(rng, 1 + t % 3);
        if (shift_equivalent_matrices(a, b)) {
            EXPECT_TRUE(spectrum_equivalent(a, b));
        }
        EXPECT_TRUE(spectrum_equivalent(a, a));
        EXPECT_EQ(spectrum_equivalent(a, b), spectrum_equivalent(b, a));
    }
}

TEST(InvariantFactors, Examples) {
    const Polynomial xm1 = Polynomial::linear_root(1);
    EXPECT_EQ(invariant_factors(M::identity(2)), (std::vector<Polynomial>{xm1, xm1}));
    EXPECT_EQ(invariant_factors(M{{0, 1}, {0, 0}}), (std::vector<Polynomial>{Polynomial{0, 0, 1}}));
    EXPECT_EQ(invariant_factors(M{{2, 0}, {0, 3}}), (std::vector<Polynomial>{Polynomial{6, -5, 1}}));
}

TEST(InvariantFactors, ProductIsCharPolyAndChainDivides) {
    std::mt19937_64 rng(20);
    for (int t = 0; t < 60; ++t) {
        M a = oracle::random_matrix(rng, 1 + t % 5);
        if (t % 4 == 0) a = Rational(t % 3 + 1) * M::identity(a.rows()); // repeated factors
        auto f = invariant_factors(a);
        Polynomial prod{1};
        for (std::size_t i = 0; i < f.size(); ++i) {
            prod = prod * f[i];
            if (i + 1 < f.size()) {
                EXPECT_TRUE(divides(f[i], f[i + 1]));
            }
        }
        EXPECT_EQ(prod, char_poly(a));
    }
}

TEST(Conjugacy, Examples) {
    EXPECT_FALSE(conjugate(M{{1, 1}, {0, 1}}, M::identity(2)));
    EXPECT_TRUE(conjugate(M{{0, 1}, {1, 0}}, M{{1, 0}, {0, -1}}));
    EXPECT_TRUE(conjugate(M{{1, 2}, {3, 4}}, M{{1, 2}, {3, 4}}));
}

TEST(Conjugacy, RandomSimilarities) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + t % 5;
        M a = oracle::random_matrix(rng, n);
        M p = oracle::random_invertible(rng, n);
        EXPECT_TRUE(conjugate(a, p * a * inverse(p)));
    }
}

TEST(ShiftEquivalence, Examples) {
    EXPECT_TRUE(shift_equivalent_matrices(M{{0, 1}, {0, 0}}, M()));
    EXPECT_TRUE(shift_equivalent_matrices(M{{1, 1}, {0, 0}}, M{{1}}));
    EXPECT_FALSE(shift_equivalent_matrices(M{{1}}, M{{2}}));
}

TEST(ShiftEquivalence, ElementaryShiftEquivalence) {
    // A = RS and B = SR are shift equivalent for rectangular R, S.
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 1 + t % 4, m = 1 + (t / 4) % 3;
        M r(n, m), s(m, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                r(i, j) = d(rng);
                s(j, i) = d(rng);
            }
        EXPECT_TRUE(shift_equivalent_matrices(r * s, s * r));
    }
}

TEST(Linalg, NonSquareRejected) {
    M bad(2, 3);
    for (auto f : {+[](const M& x) { return leray_reduction(x).rows(); },
                   +[](const M& x) { return static_cast<std::size_t>(char_poly(x).degree()); },
                   +[](const M& x) { return invariant_factors(x).size(); },
                   +[](const M& x) { return generalized_subspaces(x).image.size(); }}) {
        try {
            f(bad);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::dimension);
        }
    }
    EXPECT_THROW(conjugate(bad, M{{1}}), Error);
    EXPECT_THROW(spectrum_equivalent(M{{1}}, bad), Error);
    EXPECT_THROW(shift_equivalent_matrices(bad, bad), Error);
}
