#include <gtest/gtest.h>

#include <random>

#include "conley/linalg.hpp"
#include "conley/perm_endo.hpp"
#include "oracles.hpp"

using namespace conley;
using M = RationalMatrix;

TEST(PermEndo, Examples) {
    EXPECT_EQ(perm_endo_matrix(FiniteMap({1, 0})), (M{{0, 1}, {1, 0}}));
    EXPECT_EQ(perm_endo_matrix(FiniteMap::identity(2)), M::identity(2));
    EXPECT_EQ(perm_endo_matrix(FiniteMap({1, 0, 0})), (M{{0, 1, 1}, {1, 0, 0}, {0, 0, 0}}));
}

TEST(ReducedPermEndo, Examples) {
    EXPECT_EQ(reduced_perm_endo_matrix(FiniteMap::identity(2)), (M{{1}}));
    EXPECT_EQ(reduced_perm_endo_matrix(FiniteMap({1, 0})), (M{{-1}}));
    EXPECT_EQ(reduced_perm_endo_matrix(FiniteMap({1, 2, 0})), (M{{-1, -1}, {1, 0}}));
    EXPECT_EQ(reduced_perm_endo_matrix(FiniteMap::identity(1)), M());
    try {
        reduced_perm_endo_matrix(FiniteMap());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::domain);
    }
}

TEST(ReducedPermEndo, IsTheRestrictionToTheAugmentationKernel) {
    // Columns e_j - e_0 of the full matrix, mapped by u, expressed back in that basis.
    std::mt19937_64 rng(9);
    for (int t = 0; t < 100; ++t) {
        FiniteMap phi = oracle::random_map(rng, 1 + t % 7);
        const std::size_t n = phi.size();
        M u = perm_endo_matrix(phi), v = reduced_perm_endo_matrix(phi);
        for (std::size_t j = 1; j < n; ++j) {
            RationalVector f(n);
            f[j] = 1;
            f[0] = -1;
            RationalVector image = u * f;
            RationalVector rebuilt(n);
            for (std::size_t i = 1; i < n; ++i) {
                rebuilt[i] += v(i - 1, j - 1);
                rebuilt[0] -= v(i - 1, j - 1);
            }
            EXPECT_EQ(image, rebuilt);
        }
    }
}

TEST(ReducedPermEndo, TraceLaw) {
    std::mt19937_64 rng(10);
    for (int t = 0; t < 200; ++t) {
        FiniteMap phi = oracle::random_map(rng, 1 + t % 8);
        auto traces = trace_power_sequence(reduced_perm_endo_matrix(phi), 24);
        for (std::size_t n = 1; n <= 24; ++n) EXPECT_EQ(traces[n - 1], oracle::fix_count(phi, n) - 1);
    }
}

TEST(PermEndo, LerayReductionIsTheInducedPermutation) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        FiniteMap phi = oracle::random_map(rng, t % 7);
        EXPECT_TRUE(conjugate(leray_reduction(perm_endo_matrix(phi)),
                              perm_endo_matrix(induced_permutation(phi).permutation)));
    }
}

TEST(PermEndo, BijectionsGiveDoublyStochasticMatrices) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 50; ++t) {
        M u = perm_endo_matrix(oracle::random_permutation(rng, t % 8));
        for (std::size_t i = 0; i < u.rows(); ++i) {
            Rational row = 0, col = 0;
            for (std::size_t j = 0; j < u.cols(); ++j) {
                row += u(i, j);
                col += u(j, i);
            }
            EXPECT_EQ(row, 1);
            EXPECT_EQ(col, 1);
        }
    }
}
