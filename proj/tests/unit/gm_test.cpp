#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "instances.hpp"
#include "pcrank/gm.hpp"
#include "pcrank/graph.hpp"
#include "pcrank/linalg.hpp"
#include "pcrank/metrics.hpp"

namespace pcrank {
namespace {

void expect_weights(const PriorityVector& w, const std::vector<double>& expected, double tol) {
    ASSERT_EQ(w.size(), expected.size());
    for (std::size_t i = 0; i < w.size(); ++i) EXPECT_NEAR(w[i], expected[i], tol) << "component " << i;
}

TEST(BuildSystem, WorkedExample) {
    const GmSystem sys = build_system(testing::worked_example());
    EXPECT_EQ(sys.m, (DenseMatrix{{2, 1, 1, 0}, {1, 2, 0, 1}, {1, 0, 3, 0}, {0, 1, 0, 3}}));
    EXPECT_EQ(sys.missing_counts, (std::vector<std::size_t>{2, 2, 1, 1}));
    const double l2 = std::log(2.0), l3 = std::log(3.0);
    const Vector r{l2, l3, std::log(1.0 / 3.0) + l2, 2 * std::log(0.5)};
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(sys.r[i], r[i], 1e-15);
}

TEST(BuildSystem, CompleteMatrixGivesScaledIdentity) {
    const PCMatrix c = PCMatrix::from_rows({{1, 2, 4}, {0.5, 1, 2}, {0.25, 0.5, 1}});
    const GmSystem sys = build_system(c);
    DenseMatrix expected = DenseMatrix::identity(3);
    for (std::size_t i = 0; i < 3; ++i) expected(i, i) = 3.0;
    EXPECT_EQ(sys.m, expected);
}

TEST(BuildSystem, RejectsBadInput) {
    EXPECT_THROW(build_system(PCMatrix::from_rows({{1, kMissing, kMissing},
                                                   {kMissing, 1, 2},
                                                   {kMissing, 0.5, 1}})),
                 DisconnectedGraph);
    EXPECT_THROW(build_system(PCMatrix::from_rows({{1, 2}, {2, 1}})), InvalidMatrix);
}

TEST(BuildSystem, LaplacianPlusOnesInvariants) {
    testing::Rng rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = testing::random_size(rng, 2, 12);
        const PCMatrix c = testing::random_instance(rng, n, 0.5);
        const GmSystem sys = build_system(c);
        EXPECT_EQ(sys.m, laplacian(graph_of(c)) + DenseMatrix::ones(n, n));
        EXPECT_TRUE(sys.m.is_symmetric());
        for (double x : sys.m * Vector(n, 1.0)) EXPECT_EQ(x, static_cast<double>(n));
        for (std::size_t i = 0; i < n; ++i) {
            EXPECT_EQ(sys.m(i, i), static_cast<double>(n - sys.missing_counts[i]));
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) EXPECT_EQ(sys.m(i, j), c.missing(i, j) ? 1.0 : 0.0);
        }
        EXPECT_NO_THROW(Cholesky{sys.m});
    }
}

TEST(RankGm, WorkedExample) {
    const PriorityVector w = rank_gm(testing::worked_example());
    expect_weights(w, {2.0 / 11, 6.0 / 11, 2.0 / 11, 1.0 / 11}, 1e-14);
    expect_weights(w, {0.1818, 0.5455, 0.1818, 0.0909}, 5e-3);
    EXPECT_EQ(ordinal_ranking(w).groups, (std::vector<std::vector<std::size_t>>{{1}, {0, 2}, {3}}));
}

TEST(RankGm, UnscaledIsExpOfClosedForm) {
    const double l2 = std::log(2.0), l3 = std::log(3.0);
    const PriorityVector w = rank_gm(testing::worked_example(), Normalization::Unscaled);
    expect_weights(w,
                   {std::exp((l2 - l3) / 4), std::exp((l2 + 3 * l3) / 4), std::exp((l2 - l3) / 4),
                    std::exp((-3 * l2 - l3) / 4)},
                   1e-14);
}

TEST(RankGm, RecoversConsistentVector) {
    const PCMatrix c = PCMatrix::from_rows({{1, 0.5, 0.25}, {2, 1, 0.5}, {4, 2, 1}});
    expect_weights(rank_gm(c), {1.0 / 7, 2.0 / 7, 4.0 / 7}, 1e-15);
}

TEST(RankGm, NormalizationsDifferByOneScale) {
    testing::Rng rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const PCMatrix c = testing::random_instance(rng, testing::random_size(rng, 2, 10), 0.4);
        const PriorityVector sum = rank_gm(c, Normalization::SumToOne);
        const PriorityVector max = rank_gm(c, Normalization::MaxToOne);
        EXPECT_NEAR(*std::max_element(max.weights().begin(), max.weights().end()), 1.0, 1e-12);
        const double scale = max[0] / sum[0];
        for (std::size_t i = 0; i < c.size(); ++i) EXPECT_NEAR(max[i], scale * sum[i], 1e-12 * max[i]);
    }
}

TEST(RankGm, CompleteMatrixReducesToRowGeometricMeans) {
    testing::Rng rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        const PCMatrix c = testing::random_instance(rng, testing::random_size(rng, 2, 10), 0.0);
        expect_weights(rank_gm(c), testing::row_geometric_means(c), 1e-12);
    }
}

TEST(RankGm, MatchesDirectFixedPointIteration) {
    testing::Rng rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        const PCMatrix c = testing::random_instance(rng, testing::random_size(rng, 3, 8), 0.4);
        expect_weights(rank_gm(c), testing::gm_fixed_point(c), 1e-10);
    }
}

TEST(RankGm, PermutationEquivariant) {
    testing::Rng rng(59);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = testing::random_size(rng, 3, 10);
        const PCMatrix c = testing::random_instance(rng, n, 0.4);
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const PriorityVector w = rank_gm(c);
        const PriorityVector wp = rank_gm(testing::permuted(c, perm));
        for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(wp[i], w[perm[i]], 1e-12);
    }
}

TEST(RankGm, PerturbingLogWeightsNeverLowersError) {
    testing::Rng rng(61);
    std::uniform_real_distribution<double> delta(-0.1, 0.1);
    for (int trial = 0; trial < 30; ++trial) {
        const PCMatrix c = testing::random_instance(rng, testing::random_size(rng, 3, 10), 0.4);
        const Vector lw = gm_log_weights(c);
        const double best = s_star(c, PriorityVector::from_log_weights(lw, Normalization::Unscaled));
        for (int k = 0; k < 200; ++k) {
            Vector moved = lw;
            for (double& x : moved) x += delta(rng);
            const double other = s_star(c, PriorityVector::from_log_weights(moved, Normalization::Unscaled));
            EXPECT_GE(other, best - 1e-12 * (1 + best));
        }
    }
}

TEST(CompleteMatrix, WorkedExample) {
    const PCMatrix cs = complete_matrix(testing::worked_example());
    ASSERT_TRUE(cs.is_complete());
    EXPECT_NEAR(cs.value(0, 1), 1.0 / 3.0, 1e-9);
    EXPECT_NEAR(cs.value(1, 0), 3.0, 1e-9);
    EXPECT_EQ(cs.value(0, 3), 2.0);
    EXPECT_EQ(cs.value(2, 1), 1.0 / 3.0);
    EXPECT_TRUE(validate(cs, 1e-14).ok());
}

TEST(CompleteMatrix, CompleteInputUnchanged) {
    const PCMatrix c = PCMatrix::from_rows({{1, 3, 5}, {1.0 / 3, 1, 0.5}, {0.2, 2, 1}});
    EXPECT_EQ(complete_matrix(c), c);
}

TEST(CompleteMatrix, ReRankingIsAFixedPoint) {
    testing::Rng rng(67);
    for (int trial = 0; trial < 100; ++trial) {
        const PCMatrix c = testing::random_instance(rng, testing::random_size(rng, 3, 10), 0.4);
        const PCMatrix cs = complete_matrix(c);
        EXPECT_TRUE(validate(cs, 1e-12).ok());
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < c.size(); ++j)
                if (c.present(i, j)) EXPECT_EQ(cs.value(i, j), c.value(i, j));
        expect_weights(rank_gm(cs), rank_gm(c).weights(),
                       1e-9);
        // S*(C) equals S(C*) at the computed weights.
        const PriorityVector w = rank_gm(c);
        EXPECT_NEAR(s_star(c, w), s_complete(cs, w), 1e-12 * (1 + s_star(c, w)));
    }
}

}  // namespace
}  // namespace pcrank
