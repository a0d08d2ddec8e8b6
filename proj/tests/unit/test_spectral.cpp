#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cubespec/compress.hpp"
#include "cubespec/spectral.hpp"
#include "cubespec/hamming.hpp"
#include "cubespec/tridiagonal.hpp"
#include "oracles.hpp"

using namespace cubespec;

namespace {

VertexFamily star(unsigned m, unsigned d) {
    std::vector<Vertex> vs{Vertex{}};
    for (unsigned j = 1; j <= m; ++j) vs.push_back(Vertex::from_elements({j}));
    return VertexFamily(d, vs);
}

}  // namespace

TEST(Lambda1, Examples) {
    EXPECT_NEAR(lambda1(full_cube(2)).lambda1, 2.0, 1e-10);
    EXPECT_NEAR(lambda1_dense(full_cube(2)).lambda1, 2.0, 1e-12);
    for (unsigned m = 1; m <= 9; ++m) {
        EXPECT_NEAR(lambda1(star(m, 9)).lambda1, std::sqrt(m), 1e-10) << m;
        EXPECT_NEAR(lambda1_dense(star(m, 9)).lambda1, std::sqrt(m), 1e-12) << m;
    }
    const VertexFamily single(4, {Vertex::from_elements({2})});
    EXPECT_EQ(lambda1(single).lambda1, 0.0);
    EXPECT_EQ(lambda1_dense(single).lambda1, 0.0);
    EXPECT_THROW(lambda1(VertexFamily(3)), precondition_error);
}

TEST(Lambda1, FullCubeIsD) {
    for (unsigned d = 1; d <= 12; ++d) {
        const auto r = lambda1(full_cube(d));
        EXPECT_NEAR(r.lambda1, d, 1e-9);
        EXPECT_TRUE(r.converged);
    }
}

TEST(Lambda1, PowerAndDenseAgreeWithOracle) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        const unsigned d = 2 + rng() % 6;
        const auto masks = oracle::random_subset(d, 1 + rng() % (std::size_t{1} << d), rng);
        const auto f = oracle::family_of(d, masks);
        const double truth = oracle::lambda1(masks);
        const auto power = lambda1(f);
        const auto dense = lambda1_dense(f);
        ASSERT_NEAR(dense.lambda1, truth, 1e-10);
        // Certified enclosure from the power method contains the truth.
        ASSERT_LE(std::fabs(power.lambda1 - truth), power.error_bound + 1e-12) << f.to_string();
        ASSERT_LE(power.error_bound, 1e-9);
        ASSERT_NEAR(lambda1_auto(f).lambda1, truth, 1e-9);
    }
}

TEST(Lambda1, EigenvectorIsNonnegativeUnitAndEigen) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 60; ++trial) {
        const unsigned d = 3 + rng() % 4;
        const auto f = fully_compress(oracle::family_of(d, oracle::random_subset(d, 2 + rng() % 20, rng))).result;
        for (const auto& r : {lambda1(f), lambda1_dense(f)}) {
            const auto& x = r.eigenvector;
            ASSERT_NEAR(x.norm_squared(), 1.0, 1e-10);
            for (const auto& [v, w] : x.entries()) {
                ASSERT_GT(w, 0.0);  // connected: Perron vector is strictly positive
                ASSERT_TRUE(f.contains(v));
            }
            // A x = λ x on the support.
            for (Vertex v : f) {
                double ax = 0.0;
                for (unsigned j = 1; j <= d; ++j) ax += x[v.flipped(j)] * f.contains(v.flipped(j));
                ASSERT_NEAR(ax, r.lambda1 * x[v], 1e-7);
            }
            ASSERT_NEAR(rayleigh(x), r.lambda1, 1e-8);
        }
    }
}

TEST(Lambda1, AutoPicksMethodBySize) {
    EXPECT_EQ(lambda1_auto(hamming_ball(8, 2)).method, Method::dense_small);
    const auto big = lambda1_auto(hamming_ball(12, 3));  // 299 vertices, still dense
    EXPECT_EQ(big.method, Method::dense_small);
    const auto huge = lambda1_auto(hamming_ball(14, 4));  // 1471 vertices
    EXPECT_EQ(huge.method, Method::power);
    EXPECT_NEAR(huge.lambda1, hamming_lambda1_exact(14, 4).lambda1, 1e-9);
}

TEST(Lambda1, TightToleranceEnclosesDenseValue) {
    const auto f = hamming_ball(12, 3);
    const auto r = lambda1(f, {1e-12, 1'000'000});
    const auto e = lambda1_dense(f);
    EXPECT_TRUE(r.converged);
    EXPECT_LE(r.error_bound, 1e-11);
    EXPECT_LE(std::fabs(r.lambda1 - e.lambda1), r.error_bound + 1e-12);
    EXPECT_LE(r.residual_inf, 1e-11);
}

TEST(Tridiagonal, MatchesEigen) {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 30;
        SymmetricTridiagonal t;
        t.diag.resize(n);
        t.off.assign(n, 0.0);
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
        for (std::size_t k = 0; k < n; ++k) {
            t.diag[k] = dist(rng);
            m(k, k) = t.diag[k];
            if (k > 0) {
                t.off[k] = dist(rng);
                m(k - 1, k) = m(k, k - 1) = t.off[k];
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
        const auto top = top_eigenpair(t);
        ASSERT_NEAR(top.value, es.eigenvalues()(n - 1), 1e-12);
        ASSERT_LE(top.residual_inf, 1e-10);
        // Sturm counts agree with the full spectrum.
        for (int probe = 0; probe < 5; ++probe) {
            const double x = dist(rng) * 2.0;
            std::size_t below = 0;
            for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) below += es.eigenvalues()(k) < x;
            ASSERT_EQ(t.count_below(x), below);
        }
        ASSERT_GE(t.gershgorin_upper(), es.eigenvalues()(n - 1));
        ASSERT_LE(t.gershgorin_lower(), es.eigenvalues()(0));
    }
}
