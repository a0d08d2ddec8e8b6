#include <gtest/gtest.h>

#include <cmath>

#include "cubespec/compress.hpp"
#include "cubespec/hamming.hpp"
#include "cubespec/spectral.hpp"
#include "oracles.hpp"

using namespace cubespec;

TEST(HammingExact, Examples) {
    EXPECT_NEAR(hamming_lambda1_exact(4, 1).lambda1, 2.0, 1e-12);
    EXPECT_NEAR(hamming_lambda1_exact(6, 2).lambda1, 4.0, 1e-12);
    const auto rel = hamming_lambda1_exact(6, 2).relative_level_weights();
    ASSERT_EQ(rel.size(), 3u);
    EXPECT_NEAR(rel[1], 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(rel[2], 1.0 / 3.0, 1e-12);
    EXPECT_EQ(hamming_lambda1_exact(5, 0).lambda1, 0.0);
    EXPECT_THROW(hamming_lambda1_exact(4, 5), precondition_error);
    EXPECT_THROW(hamming_lambda1_exact(0, 0), precondition_error);
}

// The value quoted for H_16^4 in some write-ups is 12 = d - 4; the reduced
// system, the power method and a dense solve all give 10.6230...
TEST(HammingExact, Sixteen4IsNotTwelve) {
    const auto exact = hamming_lambda1_exact(16, 4);
    EXPECT_NEAR(exact.lambda1, 10.623020783716, 1e-9);
    const auto power = lambda1(hamming_ball(16, 4));
    EXPECT_NEAR(power.lambda1, exact.lambda1, power.error_bound + 1e-12);
    EXPECT_GT(std::fabs(exact.lambda1 - 12.0), 1.0);
}

TEST(HammingExact, MatchesOracleUpToDimensionTwelve) {
    for (unsigned d = 1; d <= 12; ++d)
        for (unsigned i = 0; i <= d; ++i) {
            const auto ball = hamming_ball(d, i);
            const auto masks = oracle::masks_of(ball);
            const double truth = masks.size() <= 700 ? oracle::lambda1(masks) : oracle::lambda1_sparse(masks, d);
            ASSERT_NEAR(hamming_lambda1_exact(d, i).lambda1, truth, 1e-8) << d << " " << i;
        }
}

TEST(HammingExact, ClosedFormBelowHalf) {
    for (unsigned d = 4; d <= 20; d += 2) {
        const auto s = hamming_lambda1_exact(d, d / 2 - 1);
        EXPECT_NEAR(s.lambda1, d - 2.0, 1e-12) << d;
        EXPECT_LT(s.residual_inf, 1e-9);
        const auto rel = s.relative_level_weights();
        for (unsigned j = 0; j < rel.size(); ++j) EXPECT_NEAR(rel[j], 1.0 - 2.0 * j / d, 1e-10) << d << " " << j;
    }
}

TEST(HammingExact, ExpandedVectorIsTheBallEigenvector) {
    for (auto [d, i] : {std::pair{6u, 2u}, {9u, 3u}, {12u, 5u}}) {
        const auto s = hamming_lambda1_exact(d, i);
        const auto x = s.expand();
        EXPECT_NEAR(x.norm_squared(), 1.0, 1e-12);
        EXPECT_NEAR(rayleigh(x), s.lambda1, 1e-10);
        EXPECT_EQ(x.support(), hamming_ball(d, i));
    }
}

TEST(HammingExact, HugeDimensionsStayFinite) {
    const auto s = hamming_lambda1_exact(1'000'000'000ULL, 3);
    EXPECT_TRUE(std::isfinite(s.lambda1));
    EXPECT_NEAR(s.lambda1 / std::sqrt(1e9), limit_constant(3), 1e-6);
    EXPECT_THROW(s.expand(), precondition_error);
}

TEST(LimitConstant, Examples) {
    EXPECT_NEAR(limit_constant(1), 1.0, 1e-14);
    EXPECT_NEAR(limit_constant(2), std::sqrt(3.0), 1e-14);
    EXPECT_THROW(limit_constant(0), precondition_error);
    for (unsigned i = 1; i < 40; ++i) EXPECT_LT(limit_constant(i), limit_constant(i + 1));
}

TEST(LimitConstant, RateIsOrderOneOverD) {
    for (unsigned i = 1; i <= 3; ++i) {
        double err[3];
        int k = 0;
        for (double d : {1e2, 1e3, 1e4}) {
            const auto s = hamming_lambda1_exact(static_cast<std::uint64_t>(d), i);
            err[k++] = std::fabs(s.lambda1 / std::sqrt(d) - limit_constant(i));
        }
        if (i == 1) {
            // H_d^1 is a star, so the ratio is exactly 1 for every d.
            for (double e : err) EXPECT_LT(e, 1e-13);
            continue;
        }
        EXPECT_NEAR(err[1] / err[0], 0.1, 0.02) << i;
        EXPECT_NEAR(err[2] / err[1], 0.1, 0.02) << i;
    }
}
