#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <random>
#include <string>

#include "cubespec/compress.hpp"
#include "cubespec/walks.hpp"
#include "oracles.hpp"

using namespace cubespec;

namespace {

Vertex V(std::initializer_list<unsigned> e) { return Vertex::from_elements(e); }

VertexFamily star(unsigned m, unsigned d) {
    std::vector<Vertex> vs{Vertex{}};
    for (unsigned j = 1; j <= m; ++j) vs.push_back(V({j}));
    return VertexFamily(d, vs);
}

// Independent 4-cycle count: a 4-cycle in the cube is a 2-face, so count
// pairs of coordinates and base sets with all four corners present.
std::size_t oracle_c4(unsigned d, const oracle::Masks& masks) { return oracle::subcube_count(d, masks, 2); }

std::size_t oracle_p2(const oracle::Masks& masks) {
    std::size_t total = 0;
    for (auto a : masks) {
        std::size_t deg = 0;
        for (auto b : masks) deg += std::popcount(a ^ b) == 1;
        if (deg >= 2) total += deg * (deg - 1) / 2;
    }
    return total;
}

}  // namespace

TEST(WalkTrace, Examples) {
    const auto k13 = walk_trace_bound(star(3, 4), 1);
    EXPECT_EQ(k13.half_trace, "3");
    EXPECT_NEAR(k13.value, std::sqrt(3.0), 1e-14);

    const auto q2 = walk_trace_bound(full_cube(2), 2);
    EXPECT_EQ(q2.half_trace, "16");
    EXPECT_NEAR(q2.value, 2.0, 1e-14);

    const auto edge = walk_trace_bound(VertexFamily(2, {Vertex{}, V({2})}), 3);
    EXPECT_EQ(edge.half_trace, "1");
    EXPECT_NEAR(edge.value, 1.0, 1e-14);

    EXPECT_THROW(walk_trace_bound(full_cube(2), 0), precondition_error);
}

TEST(WalkTrace, MatchesMatrixPowerOracle) {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 150; ++trial) {
        const unsigned d = 1 + rng() % 5;
        const auto masks = oracle::random_subset(d, 1 + rng() % (std::size_t{1} << d), rng);
        const auto f = oracle::family_of(d, masks);
        for (unsigned k = 1; k <= 5; ++k) {
            const auto w = walk_trace_bound(f, k);
            ASSERT_EQ(w.half_trace, std::to_string(oracle::trace_power(masks, 2 * k) / 2));
            ASSERT_FALSE(w.used_big_integers);
            ASSERT_GE(w.value, oracle::lambda1(masks) - 1e-12);
        }
    }
}

TEST(WalkTrace, FourthMomentIdentity) {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned d = 1 + rng() % 6;
        const auto masks = oracle::random_subset(d, 1 + rng() % (std::size_t{1} << d), rng);
        const auto f = oracle::family_of(d, masks);
        const auto c = count_p2_c4(f);
        ASSERT_EQ(c.edges, oracle::edge_count(masks));
        ASSERT_EQ(c.paths2, oracle_p2(masks));
        ASSERT_EQ(c.cycles4, oracle_c4(d, masks));
        ASSERT_EQ(std::to_string(c.fourth_moment()), walk_trace_bound(f, 2).half_trace);
        ASSERT_TRUE(c.cycle_bound_holds);
        ASSERT_TRUE(c.edge_bound_holds);
        ASSERT_EQ(c.larger_side + c.smaller_side, masks.size());
        ASSERT_GE(c.larger_side, c.smaller_side);
    }
}

TEST(WalkTrace, NonincreasingAndConverging) {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        const unsigned d = 2 + rng() % 4;
        const std::size_t n = 2 + rng() % std::min<std::size_t>(23, (std::size_t{1} << d) - 1);
        const auto f = fully_compress(oracle::family_of(d, oracle::random_subset(d, n, rng))).result;
        const auto masks = oracle::masks_of(f);
        double previous = INFINITY;
        for (unsigned k = 1; k <= 20; ++k) {
            const double v = walk_trace_bound(f, k).value;
            ASSERT_LE(v, previous + 1e-12) << f.to_string() << " k=" << k;
            previous = v;
        }
        ASSERT_LT(previous - oracle::lambda1(masks), 0.05) << f.to_string();
    }
}

TEST(WalkTrace, BigIntegerFallback) {
    // Q_6 has ½·tr(A^{2k}) = ½·Σ_j C(6,j)(6-2j)^{2k}, far above 2^62 at k = 20.
    const auto w = walk_trace_bound(full_cube(6), 20);
    EXPECT_TRUE(w.used_big_integers);
    EXPECT_NEAR(w.value, 6.0 * std::pow(1.0 + 6.0 * std::pow(4.0 / 6.0, 40) + 15.0 * std::pow(2.0 / 6.0, 40), 1.0 / 40),
                1e-12);
    // Exact digits from the closed form: C(6,j) walks per eigenvalue 6-2j.
    boost::multiprecision::cpp_int total = 0;
    const int binom[] = {1, 6, 15, 20, 15, 6, 1};
    for (int j = 0; j <= 6; ++j) total += binom[j] * boost::multiprecision::pow(boost::multiprecision::cpp_int(6 - 2 * j), 40);
    EXPECT_EQ(w.half_trace, boost::multiprecision::cpp_int(total / 2).str());
}

TEST(PathCycle, Examples) {
    const auto q2 = count_p2_c4(full_cube(2));
    EXPECT_EQ(q2.paths2, 4u);
    EXPECT_EQ(q2.cycles4, 1u);
    EXPECT_EQ(q2.fourth_moment(), 16u);
    const auto k14 = count_p2_c4(star(4, 4));
    EXPECT_EQ(k14.paths2, 6u);
    EXPECT_EQ(k14.cycles4, 0u);
    const auto h42 = count_p2_c4(hamming_ball(4, 2));
    EXPECT_LE(h42.cycles4, h42.cycle_bound);
    EXPECT_EQ(h42.cycles4, 6u);
    EXPECT_EQ(h42.smaller_side, 4u);
    EXPECT_EQ(h42.cycle_bound, 6u);
}
