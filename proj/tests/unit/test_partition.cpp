#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "cubespec/compress.hpp"
#include "cubespec/partition.hpp"
#include "cubespec/search.hpp"
#include "oracles.hpp"

using namespace cubespec;

namespace {

Vertex V(std::initializer_list<unsigned> e) { return Vertex::from_elements(e); }

bool mentions(const PartitionReport& r, const std::string& needle) {
    return std::any_of(r.failures.begin(), r.failures.end(),
                       [&](const std::string& f) { return f.find(needle) != std::string::npos; });
}

// Every check except the degree ones must hold; part 4 must hold as well
// whenever the A-chain empties.
void expect_structural_checks(const VertexFamily& f, double eps) {
    const auto cert = build_partition(f, eps);
    const auto r = verify_partition(cert, f);
    for (unsigned p : {0u, 1u, 2u}) ASSERT_TRUE(r.parts[p]) << f.to_string() << " eps=" << eps << " part " << p + 1;
    for (unsigned a : {0u, 1u, 2u, 3u, 5u, 6u})
        ASSERT_TRUE(r.assertions[a]) << f.to_string() << " eps=" << eps << " assertion " << a + 1;
    if (!cert.core_nonempty) ASSERT_TRUE(r.parts[3]) << f.to_string() << " eps=" << eps;
    ASSERT_EQ(r.degree_checks_applicable, !cert.core_nonempty);
    ASSERT_EQ(cert.part_flags, r.parts);
    // E_M is the whole family.
    ASSERT_EQ(cert.E.back().size(), f.size());
}

}  // namespace

TEST(Partition, StarExample) {
    const auto f = hamming_ball(8, 1);
    const auto cert = build_partition(f, 0.5);
    EXPECT_EQ(cert.M, 1u);
    EXPECT_FALSE(cert.core_nonempty);
    ASSERT_EQ(cert.A.size(), 2u);
    EXPECT_EQ(cert.A[1], std::vector<Vertex>{Vertex{}});
    const auto r = verify_partition(cert, f);
    EXPECT_TRUE(r.passed()) << (r.failures.empty() ? "" : r.failures.front());
}

TEST(Partition, LargeEpsilonGivesOneBlock) {
    const auto f = hamming_ball(8, 1);
    const auto cert = build_partition(f, 1.5);
    EXPECT_EQ(cert.M, 0u);
    ASSERT_EQ(cert.D.size(), 1u);
    EXPECT_EQ(cert.D[0].size(), f.size());
    EXPECT_TRUE(verify_partition(cert, f).passed());
}

TEST(Partition, SingleVertex) {
    const VertexFamily f(4, {Vertex{}});
    const auto cert = build_partition(f, 0.5);
    EXPECT_EQ(cert.M, 0u);
    EXPECT_TRUE(verify_partition(cert, f).passed());
}

TEST(Partition, Preconditions) {
    EXPECT_THROW(build_partition(VertexFamily(2, {V({2})}), 0.5), precondition_error);
    EXPECT_THROW(build_partition(hamming_ball(4, 1), 0.0), precondition_error);
    EXPECT_THROW(build_partition(hamming_ball(4, 1), -1.0), precondition_error);
    EXPECT_THROW(build_partition(hamming_ball(4, 1), INFINITY), precondition_error);
}

TEST(Partition, CorruptedCertificateFailsPartTwo) {
    const auto f = initial_segment(40, 16);
    auto cert = build_partition(f, 0.3);
    ASSERT_TRUE(verify_partition(cert, f).parts[1]);
    ASSERT_GE(cert.M, 1u);
    ASSERT_FALSE(cert.D[0].empty());
    // Move one vertex from D_0 into C_1.
    const Vertex moved = cert.D[0].back();
    cert.D[0].pop_back();
    cert.C[1].push_back(moved);
    std::sort(cert.C[1].begin(), cert.C[1].end());
    const auto r = verify_partition(cert, f);
    EXPECT_FALSE(r.parts[1]);
    EXPECT_FALSE(r.passed());
    EXPECT_TRUE(mentions(r, "part 2: D_0 is missing " + moved.to_string()));
}

TEST(Partition, FullQ4HasACore) {
    // Every vertex of Q_4 has degree 4 ≥ 1 = εd, so the A-chain never empties.
    const auto f = full_cube(4);
    const auto cert = build_partition(f, 0.25);
    EXPECT_TRUE(cert.core_nonempty);
    EXPECT_EQ(cert.core_level, 0u);
    EXPECT_EQ(cert.M, 6u);
    const auto r = verify_partition(cert, f);
    EXPECT_FALSE(r.degree_checks_applicable);
    for (unsigned p : {0u, 1u, 2u}) EXPECT_TRUE(r.parts[p]);
}

// The degree half of assertion 5 (m_k ≤ εd) can fail: the safety element
// m_{k-1}+1 always lands in B_k, so m_k > m_{k-1} even when A_{M-k} adds
// nothing.
TEST(Partition, AssertionFiveCounterexample) {
    const VertexFamily f(5, {Vertex{}, V({1}), V({2})});
    const auto cert = build_partition(f, 0.3);
    EXPECT_EQ(cert.M, 1u);
    EXPECT_EQ(cert.m, (std::vector<unsigned>{1, 2}));
    const auto r = verify_partition(cert, f);
    EXPECT_TRUE(r.degree_checks_applicable);
    EXPECT_FALSE(r.assertions[4]);
    EXPECT_TRUE(mentions(r, "assertion 5: m_1 = 2 > 1.5"));
    EXPECT_TRUE(r.parts[3]);  // the blocks themselves are sparse
}

TEST(Partition, StructuralChecksOnEveryCompressedFamilyOfQ5) {
    for (std::uint64_t n = 1; n <= 32; ++n)
        for (const auto& f : enumerate_compressed(n, 5))
            for (double eps : {0.3, 0.5}) expect_structural_checks(f, eps);
}

TEST(Partition, StructuralChecksOnRandomCompressedFamiliesOfQ8) {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 150; ++trial) {
        const auto f = fully_compress(oracle::family_of(8, oracle::random_subset(8, 1 + rng() % 256, rng))).result;
        expect_structural_checks(f, trial % 2 ? 0.3 : 0.5);
    }
}

TEST(Partition, StarBallsAreCentredOnD) {
    const auto f = initial_segment(100, 20);
    const auto cert = build_partition(f, 0.2);
    for (const auto& ball : cert.star_balls) {
        EXPECT_TRUE(std::binary_search(cert.D[ball.k].begin(), cert.D[ball.k].end(), ball.centre));
        EXPECT_TRUE(std::count(ball.members.begin(), ball.members.end(), ball.centre));
        for (Vertex t : ball.members) EXPECT_LE(hamming_distance(ball.centre, t), cert.M - ball.k);
    }
}

TEST(EpsilonPresets, Values) {
    EXPECT_EQ(parse_epsilon_preset("sec52"), EpsilonPreset::sec52);
    EXPECT_EQ(to_string(EpsilonPreset::sec6), "sec6");
    EXPECT_THROW(parse_epsilon_preset("nope"), precondition_error);
    EXPECT_NEAR(preset_epsilon(EpsilonPreset::sec51, 10, 12), std::sqrt(2.0 * 10 / 12 / 12), 1e-15);
    // |H_1000^1| = 1001 ≥ 10, so i = 1.
    EXPECT_NEAR(preset_epsilon(EpsilonPreset::sec6, 10, 1000), 2.0 / std::sqrt(1000.0), 1e-15);
    // |H_64^1| = 65 < 137 ≤ |H_64^2|, so i = 2.
    EXPECT_NEAR(preset_epsilon(EpsilonPreset::sec52, 137, 64, 0.5), 0.5 / std::log2(32.0), 1e-15);
    EXPECT_THROW(preset_epsilon(EpsilonPreset::sec6, 17, 4), precondition_error);
}
