#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "cubespec/io.hpp"
#include "oracles.hpp"

using namespace cubespec;

namespace {

VertexFamily parse_family(const std::string& text) {
    std::istringstream in(text);
    return read_family(in);
}

WeightVector parse_vector(const std::string& text) {
    std::istringstream in(text);
    return read_vector(in);
}

}  // namespace

TEST(FamilyIo, ParsesCommentsAndBlankLines) {
    const auto f = parse_family("# a comment\n\nd=3\n000  # empty set\n100\n\n011\n");
    EXPECT_EQ(f.dimension(), 3u);
    EXPECT_EQ(f, VertexFamily(3, {Vertex{}, Vertex::from_elements({1}), Vertex::from_elements({2, 3})}));
}

TEST(FamilyIo, RoundTrip) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const unsigned d = 1 + rng() % 8;
        const auto f = oracle::family_of(d, oracle::random_subset(d, rng() % ((std::size_t{1} << d) + 1), rng));
        std::ostringstream out;
        write_family(out, f);
        ASSERT_EQ(parse_family(out.str()), f);
    }
}

TEST(FamilyIo, RejectsMalformedInput) {
    EXPECT_THROW(parse_family(""), precondition_error);
    EXPECT_THROW(parse_family("3\n000\n"), precondition_error);
    EXPECT_THROW(parse_family("d=0\n"), precondition_error);
    EXPECT_THROW(parse_family("d=65\n"), precondition_error);
    EXPECT_THROW(parse_family("d=3\n00\n"), precondition_error);
    EXPECT_THROW(parse_family("d=3\n0a0\n"), precondition_error);
    EXPECT_THROW(parse_family("d=3\n010\n010\n"), precondition_error);
    EXPECT_THROW(read_family_file("/nonexistent/family.txt"), precondition_error);
}

TEST(FamilyIo, ErrorNamesTheLine) {
    try {
        parse_family("d=2\n00\n\n1x\n");
        FAIL() << "expected a parse error";
    } catch (const precondition_error& e) {
        EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
    }
}

TEST(VectorIo, RoundTripIsExact) {
    WeightVector v(4);
    v.set(Vertex::from_elements({1}), 0.1);
    v.set(Vertex::from_elements({2, 4}), -3.25e-7);
    v.set(Vertex{}, 1.0 / 3.0);
    std::ostringstream out;
    write_vector(out, v);
    EXPECT_EQ(parse_vector(out.str()), v);
}

TEST(VectorIo, RejectsMalformedInput) {
    EXPECT_THROW(parse_vector("d=2\n10\n"), precondition_error);
    EXPECT_THROW(parse_vector("d=2\n10 1.0 2.0\n"), precondition_error);
    EXPECT_THROW(parse_vector("d=2\n10 abc\n"), precondition_error);
    EXPECT_THROW(parse_vector("d=2\n10 1.5x\n"), precondition_error);
    EXPECT_THROW(parse_vector("d=2\n10 1\n10 2\n"), precondition_error);
}

TEST(VectorIo, ZeroWeightsAreDropped) {
    const auto v = parse_vector("d=2\n10 0\n01 2\n");
    EXPECT_EQ(v.support_size(), 1u);
    EXPECT_EQ(v[Vertex::from_elements({2})], 2.0);
}
