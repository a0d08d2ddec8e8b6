#pragma once

#include <cstdint>
#include <string>

#include "cubespec/family.hpp"

namespace cubespec {

/// 2√(t·d) for families whose members have at most t ≤ d/2 elements and
/// whose induced maximum degree is at most d.
struct LevelBound {
    double value = 0.0;
    unsigned max_set_size = 0;
    std::size_t max_degree = 0;
    /// False when t > d/2 (or the degree condition fails); value is still
    /// reported but is not a proven bound.
    bool applicable = true;
};

LevelBound level_bound(const VertexFamily& family);

/// 2√(i(d+1-i)), valid for 1 ≤ i ≤ d/2.
double hamming_upper_bound(std::uint64_t d, std::uint64_t radius);

/// [C(2k,k)/(k+1) · ((i-k)(d+1-(i-k)))^k]^{1/(2k)}, a lower bound on λ₁(H_d^i)
/// from Catalan-counted down-up walks out of level i. Needs 1 ≤ k < i ≤ d/2.
double hamming_walk_lower_bound(std::uint64_t d, std::uint64_t radius, std::uint64_t k);

/// Classical upper bounds on λ₁ in terms of edge count and degrees.
struct ClassicBounds {
    std::size_t edges = 0;
    std::size_t max_neighbour_degree_sum = 0;
    /// k-1 for the least k ≥ 1 with m ≤ C(k,2)
    double brualdi_hoffman = 0.0;
    /// (-1 + √(8m+1)) / 2
    double stanley = 0.0;
    /// √s(G)
    double fms = 0.0;
    /// √m (triangle-free graphs)
    double nosal = 0.0;
};

ClassicBounds classic_bounds(const VertexFamily& family);

/// λ₁ of the star on n vertices, √(n-1).
double star_value(std::uint64_t n);

}  // namespace cubespec
