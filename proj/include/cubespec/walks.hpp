#pragma once

#include <cstddef>
#include <string>

#include "cubespec/family.hpp"

namespace cubespec {

/// (½·tr(A^{2k}))^{1/(2k)}, an upper bound on λ₁ for bipartite graphs.
struct WalkTraceBound {
    unsigned k = 0;
    /// ½·tr(A^{2k}) as an exact decimal integer: the number of closed walks
    /// of length 2k starting on one side of the bipartition.
    std::string half_trace;
    double value = 0.0;
    /// Set when 64-bit counts overflowed and the arbitrary-precision path ran.
    bool used_big_integers = false;
};

/// Exact integer walk counts by dynamic programming over the induced
/// adjacency; never uses floating point for the counts.
WalkTraceBound walk_trace_bound(const VertexFamily& family, unsigned k);

struct PathCycleCounts {
    std::size_t edges = 0;
    /// Σ_v C(deg v, 2)
    std::size_t paths2 = 0;
    std::size_t cycles4 = 0;
    /// Bipartition by parity of |S|; larger side first.
    std::size_t larger_side = 0;
    std::size_t smaller_side = 0;
    /// #C₄ ≤ C(l,2) and |E| ≤ 2·C(l,2) + k for the K_{2,3}-free cube.
    std::size_t cycle_bound = 0;
    std::size_t edge_bound = 0;
    bool cycle_bound_holds = true;
    bool edge_bound_holds = true;

    /// edges + 2·paths2 + 4·cycles4 = ½·tr(A⁴)
    std::size_t fourth_moment() const { return edges + 2 * paths2 + 4 * cycles4; }
};

PathCycleCounts count_p2_c4(const VertexFamily& family);

}  // namespace cubespec
