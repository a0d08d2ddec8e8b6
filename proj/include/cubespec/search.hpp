#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "cubespec/family.hpp"

namespace cubespec {

/// Visits every compressed (down-closed, left-shifted) family of size n whose
/// members lie in [cap_dim], each exactly once, in a fixed depth-first order.
/// Returning false from the callback stops the walk early; the function then
/// returns false as well.
///
/// Throws precondition_error if n = 0, n > 2^cap_dim, or cap_dim > 64.
bool for_each_compressed(std::uint64_t n, unsigned cap_dim, const std::function<bool(const VertexFamily&)>& visit);

/// All of them, sorted by canonical_less. The families have dimension cap_dim.
std::vector<VertexFamily> enumerate_compressed(std::uint64_t n, unsigned cap_dim);

struct RankedFamily {
    double lambda1 = 0.0;
    VertexFamily family{0};
};

struct SearchResult {
    std::uint64_t n = 0;
    unsigned d = 0;
    double best_lambda1 = 0.0;
    /// First maximizer in canonical order.
    VertexFamily maximizer{0};
    /// Every family within the tie tolerance of the best, canonical order.
    std::vector<VertexFamily> maximizers;
    /// The top_k families by λ₁ (ties broken canonically), best first.
    std::vector<RankedFamily> runner_ups;
    std::uint64_t search_space_size = 0;
    /// d < n-1: compressed n-families in Q_∞ may not all fit into Q_d, so the
    /// value is the maximum for Q_d only.
    bool restricted = false;
    /// The family budget ran out before the enumeration finished.
    bool partial = false;
};

struct SearchOptions {
    double tol = 1e-10;
    std::size_t top_k = 5;
    /// Maximum number of families evaluated; 0 means unlimited.
    std::uint64_t budget = 0;
    /// Two values closer than this count as a tie.
    double tie_tolerance = 1e-9;
};

/// max λ₁ over n-vertex induced subgraphs of Q_d, via compressed families.
SearchResult max_lambda1(std::uint64_t n, unsigned d, const SearchOptions& options = {});

/// Reference answer by trying every n-subset of V(Q_d). The maximizers list
/// keeps only the first tie in canonical order; ties_found counts them all.
struct OracleResult {
    std::uint64_t n = 0;
    unsigned d = 0;
    double best_lambda1 = 0.0;
    VertexFamily maximizer{0};
    std::uint64_t ties_found = 0;
    std::uint64_t subsets_tried = 0;
};

/// Throws precondition_error when C(2^d, n) exceeds max_subsets.
OracleResult brute_force_max_lambda1(std::uint64_t n, unsigned d, std::uint64_t max_subsets = 20'000'000);

struct StarRegimeRow {
    std::uint64_t n = 0;
    double best_lambda1 = 0.0;
    double star_lambda1 = 0.0;
    /// The star attains the maximum.
    bool star_optimal = false;
    /// The star is the only compressed maximizer.
    bool star_unique = false;
    VertexFamily winner{0};
};

/// For each n in [n_lo, n_hi] (each ≤ d) compares the search maximum with √(n-1).
std::vector<StarRegimeRow> verify_star_regime(std::uint64_t n_lo, std::uint64_t n_hi, unsigned d,
                                              const SearchOptions& options = {});

/// Thread count for parallel sweeps: CUBE_SPECTRA_THREADS if set and positive,
/// otherwise hardware concurrency.
unsigned worker_threads();

}  // namespace cubespec
