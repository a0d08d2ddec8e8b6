#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cubespec/family.hpp"

namespace cubespec {

/// An edge {lo, hi} of Q_d with |lo △ hi| = 1 and lo ⊂ hi.
struct Edge {
    Vertex lo;
    Vertex hi;
    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

using EdgeSet = std::vector<Edge>;

/// Every pair of members at Hamming distance 1, each once, sorted.
EdgeSet induced_edges(const VertexFamily& family);

/// Index-based adjacency of Q_d[F] in CSR form. Vertex k is family[k].
class InducedGraph {
public:
    explicit InducedGraph(const VertexFamily& family);

    std::size_t order() const { return offsets_.size() - 1; }
    std::size_t edge_count() const { return neighbours_.size() / 2; }
    std::span<const std::uint32_t> neighbours(std::size_t k) const {
        return {neighbours_.data() + offsets_[k], neighbours_.data() + offsets_[k + 1]};
    }
    std::size_t degree(std::size_t k) const { return offsets_[k + 1] - offsets_[k]; }
    std::size_t max_degree() const;

    /// Column-major ELL table: slot s of vertex k is at [s * order() + k].
    /// Unused slots hold order(), which callers map to a zero entry.
    struct Ell {
        std::size_t width = 0;
        std::vector<std::int32_t> columns;
    };
    Ell ell() const;

private:
    std::vector<std::size_t> offsets_;
    std::vector<std::uint32_t> neighbours_;
};

struct DegreeProfile {
    std::vector<std::size_t> degrees;  // parallel to family members
    std::size_t max_degree = 0;
    /// max over u of Σ_{v ∈ N(u)} deg(v)
    std::size_t max_neighbour_degree_sum = 0;
};

DegreeProfile degree_profile(const VertexFamily& family);

}  // namespace cubespec
