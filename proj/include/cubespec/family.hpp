#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cubespec/vertex.hpp"

namespace cubespec {

/// The vertex set of an induced subgraph of Q_d.
///
/// Members are kept sorted in binary order and are unique. Instances are
/// immutable after construction.
class VertexFamily {
public:
    /// Empty family in Q_d.
    explicit VertexFamily(unsigned dimension);
    /// Validates that every member lies inside [d] and that there are no
    /// duplicates; throws precondition_error otherwise.
    VertexFamily(unsigned dimension, std::vector<Vertex> members);

    unsigned dimension() const { return dimension_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    std::span<const Vertex> members() const { return members_; }
    const Vertex& operator[](std::size_t k) const { return members_[k]; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool contains(Vertex v) const;
    /// Position in binary order, or size() when absent.
    std::size_t index_of(Vertex v) const;

    /// Largest member cardinality (0 for the empty family).
    unsigned max_set_size() const;
    /// Closed under taking subsets.
    bool is_down_closed() const;
    bool is_subset_of(const VertexFamily& other) const;

    /// Same members, different ambient dimension (must still fit).
    VertexFamily with_dimension(unsigned dimension) const;

    std::string to_string() const;

    bool operator==(const VertexFamily&) const = default;

private:
    struct trusted_tag {};
    VertexFamily(trusted_tag, unsigned dimension, std::vector<Vertex> sorted_members);

    friend VertexFamily initial_segment(std::uint64_t n, unsigned d);
    friend VertexFamily hamming_ball(unsigned d, unsigned radius);
    friend VertexFamily full_cube(unsigned d);

    unsigned dimension_;
    std::vector<Vertex> members_;
};

/// Canonical family order: by size, then lexicographically on the sorted
/// member masks.
bool canonical_less(const VertexFamily& a, const VertexFamily& b);

/// The n smallest vertices of Q_d in binary order.
VertexFamily initial_segment(std::uint64_t n, unsigned d);
/// All S ⊆ [d] with |S| ≤ radius.
VertexFamily hamming_ball(unsigned d, unsigned radius);
VertexFamily full_cube(unsigned d);

/// Σ_{j ≤ radius} C(d, j), saturating at UINT64_MAX.
std::uint64_t hamming_ball_size(unsigned d, unsigned radius);

/// Upper bound on families the constructors above will materialize.
inline constexpr std::uint64_t kMaxMaterializedFamily = std::uint64_t{1} << 26;

}  // namespace cubespec
