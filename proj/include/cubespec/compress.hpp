#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubespec/family.hpp"
#include "cubespec/weight_vector.hpp"

namespace cubespec {

// Compressions push weight towards "lower" vertices without changing the
// multiset of entries. For disjoint U, V the operator C_{U,V} compares each
// pair (S, S △ (U ∪ V)) with V ⊆ S, U ∩ S = ∅ and leaves the larger weight on
// the V-side vertex S. Equal weights are never swapped.

/// One elementary step of the fixpoint schedule.
struct CompressionStep {
    enum class Kind { down, shift, binary };
    Kind kind = Kind::down;
    /// down: C_{{coord},∅}. binary: C_coord.
    unsigned coord = 0;
    /// shift: C_{{from},{to}} with to < from, moving weight from sets
    /// containing `from` to sets containing `to`.
    unsigned from = 0;
    unsigned to = 0;

    static CompressionStep down_step(unsigned i) { return {Kind::down, i, 0, 0}; }
    static CompressionStep shift_step(unsigned from, unsigned to) { return {Kind::shift, 0, from, to}; }
    static CompressionStep binary_step(unsigned i) { return {Kind::binary, i, 0, 0}; }

    std::string to_string() const;
    bool operator==(const CompressionStep&) const = default;
};

WeightVector compress_vector_uv(const WeightVector& v, Vertex u, Vertex w);
VertexFamily compress_family_uv(const VertexFamily& family, Vertex u, Vertex w);

/// Rearranges the weights inside {S : i ∈ S} and inside {S : i ∉ S} so that
/// each half is non-increasing along binary order.
WeightVector binary_compression(const WeightVector& v, unsigned i);

WeightVector apply_step(const WeightVector& v, const CompressionStep& step);
VertexFamily apply_step(const VertexFamily& family, const CompressionStep& step);

/// Σ over cube edges {S, S+j} of 2·v_S·v_{S+j}, i.e. ⟨A(Q_d)v, v⟩.
double rayleigh(const WeightVector& v);

template <class T>
struct CompressionRun {
    T result;
    /// Only steps that changed their input, in application order.
    std::vector<CompressionStep> steps;
    std::size_t sweeps = 0;
};

/// Iterates the down steps C_{{i},∅} (increasing i) and the left shifts
/// C_{{j},{i}} (i < j, lexicographic) until a whole sweep changes nothing.
/// Each changing step is checked to strictly decrease an integer potential.
CompressionRun<VertexFamily> fully_compress(const VertexFamily& family);
CompressionRun<WeightVector> fully_compress(const WeightVector& v);

struct CompressedCheck {
    bool compressed = true;
    std::optional<CompressionStep> violation;
};

/// True iff x is a fixpoint of every left shift and every down step. Shifts
/// are checked first, so {{2}} reports C_{2,1}.
CompressedCheck is_compressed(const VertexFamily& family);
CompressedCheck is_compressed(const WeightVector& v);

/// The schedule used by fully_compress for dimension d.
std::vector<CompressionStep> compression_schedule(unsigned d);

}  // namespace cubespec
