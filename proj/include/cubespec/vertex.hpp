#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubespec {

/// Largest ambient dimension supported by the machine-word vertex encoding.
inline constexpr unsigned kMaxDimension = 64;

/// Raised when an operation is called outside its documented domain.
/// The CLI maps this to exit status 2.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A vertex of the hypercube: a subset of the coordinates {1..64}.
///
/// Element j is stored in bit j-1, so the natural integer order on masks is
/// exactly the binary order (S < T iff max(S △ T) ∈ T).
class Vertex {
public:
    constexpr Vertex() = default;

    static constexpr Vertex from_mask(std::uint64_t mask) { return Vertex(mask); }
    static Vertex from_elements(std::initializer_list<unsigned> elements);
    static Vertex from_elements(const std::vector<unsigned>& elements);
    /// {1, ..., k}
    static Vertex prefix(unsigned k);

    constexpr std::uint64_t mask() const { return mask_; }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(mask_)); }

    /// Largest element, or 0 for the empty set.
    constexpr unsigned max_element() const {
        return mask_ == 0 ? 0u : 64u - static_cast<unsigned>(std::countl_zero(mask_));
    }
    /// Smallest element, or 0 for the empty set.
    constexpr unsigned min_element() const {
        return mask_ == 0 ? 0u : 1u + static_cast<unsigned>(std::countr_zero(mask_));
    }

    constexpr bool contains(unsigned j) const { return j >= 1 && j <= 64 && ((mask_ >> (j - 1)) & 1u); }
    constexpr bool subset_of(Vertex other) const { return (mask_ & ~other.mask_) == 0; }
    constexpr bool disjoint(Vertex other) const { return (mask_ & other.mask_) == 0; }
    /// Every element is at most d.
    constexpr bool within(unsigned d) const { return d >= 64 || (mask_ >> d) == 0; }

    constexpr Vertex with(unsigned j) const { return Vertex(mask_ | bit(j)); }
    constexpr Vertex without(unsigned j) const { return Vertex(mask_ & ~bit(j)); }
    constexpr Vertex flipped(unsigned j) const { return Vertex(mask_ ^ bit(j)); }

    constexpr Vertex operator|(Vertex o) const { return Vertex(mask_ | o.mask_); }
    constexpr Vertex operator&(Vertex o) const { return Vertex(mask_ & o.mask_); }
    constexpr Vertex operator^(Vertex o) const { return Vertex(mask_ ^ o.mask_); }
    constexpr Vertex minus(Vertex o) const { return Vertex(mask_ & ~o.mask_); }

    std::vector<unsigned> elements() const;

    /// "{1,3}" with sorted elements; the empty set prints as "{}".
    std::string to_string() const;
    /// Length-d string, character j (1-based) is '1' iff j ∈ S.
    std::string to_binary(unsigned d) const;
    static Vertex parse_binary(const std::string& text);

    constexpr bool operator==(const Vertex&) const = default;
    constexpr std::strong_ordering operator<=>(const Vertex& o) const { return mask_ <=> o.mask_; }

private:
    constexpr explicit Vertex(std::uint64_t mask) : mask_(mask) {}
    static constexpr std::uint64_t bit(unsigned j) { return std::uint64_t{1} << (j - 1); }

    std::uint64_t mask_ = 0;
};

/// Binary order: S < T iff S ≠ T and max(S △ T) ∈ T.
constexpr std::strong_ordering binary_compare(Vertex s, Vertex t) {
    if (s == t) return std::strong_ordering::equal;
    return (s ^ t).max_element() > 0 && t.contains((s ^ t).max_element()) ? std::strong_ordering::less
                                                                             : std::strong_ordering::greater;
}

/// Hamming distance |S △ T|.
constexpr unsigned hamming_distance(Vertex s, Vertex t) { return (s ^ t).size(); }

struct VertexHash {
    std::size_t operator()(Vertex v) const noexcept {
        std::uint64_t x = v.mask() + 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return static_cast<std::size_t>(x ^ (x >> 31));
    }
};

}  // namespace cubespec
