#include "cubespec/family.hpp"

#include <algorithm>
#include <functional>

namespace cubespec {

namespace {

void check_dimension(unsigned d) {
    if (d > kMaxDimension) throw precondition_error("dimension " + std::to_string(d) + " exceeds 64");
}

}  // namespace

VertexFamily::VertexFamily(unsigned dimension) : dimension_(dimension) { check_dimension(dimension); }

VertexFamily::VertexFamily(unsigned dimension, std::vector<Vertex> members)
    : dimension_(dimension), members_(std::move(members)) {
    check_dimension(dimension);
    std::sort(members_.begin(), members_.end());
    for (std::size_t k = 0; k < members_.size(); ++k) {
        if (!members_[k].within(dimension_))
            throw precondition_error("vertex " + members_[k].to_string() + " not inside [" +
                                     std::to_string(dimension_) + "]");
        if (k > 0 && members_[k] == members_[k - 1])
            throw precondition_error("duplicate vertex " + members_[k].to_string());
    }
}

VertexFamily::VertexFamily(trusted_tag, unsigned dimension, std::vector<Vertex> sorted_members)
    : dimension_(dimension), members_(std::move(sorted_members)) {}

bool VertexFamily::contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

std::size_t VertexFamily::index_of(Vertex v) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) return members_.size();
    return static_cast<std::size_t>(it - members_.begin());
}

unsigned VertexFamily::max_set_size() const {
    unsigned t = 0;
    for (Vertex v : members_) t = std::max(t, v.size());
    return t;
}

bool VertexFamily::is_down_closed() const {
    for (Vertex v : members_)
        for (unsigned j : v.elements())
            if (!contains(v.without(j))) return false;
    return true;
}

bool VertexFamily::is_subset_of(const VertexFamily& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

VertexFamily VertexFamily::with_dimension(unsigned dimension) const {
    return VertexFamily(dimension, members_);
}

std::string VertexFamily::to_string() const {
    std::string out = "{";
    for (std::size_t k = 0; k < members_.size(); ++k) {
        if (k) out += ", ";
        out += members_[k].to_string();
    }
    return out + "}";
}

bool canonical_less(const VertexFamily& a, const VertexFamily& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

VertexFamily initial_segment(std::uint64_t n, unsigned d) {
    check_dimension(d);
    if (d < 64 && n > (std::uint64_t{1} << d))
        throw precondition_error("initial segment longer than 2^d");
    if (n > kMaxMaterializedFamily) throw precondition_error("initial segment too large to materialize");
    std::vector<Vertex> members;
    members.reserve(n);
    for (std::uint64_t m = 0; m < n; ++m) members.push_back(Vertex::from_mask(m));
    return VertexFamily(VertexFamily::trusted_tag{}, d, std::move(members));
}

std::uint64_t hamming_ball_size(unsigned d, unsigned radius) {
    std::uint64_t total = 0;
    std::uint64_t binom = 1;  // C(d, j)
    for (unsigned j = 0; j <= radius && j <= d; ++j) {
        if (j > 0) {
            // C(d, j) = C(d, j-1) * (d-j+1) / j, exact in 128 bits
            unsigned __int128 next = static_cast<unsigned __int128>(binom) * (d - j + 1) / j;
            if (next > UINT64_MAX) return UINT64_MAX;
            binom = static_cast<std::uint64_t>(next);
        }
        if (total > UINT64_MAX - binom) return UINT64_MAX;
        total += binom;
    }
    return total;
}

VertexFamily hamming_ball(unsigned d, unsigned radius) {
    check_dimension(d);
    if (radius > d) throw precondition_error("Hamming ball radius exceeds dimension");
    if (hamming_ball_size(d, radius) > kMaxMaterializedFamily)
        throw precondition_error("Hamming ball too large to materialize");
    std::vector<Vertex> members;
    members.reserve(hamming_ball_size(d, radius));
    std::function<void(unsigned, std::uint64_t, unsigned)> grow = [&](unsigned next_bit, std::uint64_t mask,
                                                                       unsigned used) {
        members.push_back(Vertex::from_mask(mask));
        if (used == radius) return;
        for (unsigned b = next_bit; b < d; ++b) grow(b + 1, mask | (std::uint64_t{1} << b), used + 1);
    };
    grow(0, 0, 0);
    std::sort(members.begin(), members.end());
    return VertexFamily(VertexFamily::trusted_tag{}, d, std::move(members));
}

VertexFamily full_cube(unsigned d) {
    check_dimension(d);
    if (d > 26) throw precondition_error("full cube too large to materialize");
    return initial_segment(std::uint64_t{1} << d, d);
}

}  // namespace cubespec
