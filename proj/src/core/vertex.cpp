#include "cubespec/vertex.hpp"

namespace cubespec {

Vertex Vertex::from_elements(std::initializer_list<unsigned> elements) {
    return from_elements(std::vector<unsigned>(elements));
}

Vertex Vertex::from_elements(const std::vector<unsigned>& elements) {
    std::uint64_t mask = 0;
    for (unsigned j : elements) {
        if (j < 1 || j > kMaxDimension)
            throw precondition_error("vertex element " + std::to_string(j) + " outside 1..64");
        mask |= bit(j);
    }
    return Vertex(mask);
}

Vertex Vertex::prefix(unsigned k) {
    if (k > kMaxDimension) throw precondition_error("prefix length exceeds 64");
    return Vertex(k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1);
}

std::vector<unsigned> Vertex::elements() const {
    std::vector<unsigned> out;
    out.reserve(size());
    for (std::uint64_t m = mask_; m != 0; m &= m - 1)
        out.push_back(1u + static_cast<unsigned>(std::countr_zero(m)));
    return out;
}

std::string Vertex::to_string() const {
    std::string out = "{";
    bool first = true;
    for (unsigned j : elements()) {
        if (!first) out += ',';
        out += std::to_string(j);
        first = false;
    }
    out += '}';
    return out;
}

std::string Vertex::to_binary(unsigned d) const {
    std::string out(d, '0');
    for (unsigned j = 1; j <= d; ++j)
        if (contains(j)) out[j - 1] = '1';
    return out;
}

Vertex Vertex::parse_binary(const std::string& text) {
    if (text.size() > kMaxDimension) throw precondition_error("binary vertex longer than 64");
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < text.size(); ++k) {
        if (text[k] == '1')
            mask |= std::uint64_t{1} << k;
        else if (text[k] != '0')
            throw precondition_error("invalid character in binary vertex '" + text + "'");
    }
    return Vertex(mask);
}

}  // namespace cubespec
