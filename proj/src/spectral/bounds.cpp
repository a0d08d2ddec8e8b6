#include "cubespec/bounds.hpp"

#include <cmath>

#include "cubespec/graph.hpp"

namespace cubespec {

LevelBound level_bound(const VertexFamily& family) {
    LevelBound out;
    const unsigned d = family.dimension();
    out.max_set_size = family.max_set_size();
    out.max_degree = degree_profile(family).max_degree;
    out.applicable = 2 * out.max_set_size <= d && out.max_degree <= d;
    out.value = 2.0 * std::sqrt(static_cast<double>(out.max_set_size) * d);
    return out;
}

double hamming_upper_bound(std::uint64_t d, std::uint64_t radius) {
    if (radius < 1 || 2 * radius > d) throw precondition_error("hamming upper bound needs 1 <= i <= d/2");
    return 2.0 * std::sqrt(static_cast<double>(radius) * static_cast<double>(d + 1 - radius));
}

double hamming_walk_lower_bound(std::uint64_t d, std::uint64_t radius, std::uint64_t k) {
    if (k < 1 || k >= radius || 2 * radius > d)
        throw precondition_error("walk lower bound needs 1 <= k < i <= d/2");
    const double kk = static_cast<double>(k);
    const double r = static_cast<double>(radius - k);
    const double log_catalan = std::lgamma(2 * kk + 1) - 2 * std::lgamma(kk + 1) - std::log(kk + 1);
    const double log_moves = kk * std::log(r * (static_cast<double>(d) + 1 - r));
    return std::exp((log_catalan + log_moves) / (2 * kk));
}

ClassicBounds classic_bounds(const VertexFamily& family) {
    ClassicBounds out;
    const auto profile = degree_profile(family);
    std::size_t degree_sum = 0;
    for (auto deg : profile.degrees) degree_sum += deg;
    out.edges = degree_sum / 2;
    out.max_neighbour_degree_sum = profile.max_neighbour_degree_sum;

    const double m = static_cast<double>(out.edges);
    std::uint64_t k = 1;
    while (k * (k - 1) / 2 < out.edges) ++k;
    out.brualdi_hoffman = static_cast<double>(k - 1);
    out.stanley = (-1.0 + std::sqrt(8 * m + 1)) / 2;
    out.fms = std::sqrt(static_cast<double>(out.max_neighbour_degree_sum));
    out.nosal = std::sqrt(m);
    return out;
}

double star_value(std::uint64_t n) {
    if (n < 1) throw precondition_error("star needs at least one vertex");
    return std::sqrt(static_cast<double>(n - 1));
}

}  // namespace cubespec
