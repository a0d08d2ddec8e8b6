#include "cubespec/walks.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "cubespec/graph.hpp"

namespace cubespec {

namespace {

using BigInt = boost::multiprecision::cpp_int;

/// Σ_u ||A^k e_u||² = tr(A^{2k}) with checked 64-bit arithmetic; empty on
/// overflow.
std::optional<std::uint64_t> trace_u64(const InducedGraph& g, unsigned k) {
    const std::size_t n = g.order();
    std::vector<std::uint64_t> cur(n), next(n);
    std::uint64_t total = 0;
    for (std::size_t start = 0; start < n; ++start) {
        std::fill(cur.begin(), cur.end(), 0);
        cur[start] = 1;
        for (unsigned step = 0; step < k; ++step) {
            for (std::size_t v = 0; v < n; ++v) {
                std::uint64_t acc = 0;
                for (auto w : g.neighbours(v))
                    if (__builtin_add_overflow(acc, cur[w], &acc)) return std::nullopt;
                next[v] = acc;
            }
            std::swap(cur, next);
        }
        for (auto c : cur) {
            std::uint64_t sq = 0;
            if (__builtin_mul_overflow(c, c, &sq) || __builtin_add_overflow(total, sq, &total)) return std::nullopt;
        }
    }
    // Leave headroom so the big-integer path takes over well before 2^64.
    if (total > (std::uint64_t{1} << 62)) return std::nullopt;
    return total;
}

BigInt trace_big(const InducedGraph& g, unsigned k) {
    const std::size_t n = g.order();
    std::vector<BigInt> cur(n), next(n);
    BigInt total = 0;
    for (std::size_t start = 0; start < n; ++start) {
        for (auto& c : cur) c = 0;
        cur[start] = 1;
        for (unsigned step = 0; step < k; ++step) {
            for (std::size_t v = 0; v < n; ++v) {
                BigInt acc = 0;
                for (auto w : g.neighbours(v)) acc += cur[w];
                next[v] = std::move(acc);
            }
            std::swap(cur, next);
        }
        for (const auto& c : cur) total += c * c;
    }
    return total;
}

/// log2 of a positive big integer, accurate to double precision.
double log2_big(const BigInt& x) {
    const auto bits = boost::multiprecision::msb(x);
    if (bits < 1000) return std::log2(x.convert_to<double>());
    const BigInt top = x >> (bits - 60);
    return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 60);
}

}  // namespace

WalkTraceBound walk_trace_bound(const VertexFamily& family, unsigned k) {
    if (k < 1) throw precondition_error("walk length parameter k must be at least 1");
    const InducedGraph graph(family);
    WalkTraceBound out;
    out.k = k;
    if (auto small = trace_u64(graph, k)) {
        const std::uint64_t half = *small / 2;
        out.half_trace = std::to_string(half);
        out.value = half == 0 ? 0.0 : std::pow(static_cast<double>(half), 1.0 / (2.0 * k));
        return out;
    }
    out.used_big_integers = true;
    const BigInt half = trace_big(graph, k) / 2;
    out.half_trace = half.str();
    out.value = half == 0 ? 0.0 : std::exp2(log2_big(half) / (2.0 * k));
    return out;
}

PathCycleCounts count_p2_c4(const VertexFamily& family) {
    PathCycleCounts out;
    const unsigned d = family.dimension();
    std::size_t corner_count = 0;
    std::size_t even = 0;
    for (Vertex s : family) {
        std::size_t deg = 0;
        for (unsigned a = 1; a <= d; ++a) deg += family.contains(s.flipped(a)) ? 1 : 0;
        out.edges += deg;
        out.paths2 += deg * (deg - (deg > 0 ? 1 : 0)) / 2;
        if (s.size() % 2 == 0) ++even;
        for (unsigned a = 1; a <= d; ++a) {
            if (!family.contains(s.flipped(a))) continue;
            for (unsigned b = a + 1; b <= d; ++b)
                if (family.contains(s.flipped(b)) && family.contains(s.flipped(a).flipped(b))) ++corner_count;
        }
    }
    out.edges /= 2;
    out.cycles4 = corner_count / 4;
    const std::size_t odd = family.size() - even;
    out.larger_side = std::max(even, odd);
    out.smaller_side = std::min(even, odd);
    const std::size_t l = out.smaller_side;
    out.cycle_bound = l * (l - (l > 0 ? 1 : 0)) / 2;
    out.edge_bound = 2 * out.cycle_bound + out.larger_side;
    out.cycle_bound_holds = out.cycles4 <= out.cycle_bound;
    out.edge_bound_holds = out.edges <= out.edge_bound;
    return out;
}

}  // namespace cubespec
