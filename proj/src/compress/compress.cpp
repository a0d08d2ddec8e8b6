#include "cubespec/compress.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cubespec/kernels.hpp"

namespace cubespec {

namespace {

void check_uv(unsigned d, Vertex u, Vertex w) {
    if (!u.disjoint(w)) throw precondition_error("compression sets U and V overlap");
    if (!u.within(d) || !w.within(d)) throw precondition_error("compression sets not inside [d]");
}

void check_coord(unsigned d, unsigned i) {
    if (i < 1 || i > d) throw precondition_error("coordinate " + std::to_string(i) + " outside 1.." + std::to_string(d));
}

/// r-th vertex (0-based, binary order) of the half {S : (i ∈ S) == upper} of Q_d.
std::uint64_t half_position(std::uint64_t r, unsigned i, bool upper) {
    const unsigned shift = i - 1;
    const std::uint64_t low_mask = shift == 0 ? 0 : (std::uint64_t{1} << shift) - 1;
    const std::uint64_t low = r & low_mask;
    const std::uint64_t high = shift == 63 ? 0 : (r >> shift) << (shift + 1);
    return high | (upper ? (std::uint64_t{1} << shift) : 0) | low;
}

using Potential = __int128;

Potential family_potential(const VertexFamily& f) {
    Potential p = 0;
    for (Vertex v : f) p += static_cast<Potential>(v.mask());
    return p;
}

struct RankTable {
    std::vector<double> values;  // distinct, ascending, always contains 0
    std::ptrdiff_t zero = 0;

    explicit RankTable(const WeightVector& v) {
        values = v.sorted_weights();
        values.push_back(0.0);
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        zero = std::lower_bound(values.begin(), values.end(), 0.0) - values.begin();
    }
    std::ptrdiff_t rank(double x) const {
        return (std::lower_bound(values.begin(), values.end(), x) - values.begin()) - zero;
    }
};

Potential vector_potential(const WeightVector& v, const RankTable& ranks) {
    Potential p = 0;
    for (const auto& [s, w] : v.entries()) p += static_cast<Potential>(s.mask()) * ranks.rank(w);
    return p;
}

}  // namespace

std::string CompressionStep::to_string() const {
    switch (kind) {
        case Kind::down: return "C_{" + std::to_string(coord) + ",0}";
        case Kind::shift: return "C_{" + std::to_string(from) + "," + std::to_string(to) + "}";
        case Kind::binary: return "C_" + std::to_string(coord);
    }
    return "?";
}

WeightVector compress_vector_uv(const WeightVector& v, Vertex u, Vertex w) {
    check_uv(v.dimension(), u, w);
    const Vertex both = u | w;
    std::set<Vertex> upper_sides;
    for (const auto& [s, weight] : v.entries()) {
        if (w.subset_of(s) && u.disjoint(s))
            upper_sides.insert(s);
        else if (u.subset_of(s) && w.disjoint(s))
            upper_sides.insert(s ^ both);
    }
    WeightVector out = v;
    for (Vertex x : upper_sides) {
        const Vertex y = x ^ both;
        const double a = v[x];
        const double b = v[y];
        if (b > a) {
            out.set(x, b);
            out.set(y, a);
        }
    }
    return out;
}

VertexFamily compress_family_uv(const VertexFamily& family, Vertex u, Vertex w) {
    return compress_vector_uv(WeightVector::indicator(family), u, w).support().with_dimension(family.dimension());
}

WeightVector binary_compression(const WeightVector& v, unsigned i) {
    const unsigned d = v.dimension();
    check_coord(d, i);
    const std::uint64_t half_size = std::uint64_t{1} << (d - 1);
    WeightVector out(d);
    for (bool upper : {false, true}) {
        std::vector<double> positive;
        std::vector<double> negative;
        for (const auto& [s, w] : v.entries()) {
            if (s.contains(i) != upper) continue;
            (w > 0 ? positive : negative).push_back(w);
        }
        std::sort(positive.begin(), positive.end(), std::greater<>());
        std::sort(negative.begin(), negative.end(), std::greater<>());
        for (std::size_t r = 0; r < positive.size(); ++r)
            out.set(Vertex::from_mask(half_position(r, i, upper)), positive[r]);
        const std::uint64_t first_negative = half_size - negative.size();
        for (std::size_t r = 0; r < negative.size(); ++r)
            out.set(Vertex::from_mask(half_position(first_negative + r, i, upper)), negative[r]);
    }
    return out;
}

WeightVector apply_step(const WeightVector& v, const CompressionStep& step) {
    switch (step.kind) {
        case CompressionStep::Kind::down:
            check_coord(v.dimension(), step.coord);
            return compress_vector_uv(v, Vertex::from_elements({step.coord}), Vertex{});
        case CompressionStep::Kind::shift:
            check_coord(v.dimension(), step.from);
            check_coord(v.dimension(), step.to);
            return compress_vector_uv(v, Vertex::from_elements({step.from}), Vertex::from_elements({step.to}));
        case CompressionStep::Kind::binary: return binary_compression(v, step.coord);
    }
    throw std::logic_error("unknown compression step");
}

VertexFamily apply_step(const VertexFamily& family, const CompressionStep& step) {
    return apply_step(WeightVector::indicator(family), step).support().with_dimension(family.dimension());
}

double rayleigh(const WeightVector& v) {
    const unsigned d = v.dimension();
    const std::size_t support = v.support_size();
    if (support < 2) return 0.0;
    const bool dense = d <= 26 && (std::uint64_t{1} << d) <= std::max<std::uint64_t>(std::uint64_t{1} << 16, 64 * support);
    if (dense) {
        std::vector<double> values(std::size_t{1} << d, 0.0);
        for (const auto& [s, w] : v.entries()) values[s.mask()] = w;
        return 2.0 * simd::active_kernels().cube_edge_sum(values.data(), d);
    }
    double total = 0.0;
    for (const auto& [s, w] : v.entries())
        for (unsigned j = 1; j <= d; ++j)
            if (!s.contains(j)) total += w * v[s.with(j)];
    return 2.0 * total;
}

std::vector<CompressionStep> compression_schedule(unsigned d) {
    std::vector<CompressionStep> steps;
    for (unsigned i = 1; i <= d; ++i) steps.push_back(CompressionStep::down_step(i));
    for (unsigned i = 1; i <= d; ++i)
        for (unsigned j = i + 1; j <= d; ++j) steps.push_back(CompressionStep::shift_step(j, i));
    return steps;
}

CompressionRun<VertexFamily> fully_compress(const VertexFamily& family) {
    CompressionRun<VertexFamily> run{family, {}, 0};
    const auto schedule = compression_schedule(family.dimension());
    Potential potential = family_potential(run.result);
    for (bool changed = true; changed;) {
        changed = false;
        ++run.sweeps;
        for (const auto& step : schedule) {
            VertexFamily next = apply_step(run.result, step);
            if (next == run.result) continue;
            const Potential p = family_potential(next);
            if (p >= potential) throw std::logic_error("compression potential did not decrease at " + step.to_string());
            potential = p;
            run.result = std::move(next);
            run.steps.push_back(step);
            changed = true;
        }
    }
    return run;
}

CompressionRun<WeightVector> fully_compress(const WeightVector& v) {
    CompressionRun<WeightVector> run{v, {}, 0};
    const auto schedule = compression_schedule(v.dimension());
    const RankTable ranks(v);
    Potential potential = vector_potential(run.result, ranks);
    for (bool changed = true; changed;) {
        changed = false;
        ++run.sweeps;
        for (const auto& step : schedule) {
            WeightVector next = apply_step(run.result, step);
            if (next == run.result) continue;
            const Potential p = vector_potential(next, ranks);
            if (p >= potential) throw std::logic_error("compression potential did not decrease at " + step.to_string());
            potential = p;
            run.result = std::move(next);
            run.steps.push_back(step);
            changed = true;
        }
    }
    return run;
}

namespace {

template <class T>
CompressedCheck check_fixpoint(const T& x, unsigned d) {
    std::vector<CompressionStep> order;
    for (unsigned i = 1; i <= d; ++i)
        for (unsigned j = i + 1; j <= d; ++j) order.push_back(CompressionStep::shift_step(j, i));
    for (unsigned i = 1; i <= d; ++i) order.push_back(CompressionStep::down_step(i));
    for (const auto& step : order)
        if (!(apply_step(x, step) == x)) return {false, step};
    return {};
}

}  // namespace

CompressedCheck is_compressed(const VertexFamily& family) {
    // A 0/1 vector is moved by C_{U,V} exactly when some U-side member has
    // its V-side partner missing, so membership tests suffice here.
    const unsigned d = family.dimension();
    for (unsigned i = 1; i <= d; ++i)
        for (unsigned j = i + 1; j <= d; ++j)
            for (Vertex t : family)
                if (t.contains(j) && !t.contains(i) && !family.contains(t.without(j).with(i)))
                    return {false, CompressionStep::shift_step(j, i)};
    for (unsigned i = 1; i <= d; ++i)
        for (Vertex t : family)
            if (t.contains(i) && !family.contains(t.without(i))) return {false, CompressionStep::down_step(i)};
    return {};
}

CompressedCheck is_compressed(const WeightVector& v) { return check_fixpoint(v, v.dimension()); }

}  // namespace cubespec
