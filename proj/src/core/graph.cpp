#include "cubespec/graph.hpp"

#include <algorithm>

namespace cubespec {

EdgeSet induced_edges(const VertexFamily& family) {
    EdgeSet edges;
    for (Vertex s : family)
        for (unsigned j = 1; j <= family.dimension(); ++j)
            if (!s.contains(j) && family.contains(s.with(j))) edges.push_back({s, s.with(j)});
    std::sort(edges.begin(), edges.end());
    return edges;
}

InducedGraph::InducedGraph(const VertexFamily& family) {
    const std::size_t n = family.size();
    offsets_.assign(n + 1, 0);
    for (std::size_t k = 0; k < n; ++k) {
        const Vertex s = family[k];
        for (unsigned j = 1; j <= family.dimension(); ++j) {
            const std::size_t idx = family.index_of(s.flipped(j));
            if (idx < n) neighbours_.push_back(static_cast<std::uint32_t>(idx));
        }
        offsets_[k + 1] = neighbours_.size();
    }
}

std::size_t InducedGraph::max_degree() const {
    std::size_t best = 0;
    for (std::size_t k = 0; k < order(); ++k) best = std::max(best, degree(k));
    return best;
}

InducedGraph::Ell InducedGraph::ell() const {
    Ell out;
    const std::size_t n = order();
    out.width = max_degree();
    out.columns.assign(out.width * n, static_cast<std::int32_t>(n));
    for (std::size_t k = 0; k < n; ++k) {
        auto nb = neighbours(k);
        for (std::size_t s = 0; s < nb.size(); ++s) out.columns[s * n + k] = static_cast<std::int32_t>(nb[s]);
    }
    return out;
}

DegreeProfile degree_profile(const VertexFamily& family) {
    const InducedGraph graph(family);
    DegreeProfile p;
    p.degrees.resize(graph.order());
    for (std::size_t k = 0; k < graph.order(); ++k) {
        p.degrees[k] = graph.degree(k);
        p.max_degree = std::max(p.max_degree, p.degrees[k]);
    }
    for (std::size_t k = 0; k < graph.order(); ++k) {
        std::size_t sum = 0;
        for (auto nb : graph.neighbours(k)) sum += p.degrees[nb];
        p.max_neighbour_degree_sum = std::max(p.max_neighbour_degree_sum, sum);
    }
    return p;
}

}  // namespace cubespec
