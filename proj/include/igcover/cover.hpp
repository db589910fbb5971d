#pragma once

#include <algorithm>
#include <vector>

#include "igcover/graph.hpp"

namespace igcover {

/// A candidate solution to Cover(G,k): an ordered list of vertex
/// subsets, one slot per allowed subgraph (empty slots permitted).
/// host_order records the order of the graph it was built for.
struct Cover {
    int host_order = 0;
    std::vector<VertexSet> subsets;
};

/// An edge of the host graph covered by no subset.
struct CoverViolation {
    Edge edge;
    bool operator==(const CoverViolation&) const = default;
};

/// Exactly the edges of g with no subset containing both endpoints;
/// empty result means c is a feasible cover.
inline std::vector<CoverViolation> validate_cover(const Graph& g, const Cover& c) {
    if (c.host_order != g.order())
        throw invalid_cover_error("cover built for a graph of order " +
                                  std::to_string(c.host_order) + ", not " +
                                  std::to_string(g.order()));
    const std::size_t n = static_cast<std::size_t>(g.order());
    std::vector<std::vector<char>> member(c.subsets.size(), std::vector<char>(n, 0));
    for (std::size_t i = 0; i < c.subsets.size(); ++i)
        for (Vertex v : c.subsets[i]) {
            if (v < 0 || v >= g.order())
                throw invalid_cover_error("subset " + std::to_string(i + 1) +
                                          " references vertex " + std::to_string(v) +
                                          " outside the host graph");
            member[i][v] = 1;
        }
    std::vector<CoverViolation> violations;
    for (const auto& e : g.edges()) {
        bool covered = false;
        for (std::size_t i = 0; i < c.subsets.size() && !covered; ++i)
            covered = member[i][e.first] && member[i][e.second];
        if (!covered) violations.push_back({e});
    }
    return violations;
}

inline bool is_valid_cover(const Graph& g, const Cover& c) {
    return validate_cover(g, c).empty();
}

/// max_i |V_i|, the minimized objective. Zero iff every subset is empty.
inline int cover_cost(const Cover& c) {
    std::size_t best = 0;
    for (const auto& s : c.subsets) best = std::max(best, s.size());
    return static_cast<int>(best);
}

/// Pads every subset up to the cover's cost with the smallest-index
/// vertices it is still missing, so all subsets reach equal
/// cardinality. Vertices may repeat across subsets; cost and validity
/// are unchanged, and the operation is idempotent.
inline Cover pad_equalize(const Graph& g, const Cover& c) {
    if (!is_valid_cover(g, c)) throw invalid_cover_error("pad_equalize requires a valid cover");
    const std::size_t target = static_cast<std::size_t>(cover_cost(c));
    Cover out = c;
    for (auto& subset : out.subsets) {
        if (subset.size() >= target) continue;
        std::vector<char> present(static_cast<std::size_t>(g.order()), 0);
        for (Vertex v : subset) present[v] = 1;
        for (Vertex v = 0; v < g.order() && subset.size() < target; ++v)
            if (!present[v]) subset.push_back(v);
        subset = canonical_set(std::move(subset));
    }
    return out;
}

} // namespace igcover
