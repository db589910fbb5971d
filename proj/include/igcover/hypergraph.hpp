#pragma once

#include <optional>
#include <vector>

#include "igcover/graph.hpp"

namespace igcover {

/// Vertex set [0..n) plus a duplicate-free family of hyperedges, each
/// of size >= 2. Singleton hyperedges are rejected: edges model the
/// operand sets of operations on at least two items.
class Hypergraph {
public:
    Hypergraph() = default;

    Hypergraph(int n, std::vector<VertexSet> edges) : n_(n) {
        if (n < 0) throw parameter_error("vertex count must be non-negative");
        for (auto& e : edges) {
            e = canonical_set(std::move(e));
            if (e.size() < 2)
                throw invalid_instance_error("hyperedges must contain at least 2 vertices");
            if (e.front() < 0 || e.back() >= n)
                throw invalid_vertex_error("hyperedge vertex out of range");
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges_ = std::move(edges);
    }

    int order() const { return n_; }
    const std::vector<VertexSet>& hyperedges() const { return edges_; }

private:
    int n_ = 0;
    std::vector<VertexSet> edges_;
};

/// Candidate cover of a hypergraph: p subsets plus an optional
/// per-subset size cap K.
struct HyperCover {
    std::vector<VertexSet> subsets;
    std::optional<int> size_cap;
};

/// Drops every hyperedge strictly contained in another. Idempotent,
/// and covering semantics are unchanged: a subset containing a
/// superedge contains all its subedges.
inline Hypergraph normalize(const Hypergraph& h) {
    const auto& edges = h.hyperedges();
    std::vector<VertexSet> kept;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < edges.size() && !dominated; ++j)
            dominated = i != j && edges[i].size() < edges[j].size() &&
                        std::includes(edges[j].begin(), edges[j].end(), edges[i].begin(),
                                      edges[i].end());
        if (!dominated) kept.push_back(edges[i]);
    }
    return Hypergraph(h.order(), std::move(kept));
}

/// The hyperedges contained in no subset; empty result means the cover
/// is valid. Cap violations are errors, not violations.
inline std::vector<VertexSet> validate_hypercover(const Hypergraph& h, const HyperCover& c) {
    for (std::size_t i = 0; i < c.subsets.size(); ++i) {
        for (Vertex v : c.subsets[i])
            if (v < 0 || v >= h.order())
                throw invalid_cover_error("subset " + std::to_string(i + 1) +
                                          " references vertex " + std::to_string(v) +
                                          " outside the hypergraph");
        if (c.size_cap && static_cast<int>(c.subsets[i].size()) > *c.size_cap)
            throw cap_violation_error("subset " + std::to_string(i + 1) + " has " +
                                      std::to_string(c.subsets[i].size()) +
                                      " vertices, above the cap of " +
                                      std::to_string(*c.size_cap));
    }
    std::vector<VertexSet> uncovered;
    for (const auto& e : h.hyperedges()) {
        bool covered = false;
        for (const auto& subset : c.subsets) {
            if (std::includes(subset.begin(), subset.end(), e.begin(), e.end())) {
                covered = true;
                break;
            }
        }
        if (!covered) uncovered.push_back(e);
    }
    return uncovered;
}

} // namespace igcover
