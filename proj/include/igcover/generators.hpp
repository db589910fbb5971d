#pragma once

#include <cstdint>
#include <vector>

#include "igcover/bounds.hpp"
#include "igcover/graph.hpp"

namespace igcover {

inline Graph gen_path(int n) {
    if (n < 0) throw parameter_error("path length must be non-negative");
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    return Graph(n, std::move(edges));
}

/// Disjoint union of paths; lengths are vertex counts and each path
/// occupies a contiguous index block in input order.
inline Graph gen_forest_of_paths(const std::vector<int>& lengths) {
    std::vector<Edge> edges;
    int offset = 0;
    for (int len : lengths) {
        if (len < 0) throw parameter_error("path length must be non-negative");
        for (int j = 1; j < len; ++j) edges.emplace_back(offset + j - 1, offset + j);
        offset += len;
    }
    return Graph(offset, std::move(edges));
}

/// Caterpillar with spine vertices 0..spine_len-1 and leaf_counts[i]
/// leaves hanging off spine vertex i, numbered after the spine.
inline Graph gen_caterpillar(int spine_len, const std::vector<int>& leaf_counts) {
    if (spine_len < 0) throw parameter_error("spine length must be non-negative");
    if (static_cast<int>(leaf_counts.size()) != spine_len)
        throw parameter_error("need one leaf count per spine vertex");
    std::vector<Edge> edges;
    int next = spine_len;
    for (int i = 0; i < spine_len; ++i) {
        if (i > 0) edges.emplace_back(i - 1, i);
        if (leaf_counts[i] < 0) throw parameter_error("leaf counts must be non-negative");
        for (int j = 0; j < leaf_counts[i]; ++j) edges.emplace_back(i, next++);
    }
    return Graph(next, std::move(edges));
}

inline Graph gen_clique(int n) {
    if (n < 0) throw parameter_error("clique order must be non-negative");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

/// T_h: a root joined to the roots of three copies of T_{h-1}; T_0 is
/// a single vertex. Vertex 0 is the root and each copy occupies a
/// contiguous block, so indexing is deterministic. T_h has
/// (3^(h+1)-1)/2 vertices.
inline Graph gen_ternary_tree(int height) {
    if (height < 0) throw parameter_error("height must be non-negative");
    if (height == 0) return Graph(1);
    const Graph sub = gen_ternary_tree(height - 1);
    const int block = sub.order();
    std::vector<Edge> edges;
    for (int copy = 0; copy < 3; ++copy) {
        const int offset = 1 + copy * block;
        edges.emplace_back(0, offset);
        for (const auto& [u, v] : sub.edges()) edges.emplace_back(offset + u, offset + v);
    }
    return Graph(1 + 3 * block, std::move(edges));
}

/// Random graph of degeneracy at most c: each vertex v >= 1 picks up
/// to min(c, v) distinct back-edges, so every suffix of the insertion
/// order has a vertex of degree <= c. Fully determined by the seed.
inline Graph gen_random_degenerate(int n, int c, std::uint64_t seed) {
    if (n < 0) throw parameter_error("vertex count must be non-negative");
    if (c < 0) throw parameter_error("degeneracy bound must be non-negative");
    detail::Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        const int cap = std::min(c, v);
        const int picks = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(cap) + 1));
        std::vector<Vertex> pool(static_cast<std::size_t>(v));
        for (Vertex u = 0; u < v; ++u) pool[u] = u;
        for (int j = 0; j < picks; ++j) {
            const auto pick = j + static_cast<int>(rng.next_below(pool.size() - j));
            std::swap(pool[j], pool[pick]);
            edges.emplace_back(pool[j], v);
        }
    }
    return Graph(n, std::move(edges));
}

} // namespace igcover
