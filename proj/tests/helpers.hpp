#pragma once

// Independent brute-force oracles and instance generators for the test
// suites. Everything here recomputes results from first principles and
// stays off the library's optimized code paths.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include <igcover/igcover.hpp>

namespace testutil {

using igcover::Edge;
using igcover::Graph;
using igcover::Vertex;
using igcover::VertexSet;

/// Minimum over all k^e edge colorings of the largest color class's
/// vertex count. Equals the Cover(G,k) optimum: padding never helps,
/// and every coloring is a cover.
inline int brute_cover_opt(const Graph& g, int k) {
    const auto& edges = g.edges();
    const int e = static_cast<int>(edges.size());
    if (e == 0) return 0;
    int best = g.order() + 1;
    std::vector<int> color(static_cast<std::size_t>(e), 0);
    while (true) {
        int worst = 0;
        for (int c = 0; c < k; ++c) {
            std::vector<char> in_class(static_cast<std::size_t>(g.order()), 0);
            int size = 0;
            for (int i = 0; i < e; ++i) {
                if (color[i] != c) continue;
                for (Vertex v : {edges[i].first, edges[i].second})
                    if (!in_class[v]) {
                        in_class[v] = 1;
                        ++size;
                    }
            }
            worst = std::max(worst, size);
        }
        best = std::min(best, worst);

        int pos = 0;
        while (pos < e && color[pos] == k - 1) color[pos++] = 0;
        if (pos == e) break;
        ++color[pos];
    }
    return best;
}

inline bool removal_disconnects(const Graph& g, const std::vector<char>& removed) {
    int start = -1, kept = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!removed[v]) {
            ++kept;
            if (start < 0) start = v;
        }
    if (kept <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<Vertex> stack{start};
    seen[start] = 1;
    int reached = 0;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        ++reached;
        for (Vertex u : g.neighbors(v))
            if (!removed[u] && !seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
    }
    return reached < kept;
}

/// Smallest number of vertices whose removal disconnects g or leaves
/// at most one vertex, by subset enumeration.
inline int brute_vertex_connectivity(const Graph& g) {
    const int n = g.order();
    for (int size = 0; size < n; ++size) {
        std::vector<char> removed(static_cast<std::size_t>(n), 0);
        std::function<bool(int, int)> pick = [&](int from, int left) {
            if (left == 0) return removal_disconnects(g, removed);
            for (Vertex v = from; v < n; ++v) {
                removed[v] = 1;
                if (pick(v + 1, left - 1)) return true;
                removed[v] = 0;
            }
            return false;
        };
        if (pick(0, size)) return size;
    }
    return n - 1;
}

/// Maximum over nonempty vertex subsets of the induced minimum degree.
inline int brute_degeneracy(const Graph& g) {
    const int n = g.order();
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int min_deg = n;
        for (Vertex v = 0; v < n; ++v) {
            if (!(mask & (1u << v))) continue;
            int deg = 0;
            for (Vertex u : g.neighbors(v))
                if (mask & (1u << u)) ++deg;
            min_deg = std::min(min_deg, deg);
        }
        best = std::max(best, min_deg);
    }
    return best;
}

/// Connected tree whose non-leaf vertices induce a path.
inline bool brute_is_caterpillar(const Graph& g) {
    const int n = g.order();
    if (n == 0) return false;
    if (g.edge_count() != n - 1 || !igcover::is_connected(g)) return false;
    VertexSet core;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) != 1) core.push_back(v);
    if (core.size() <= 1) return true;
    const Graph sub = igcover::induced_subgraph(g, core).graph;
    if (!igcover::is_connected(sub)) return false;
    int endpoints = 0;
    for (Vertex v = 0; v < sub.order(); ++v) {
        if (sub.degree(v) > 2) return false;
        if (sub.degree(v) <= 1) ++endpoints;
    }
    return endpoints == 2;
}

/// max over S of |S| + |N(S)|, recomputed with the set-based
/// neighborhood primitive.
inline int brute_neighborhood_max(const Graph& g) {
    const int n = g.order();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        VertexSet s;
        for (Vertex v = 0; v < n; ++v)
            if (mask & (1u << v)) s.push_back(v);
        best = std::max(best,
                        static_cast<int>(s.size() + igcover::neighborhood(g, s).size()));
    }
    return best;
}

inline Graph random_graph(int n, int percent, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % 100) < percent) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

/// Random recursive tree: vertex v >= 1 attaches to a random earlier
/// vertex.
inline Graph random_tree(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.emplace_back(static_cast<Vertex>(rng() % static_cast<std::uint64_t>(v)), v);
    return Graph(n, std::move(edges));
}

/// Decodes a Pruefer sequence of length n-2 into its labeled tree.
inline Graph prufer_tree(int n, const std::vector<int>& code) {
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int v : code) ++degree[v];
    std::vector<Edge> edges;
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (int v : code) {
        Vertex leaf = -1;
        for (Vertex u = 0; u < n && leaf < 0; ++u)
            if (!removed[u] && degree[u] == 1) leaf = u;
        edges.emplace_back(leaf, v);
        removed[leaf] = 1;
        --degree[v];
    }
    VertexSet rest;
    for (Vertex u = 0; u < n; ++u)
        if (!removed[u]) rest.push_back(u);
    edges.emplace_back(rest[0], rest[1]);
    return Graph(n, std::move(edges));
}

/// Calls fn with every labeled graph on exactly n vertices.
inline void for_each_graph(int n, const std::function<void(const Graph&)>& fn) {
    std::vector<Edge> all_pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
    const int pairs = static_cast<int>(all_pairs.size());
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        std::vector<Edge> edges;
        for (int i = 0; i < pairs; ++i)
            if (mask & (1u << i)) edges.push_back(all_pairs[i]);
        fn(Graph(n, std::move(edges)));
    }
}

/// Every caterpillar from spine lengths 1..max_spine with 0..max_leaf
/// leaves per spine vertex.
inline std::vector<Graph> caterpillar_family(int max_spine, int max_leaf) {
    std::vector<Graph> family;
    for (int spine = 1; spine <= max_spine; ++spine) {
        std::vector<int> leaves(static_cast<std::size_t>(spine), 0);
        while (true) {
            family.push_back(igcover::gen_caterpillar(spine, leaves));
            int pos = 0;
            while (pos < spine && leaves[pos] == max_leaf) leaves[pos++] = 0;
            if (pos == spine) break;
            ++leaves[pos];
        }
    }
    return family;
}

} // namespace testutil
