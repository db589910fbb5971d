#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "igcover/errors.hpp"

namespace igcover {

using Vertex = int;

/// A set of vertex indices, kept sorted ascending without duplicates.
using VertexSet = std::vector<Vertex>;

/// An undirected edge, normalized so that first < second.
using Edge = std::pair<Vertex, Vertex>;

inline VertexSet canonical_set(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline bool set_contains(const VertexSet& s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// Simple undirected graph on vertices 0..n-1 with canonical (sorted)
/// edge order and per-vertex sorted neighbor lists. Immutable after
/// construction; duplicate edges are merged, self-loops rejected.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
        if (n < 0) throw parameter_error("vertex count must be non-negative");
    }

    Graph(int n, std::vector<Edge> edge_list) : Graph(n) {
        for (auto& e : edge_list) {
            if (e.first > e.second) std::swap(e.first, e.second);
            if (e.first == e.second)
                throw invalid_vertex_error("self-loop on vertex " + std::to_string(e.first));
            if (e.first < 0 || e.second >= n_)
                throw invalid_vertex_error("edge endpoint out of range: " +
                                           std::to_string(e.first) + "," +
                                           std::to_string(e.second));
        }
        std::sort(edge_list.begin(), edge_list.end());
        edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
        edges_ = std::move(edge_list);
        for (const auto& [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    }

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    const VertexSet& neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(Vertex v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }

    int max_degree() const {
        int d = 0;
        for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
        return d;
    }

    bool has_edge(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_)
            throw invalid_vertex_error("vertex " + std::to_string(v) + " out of range [0, " +
                                       std::to_string(n_) + ")");
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<VertexSet> adj_;
};

inline void check_vertex_set(const Graph& g, const VertexSet& s) {
    for (Vertex v : s) g.check_vertex(v);
}

/// An induced subgraph re-indexed to 0..|s|-1 together with the
/// translation back to the host graph's labels: original[i] is the
/// host vertex that became vertex i.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original;
};

/// G[s]: the subgraph on s with every host edge whose endpoints both
/// lie in s. New indices follow ascending host order.
inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    check_vertex_set(g, s);
    VertexSet members = canonical_set(s);
    std::vector<int> to_new(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < members.size(); ++i) to_new[members[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (to_new[u] >= 0 && to_new[v] >= 0)
            edges.emplace_back(to_new[u], to_new[v]);
    return {Graph(static_cast<int>(members.size()), std::move(edges)), std::move(members)};
}

inline VertexSet translate_back(const VertexSet& s, const std::vector<Vertex>& original) {
    VertexSet out;
    out.reserve(s.size());
    for (Vertex v : s) out.push_back(original[v]);
    return canonical_set(std::move(out));
}

/// Open neighborhood N(s): vertices outside s adjacent to a member of s.
inline VertexSet neighborhood(const Graph& g, const VertexSet& s) {
    check_vertex_set(g, s);
    std::vector<char> in_s(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : s) in_s[v] = 1;
    std::vector<char> hit(static_cast<std::size_t>(g.order()), 0);
    VertexSet out;
    for (Vertex v : s)
        for (Vertex u : g.neighbors(v))
            if (!in_s[u] && !hit[u]) {
                hit[u] = 1;
                out.push_back(u);
            }
    std::sort(out.begin(), out.end());
    return out;
}

/// Closed neighborhood N[u] = {u} together with u's neighbors.
inline VertexSet closed_neighborhood(const Graph& g, Vertex u) {
    g.check_vertex(u);
    VertexSet out = g.neighbors(u);
    out.push_back(u);
    return canonical_set(std::move(out));
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
    const int n = g.order();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<VertexSet> comps;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        std::queue<Vertex> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            comp.push_back(v);
            for (Vertex u : g.neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    q.push(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    return connected_components(g).size() == 1;
}

inline bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g);
}

inline VertexSet non_isolated_vertices(const Graph& g) {
    VertexSet out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0) out.push_back(v);
    return out;
}

namespace detail {

inline int ceil_div(long long a, long long b) {
    return static_cast<int>((a + b - 1) / b);
}

/// Minimal Dinic max-flow, sized for the desk-scale vertex-cut
/// computations below.
struct FlowNetwork {
    struct Arc {
        int to;
        int rev;
        int cap;
    };
    std::vector<std::vector<Arc>> arcs;
    std::vector<int> level, iter;

    explicit FlowNetwork(int nodes) : arcs(static_cast<std::size_t>(nodes)) {}

    void add_arc(int from, int to, int cap) {
        arcs[from].push_back({to, static_cast<int>(arcs[to].size()), cap});
        arcs[to].push_back({from, static_cast<int>(arcs[from].size()) - 1, 0});
    }

    bool bfs(int s, int t) {
        level.assign(arcs.size(), -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const Arc& a : arcs[v])
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[v] + 1;
                    q.push(a.to);
                }
        }
        return level[t] >= 0;
    }

    int dfs(int v, int t, int f) {
        if (v == t) return f;
        for (int& i = iter[v]; i < static_cast<int>(arcs[v].size()); ++i) {
            Arc& a = arcs[v][i];
            if (a.cap > 0 && level[v] < level[a.to]) {
                int d = dfs(a.to, t, std::min(f, a.cap));
                if (d > 0) {
                    a.cap -= d;
                    arcs[a.to][a.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    int max_flow(int s, int t) {
        int flow = 0;
        while (bfs(s, t)) {
            iter.assign(arcs.size(), 0);
            while (int f = dfs(s, t, 1 << 29)) flow += f;
        }
        return flow;
    }
};

/// Minimum number of vertices separating nonadjacent s and t, via the
/// standard vertex-splitting network.
inline int min_vertex_cut(const Graph& g, Vertex s, Vertex t) {
    const int n = g.order();
    const int inf = n + 1;
    FlowNetwork net(2 * n);
    for (Vertex v = 0; v < n; ++v) net.add_arc(2 * v, 2 * v + 1, v == s || v == t ? inf : 1);
    for (const auto& [u, v] : g.edges()) {
        net.add_arc(2 * u + 1, 2 * v, inf);
        net.add_arc(2 * v + 1, 2 * u, inf);
    }
    return net.max_flow(2 * s + 1, 2 * t);
}

} // namespace detail

/// Vertex connectivity kappa(g): the fewest vertex deletions that
/// disconnect g or reduce it to a single vertex. Exact, via
/// unit-capacity max-flow over an Even-Tarjan style pair sweep:
/// sources 0,1,...,kappa are enough because some minimum cut misses
/// one of them. kappa(K_n) = n-1 by convention, kappa = 0 when
/// disconnected.
inline int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n == 0) throw undefined_input_error("vertex connectivity of the empty graph");
    if (n == 1) return 0;
    if (!is_connected(g)) return 0;
    if (g.edge_count() == n * (n - 1) / 2) return n - 1;
    int best = n - 1;
    for (Vertex s = 0; s < n && s <= best; ++s)
        for (Vertex t = 0; t < n; ++t)
            if (t != s && !g.has_edge(s, t))
                best = std::min(best, detail::min_vertex_cut(g, s, t));
    return best;
}

struct DegeneracyResult {
    std::vector<Vertex> ordering;
    int degeneracy = 0;
};

/// Repeated minimum-degree removal (smallest index on ties). The
/// reported degeneracy c is the largest degree seen at removal time;
/// every vertex has at most c neighbors later in the ordering.
inline DegeneracyResult degeneracy_order(const Graph& g) {
    const int n = g.order();
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    DegeneracyResult result;
    result.ordering.reserve(n);
    for (int step = 0; step < n; ++step) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!removed[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
        result.degeneracy = std::max(result.degeneracy, deg[pick]);
        removed[pick] = 1;
        result.ordering.push_back(pick);
        for (Vertex u : g.neighbors(pick))
            if (!removed[u]) --deg[u];
    }
    return result;
}

/// Greedy maximal matching over the canonical edge order; returns the
/// matched endpoints. A vertex cover of size at most twice minimum.
inline VertexSet maximal_matching_vertex_cover(const Graph& g) {
    std::vector<char> matched(static_cast<std::size_t>(g.order()), 0);
    VertexSet cover;
    for (const auto& [u, v] : g.edges())
        if (!matched[u] && !matched[v]) {
            matched[u] = matched[v] = 1;
            cover.push_back(u);
            cover.push_back(v);
        }
    return canonical_set(std::move(cover));
}

/// Spine of a connected caterpillar: the path left after deleting all
/// leaves, listed in path order from its smaller-index endpoint.
/// Degenerate cases: K2 has the empty spine, K1 and stars a one-vertex
/// spine. Returns nullopt when g is not a connected caterpillar.
inline std::optional<std::vector<Vertex>> caterpillar_spine(const Graph& g) {
    const int n = g.order();
    if (n == 0) return std::nullopt;
    if (g.edge_count() != n - 1 || !is_connected(g)) return std::nullopt;
    VertexSet core;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) != 1) core.push_back(v);
    if (core.empty()) return std::vector<Vertex>{}; // K2
    if (core.size() == 1) return std::vector<Vertex>{core.front()};

    // The non-leaves of a tree always induce a subtree; it is a path
    // exactly when every core vertex keeps degree <= 2 inside it.
    std::vector<char> in_core(static_cast<std::size_t>(n), 0);
    for (Vertex v : core) in_core[v] = 1;
    std::vector<int> core_deg(static_cast<std::size_t>(n), 0);
    for (Vertex v : core)
        for (Vertex u : g.neighbors(v))
            if (in_core[u]) ++core_deg[v];
    VertexSet endpoints;
    for (Vertex v : core) {
        if (core_deg[v] > 2) return std::nullopt;
        if (core_deg[v] <= 1) endpoints.push_back(v);
    }
    if (endpoints.size() != 2) return std::nullopt;

    std::vector<Vertex> spine;
    spine.reserve(core.size());
    Vertex prev = -1, cur = endpoints.front();
    while (cur != -1) {
        spine.push_back(cur);
        Vertex next = -1;
        for (Vertex u : g.neighbors(cur))
            if (in_core[u] && u != prev) next = u;
        prev = cur;
        cur = next;
    }
    if (spine.size() != core.size()) return std::nullopt;
    return spine;
}

} // namespace igcover
