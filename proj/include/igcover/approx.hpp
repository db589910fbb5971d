#pragma once

#include <functional>
#include <optional>
#include <string>

#include "igcover/cover.hpp"
#include "igcover/graph.hpp"

namespace igcover {

/// A partition (a, b, c) of the vertices with no edge joining a to b;
/// c is the separator.
struct SeparatorResult {
    VertexSet a, b, c;
};

/// A separator strategy plus its declared guarantees: alpha bounds
/// |a| and |b| by alpha*n (absent when the provider declares none),
/// and size_bound describes the separator order (the "beta f(n)" part).
struct SeparatorProvider {
    std::string name;
    std::optional<double> alpha;
    std::string size_bound;
    std::function<SeparatorResult(const Graph&)> find;
};

/// Centroid separator for trees: c is the single vertex whose removal
/// leaves components of at most floor(n/2) vertices (smallest index on
/// ties); the components are packed largest-first into the emptier of
/// a and b, so neither exceeds max(floor(n/2), ceil(2(n-1)/3)).
inline SeparatorResult centroid_separator(const Graph& g) {
    if (!is_tree(g)) throw not_a_tree_error("centroid separator requires a tree");
    const int n = g.order();
    Vertex centroid = -1;
    int best_worst = n + 1;
    for (Vertex v = 0; v < n; ++v) {
        VertexSet rest;
        for (Vertex u = 0; u < n; ++u)
            if (u != v) rest.push_back(u);
        int worst = 0;
        for (const auto& comp : connected_components(induced_subgraph(g, rest).graph))
            worst = std::max(worst, static_cast<int>(comp.size()));
        if (worst < best_worst) {
            best_worst = worst;
            centroid = v;
        }
    }

    VertexSet rest;
    for (Vertex u = 0; u < n; ++u)
        if (u != centroid) rest.push_back(u);
    const InducedSubgraph sub = induced_subgraph(g, rest);
    std::vector<VertexSet> comps;
    for (const auto& comp : connected_components(sub.graph))
        comps.push_back(translate_back(comp, sub.original));
    std::stable_sort(comps.begin(), comps.end(), [](const VertexSet& x, const VertexSet& y) {
        return x.size() > y.size();
    });

    SeparatorResult result;
    result.c = {centroid};
    for (const auto& comp : comps) {
        VertexSet& bin = result.a.size() <= result.b.size() ? result.a : result.b;
        bin.insert(bin.end(), comp.begin(), comp.end());
    }
    result.a = canonical_set(std::move(result.a));
    result.b = canonical_set(std::move(result.b));
    return result;
}

/// Breadth-first layering from vertex 0; c is the layer minimizing the
/// larger recursion subproblem max(|before|, |after|) + |layer|
/// (smaller layer index on ties), a = earlier layers, b = later ones.
/// No alpha guarantee is declared.
inline SeparatorResult bfs_level_separator(const Graph& g) {
    if (g.order() == 0 || !is_connected(g))
        throw disconnected_error("BFS level separator requires a connected graph");
    const int n = g.order();
    std::vector<int> depth(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<Vertex>> layers;
    std::queue<Vertex> q;
    depth[0] = 0;
    q.push(0);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        if (static_cast<int>(layers.size()) <= depth[v]) layers.emplace_back();
        layers[depth[v]].push_back(v);
        for (Vertex u : g.neighbors(v))
            if (depth[u] < 0) {
                depth[u] = depth[v] + 1;
                q.push(u);
            }
    }

    std::vector<int> prefix(layers.size() + 1, 0);
    for (std::size_t i = 0; i < layers.size(); ++i)
        prefix[i + 1] = prefix[i] + static_cast<int>(layers[i].size());
    std::size_t pick = 0;
    int best = n + n;
    for (std::size_t i = 0; i < layers.size(); ++i) {
        const int before = prefix[i];
        const int after = n - prefix[i + 1];
        const int larger_side = std::max(before, after) + static_cast<int>(layers[i].size());
        if (larger_side < best) {
            best = larger_side;
            pick = i;
        }
    }

    SeparatorResult result;
    for (std::size_t i = 0; i < layers.size(); ++i) {
        VertexSet& part = i < pick ? result.a : i == pick ? result.c : result.b;
        part.insert(part.end(), layers[i].begin(), layers[i].end());
    }
    result.a = canonical_set(std::move(result.a));
    result.b = canonical_set(std::move(result.b));
    result.c = canonical_set(std::move(result.c));
    return result;
}

inline SeparatorProvider make_centroid_provider() {
    return {"centroid", 2.0 / 3.0, "f(n) = 1", [](const Graph& g) { return centroid_separator(g); }};
}

inline SeparatorProvider make_bfs_provider() {
    return {"bfs-level", std::nullopt, "one BFS layer",
            [](const Graph& g) { return bfs_level_separator(g); }};
}

namespace detail {

/// Tracks the still-uncovered edges of a caterpillar during the greedy
/// window sweep.
struct RemainingGraph {
    std::vector<VertexSet> adj;
    std::vector<int> deg;
    int edges = 0;

    explicit RemainingGraph(const Graph& g)
        : adj(static_cast<std::size_t>(g.order())), deg(static_cast<std::size_t>(g.order()), 0),
          edges(g.edge_count()) {
        for (Vertex v = 0; v < g.order(); ++v) {
            adj[v] = g.neighbors(v);
            deg[v] = g.degree(v);
        }
    }

    void remove_edge(Vertex u, Vertex v) {
        auto drop = [this](Vertex from, Vertex to) {
            auto& list = adj[from];
            list.erase(std::find(list.begin(), list.end(), to));
            --deg[from];
        };
        drop(u, v);
        drop(v, u);
        --edges;
    }
};

/// Orders the remaining caterpillar from `start`: each walk vertex is
/// followed by its current leaves, then the walk continues to the one
/// non-leaf neighbor. Every vertex after the first closes exactly one
/// new edge, so a prefix of t vertices covers exactly t-1 edges.
inline std::vector<Vertex> caterpillar_walk(const RemainingGraph& remaining, Vertex start) {
    std::vector<Vertex> order;
    std::vector<char> seen(remaining.adj.size(), 0);
    Vertex cur = start;
    order.push_back(cur);
    seen[cur] = 1;
    while (true) {
        Vertex next = -1;
        int branches = 0;
        for (Vertex u : remaining.adj[cur]) {
            if (seen[u]) continue;
            if (remaining.deg[u] == 1) {
                order.push_back(u);
                seen[u] = 1;
            } else {
                ++branches;
                next = u;
            }
        }
        if (branches > 1)
            throw not_a_caterpillar_error("remaining graph branched during the spine walk");
        if (next < 0) break;
        order.push_back(next);
        seen[next] = 1;
        cur = next;
    }
    return order;
}

} // namespace detail

/// Optimal greedy cover of a connected caterpillar. Vertices are
/// ordered spine-first (a spine endpoint, its leaves, the next spine
/// vertex, its leaves, ...); each window takes the shortest prefix of
/// the remaining ordering covering q = ceil((n-1)/k) new edges, after
/// which covered edges are dropped and the ordering restarts from the
/// one window vertex that still has uncovered edges. The final window
/// takes everything left. Cost is exactly ceil((n+k-1)/k) for n >= 2,
/// which matches the connected lower bound, and no edge is covered
/// twice.
inline Cover cover_caterpillar(const Graph& g, int k) {
    if (k < 1) throw parameter_error("k must be >= 1");
    const auto spine = caterpillar_spine(g);
    if (!spine) throw not_a_caterpillar_error("graph is not a connected caterpillar");

    const int n = g.order();
    Cover cover{n, std::vector<VertexSet>(static_cast<std::size_t>(k))};
    if (g.edge_count() == 0) return cover;

    const std::size_t q = static_cast<std::size_t>(detail::ceil_div(n - 1, k));
    detail::RemainingGraph remaining(g);
    Vertex start = spine->empty() ? g.edges().front().first : spine->front();
    for (int window = 0; window < k && remaining.edges > 0; ++window) {
        const std::vector<Vertex> order = detail::caterpillar_walk(remaining, start);
        const std::size_t take =
            window == k - 1 ? order.size() : std::min(order.size(), q + 1);
        VertexSet chosen(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take));
        cover.subsets[window] = canonical_set(chosen);

        std::vector<char> in_window(static_cast<std::size_t>(n), 0);
        for (Vertex v : chosen) in_window[v] = 1;
        for (Vertex v : chosen) {
            const VertexSet nbrs = remaining.adj[v];
            for (Vertex u : nbrs)
                if (in_window[u] && v < u) remaining.remove_edge(v, u);
        }

        start = -1;
        for (Vertex v : chosen)
            if (remaining.deg[v] > 0) start = v;
        if (start < 0) break; // all edges covered
    }
    return cover;
}

/// Vertex-cover based algorithm for bounded-degree graphs: take the
/// closed neighborhood of every vertex of the greedy matching cover
/// (c subsets of at most Delta+1 vertices each), then group them into
/// k unions by descending-size round-robin. Cost is at most
/// ceil(c/k) * (Delta + 1).
inline Cover cover_bounded_degree(const Graph& g, int k) {
    if (k < 1) throw parameter_error("k must be >= 1");
    const VertexSet base = maximal_matching_vertex_cover(g);
    std::vector<VertexSet> pieces;
    pieces.reserve(base.size());
    for (Vertex u : base) pieces.push_back(closed_neighborhood(g, u));

    Cover cover{g.order(), std::vector<VertexSet>(static_cast<std::size_t>(k))};
    if (static_cast<int>(pieces.size()) <= k) {
        for (std::size_t i = 0; i < pieces.size(); ++i) cover.subsets[i] = std::move(pieces[i]);
        return cover;
    }
    std::vector<std::size_t> by_size(pieces.size());
    for (std::size_t i = 0; i < pieces.size(); ++i) by_size[i] = i;
    std::stable_sort(by_size.begin(), by_size.end(), [&pieces](std::size_t x, std::size_t y) {
        return pieces[x].size() > pieces[y].size();
    });
    for (std::size_t rank = 0; rank < by_size.size(); ++rank) {
        VertexSet& group = cover.subsets[rank % static_cast<std::size_t>(k)];
        group = set_union(group, pieces[by_size[rank]]);
    }
    return cover;
}

/// The (c+1)-approximation for c-degenerate graphs: split the
/// degeneracy ordering into k contiguous equitable blocks, then extend
/// each block with the later-ordered outside neighbors of its members.
/// Isolated vertices are left out of the partition: they never help a
/// cover, and keeping them would break the c+1 ratio against optima
/// that ignore them. Cost is at most (c+1) * ceil(n/k).
inline Cover cover_degenerate(const Graph& g, int k) {
    if (k < 1) throw parameter_error("k must be >= 1");
    const auto [full_ordering, degeneracy] = degeneracy_order(g);
    std::vector<Vertex> ordering;
    for (Vertex v : full_ordering)
        if (g.degree(v) > 0) ordering.push_back(v);
    const int n = static_cast<int>(ordering.size());
    std::vector<int> position(static_cast<std::size_t>(g.order()), -1);
    for (int i = 0; i < n; ++i) position[ordering[i]] = i;

    Cover cover{g.order(), std::vector<VertexSet>(static_cast<std::size_t>(k))};
    const int base = n / k;
    const int extra = n % k;
    int cursor = 0;
    for (int i = 0; i < k; ++i) {
        const int block = base + (i < extra ? 1 : 0);
        std::vector<char> taken(static_cast<std::size_t>(g.order()), 0);
        VertexSet subset;
        for (int j = cursor; j < cursor + block; ++j) {
            subset.push_back(ordering[j]);
            taken[ordering[j]] = 1;
        }
        for (int j = cursor; j < cursor + block; ++j) {
            const Vertex v = ordering[j];
            for (Vertex u : g.neighbors(v))
                if (position[u] > position[v] && !taken[u]) {
                    taken[u] = 1;
                    subset.push_back(u);
                }
        }
        cover.subsets[i] = canonical_set(std::move(subset));
        cursor += block;
    }
    return cover;
}

/// Separator-based recursive heuristic: split g via the provider,
/// orient so |a| <= |b|, and cover G[a+c] with floor(k/2) subsets and
/// G[b+c] with ceil(k/2). Every edge lies inside one of the two
/// subproblems. k = 1 returns the single subset of all non-isolated
/// vertices. Disconnected graphs have the trivial empty separator:
/// whole components are balanced across the two sides and the provider
/// is only ever consulted for connected graphs (BFS layering can
/// disconnect the b+c side, so recursion re-enters this case).
inline Cover cover_separator(const Graph& g, int k, const SeparatorProvider& provider) {
    if (k < 1) throw parameter_error("k must be >= 1");
    Cover cover{g.order(), {}};
    if (k == 1) {
        cover.subsets.push_back(non_isolated_vertices(g));
        return cover;
    }
    if (g.edge_count() == 0) {
        cover.subsets.assign(static_cast<std::size_t>(k), {});
        return cover;
    }
    SeparatorResult sep;
    if (!is_connected(g)) {
        auto comps = connected_components(g);
        std::stable_sort(comps.begin(), comps.end(),
                         [](const VertexSet& x, const VertexSet& y) { return x.size() > y.size(); });
        for (const auto& comp : comps) {
            VertexSet& bin = sep.a.size() <= sep.b.size() ? sep.a : sep.b;
            bin.insert(bin.end(), comp.begin(), comp.end());
        }
        sep.a = canonical_set(std::move(sep.a));
        sep.b = canonical_set(std::move(sep.b));
    } else {
        sep = provider.find(g);
    }
    if (sep.a.size() > sep.b.size()) std::swap(sep.a, sep.b);
    const InducedSubgraph left = induced_subgraph(g, set_union(sep.a, sep.c));
    const InducedSubgraph right = induced_subgraph(g, set_union(sep.b, sep.c));
    const Cover cover_left = cover_separator(left.graph, k / 2, provider);
    const Cover cover_right = cover_separator(right.graph, k - k / 2, provider);
    for (const auto& subset : cover_left.subsets)
        cover.subsets.push_back(translate_back(subset, left.original));
    for (const auto& subset : cover_right.subsets)
        cover.subsets.push_back(translate_back(subset, right.original));
    return cover;
}

/// Covers the clique K_n with k subsets, witnessing the tightness of
/// the density bound: split the vertices into g near-equal groups for
/// the largest g with g(g+1)/2 <= k, then emit one subset per group
/// pair and one per group. Cost is at most 2*ceil(n/g) = O(n/sqrt(k)).
inline Cover cover_clique(int n, int k) {
    if (n < 1) throw parameter_error("n must be >= 1");
    if (k < 1) throw parameter_error("k must be >= 1");
    int groups = 1;
    while ((groups + 1) * (groups + 2) / 2 <= k) ++groups;

    std::vector<VertexSet> blocks(static_cast<std::size_t>(groups));
    const int base = n / groups;
    const int extra = n % groups;
    int cursor = 0;
    for (int i = 0; i < groups; ++i) {
        const int size = base + (i < extra ? 1 : 0);
        for (int j = 0; j < size; ++j) blocks[i].push_back(cursor++);
    }

    Cover cover{n, std::vector<VertexSet>(static_cast<std::size_t>(k))};
    std::size_t slot = 0;
    for (int i = 0; i < groups; ++i)
        for (int j = i + 1; j < groups; ++j) cover.subsets[slot++] = set_union(blocks[i], blocks[j]);
    for (int i = 0; i < groups; ++i) cover.subsets[slot++] = blocks[i];
    return cover;
}

} // namespace igcover
