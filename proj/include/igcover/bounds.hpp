#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>

#include "igcover/graph.hpp"

namespace igcover {

namespace detail {

/// Deterministic bounded draw; mt19937_64's raw stream is fully
/// specified by the standard, so results are portable.
struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    std::uint64_t next_below(std::uint64_t n) { return n ? engine() % n : 0; }
    bool next_bit() { return (engine() & 1) != 0; }
};

} // namespace detail

/// rho(m): an upper bound on the edge count of any induced subgraph of
/// order m. Must satisfy rho(0) = 0, be non-decreasing, and never
/// exceed m(m-1)/2.
struct DensityFunction {
    std::function<long long(int)> rho;

    /// The universal bound rho(m) = m(m-1)/2.
    static DensityFunction pairs() {
        return {[](int m) { return static_cast<long long>(m) * (m - 1) / 2; }};
    }
};

/// ceil(n/k) where n counts non-isolated vertices (caller's duty).
inline int lb_trivial(int n, int k) {
    if (k <= 0) throw parameter_error("k must be >= 1");
    if (n < 0) throw parameter_error("n must be >= 0");
    return detail::ceil_div(n, k);
}

/// ceil((n+k-1)/k): the intersection-graph bound. Requires g connected
/// with n >= 2; returns nullopt otherwise. This is the unsimplified
/// mean bound; it collapses to ceil(n/k)+1 only when k divides n.
inline std::optional<int> lb_connected(const Graph& g, int k) {
    if (k <= 0) throw parameter_error("k must be >= 1");
    if (g.order() < 2 || !is_connected(g)) return std::nullopt;
    return detail::ceil_div(g.order() + k - 1, k);
}

/// min{n - kappa, ceil(n/k + kappa/2)}: the connectivity bound.
/// Requires g connected with n >= 2; returns nullopt otherwise.
inline std::optional<int> lb_connectivity(const Graph& g, int k) {
    if (k <= 0) throw parameter_error("k must be >= 1");
    if (g.order() < 2 || !is_connected(g)) return std::nullopt;
    const int n = g.order();
    const int kappa = vertex_connectivity(g);
    const int half = detail::ceil_div(2LL * n + static_cast<long long>(kappa) * k, 2LL * k);
    return std::min(n - kappa, half);
}

/// Smallest m with k * rho(m) >= e(G), by ascending integer search.
/// Bounded custom rho functions that never certify e(G) raise
/// no_certificate_error (impossible for the default rho).
inline int lb_density(const Graph& g, int k, const DensityFunction& density = DensityFunction::pairs()) {
    if (k <= 0) throw parameter_error("k must be >= 1");
    const long long e = g.edge_count();
    for (int m = 0; m <= g.order(); ++m)
        if (static_cast<long long>(k) * density.rho(m) >= e) return m;
    throw no_certificate_error("density function never certifies the edge count");
}

/// Search control for the neighborhood bound's heuristic regime.
struct SearchBudget {
    int restarts = 24;
    std::uint64_t seed = 0;
};

struct NeighborhoodBound {
    int value = 0;      ///< ceil(max_S (|S|+|N(S)|) / k), a sound lower bound
    VertexSet witness;  ///< an S achieving the reported maximum
    bool exact = false; ///< exhaustive enumeration vs. local search
};

namespace detail {

inline int expansion_value(const Graph& g, const std::vector<char>& in_s) {
    int size = 0, boundary = 0;
    std::vector<char> hit(in_s.size(), 0);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!in_s[v]) continue;
        ++size;
        for (Vertex u : g.neighbors(v))
            if (!in_s[u] && !hit[u]) {
                hit[u] = 1;
                ++boundary;
            }
    }
    return size + boundary;
}

} // namespace detail

/// The bound of max_S (|S|+|N(S)|)/k. Exhaustive over all 2^n subsets
/// when n <= 20 (exact); otherwise steepest-ascent local search with
/// seeded random restarts. Every S certifies a valid lower bound, so
/// the heuristic regime loses tightness only, never soundness.
inline NeighborhoodBound lb_neighborhood(const Graph& g, int k, const SearchBudget& budget = {}) {
    if (k <= 0) throw parameter_error("k must be >= 1");
    const int n = g.order();
    NeighborhoodBound out;
    if (n == 0) {
        out.exact = true;
        return out;
    }
    if (n <= 20) {
        std::vector<std::uint32_t> adj_mask(static_cast<std::size_t>(n), 0);
        for (const auto& [u, v] : g.edges()) {
            adj_mask[u] |= 1u << v;
            adj_mask[v] |= 1u << u;
        }
        int best = 0;
        std::uint32_t best_mask = 0;
        const std::uint32_t all = (1u << n) - 1;
        for (std::uint32_t mask = 0; mask <= all; ++mask) {
            std::uint32_t nbrs = 0;
            for (std::uint32_t rest = mask; rest;) {
                const int v = std::countr_zero(rest);
                rest &= rest - 1;
                nbrs |= adj_mask[v];
            }
            const int value = std::popcount(mask) + std::popcount(nbrs & ~mask);
            if (value > best) {
                best = value;
                best_mask = mask;
            }
        }
        for (Vertex v = 0; v < n; ++v)
            if (best_mask & (1u << v)) out.witness.push_back(v);
        out.value = detail::ceil_div(best, k);
        out.exact = true;
        return out;
    }

    detail::Rng rng(budget.seed);
    int best = 0;
    std::vector<char> best_set(static_cast<std::size_t>(n), 0);
    for (int restart = 0; restart < std::max(budget.restarts, 1); ++restart) {
        std::vector<char> in_s(static_cast<std::size_t>(n), 0);
        for (Vertex v = 0; v < n; ++v) in_s[v] = rng.next_bit() ? 1 : 0;
        int value = detail::expansion_value(g, in_s);
        while (true) {
            int best_gain = 0;
            Vertex best_flip = -1;
            for (Vertex v = 0; v < n; ++v) {
                in_s[v] ^= 1;
                const int candidate = detail::expansion_value(g, in_s);
                in_s[v] ^= 1;
                if (candidate - value > best_gain) {
                    best_gain = candidate - value;
                    best_flip = v;
                }
            }
            if (best_flip < 0) break;
            in_s[best_flip] ^= 1;
            value += best_gain;
        }
        if (value > best) {
            best = value;
            best_set = in_s;
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (best_set[v]) out.witness.push_back(v);
    out.value = detail::ceil_div(best, k);
    out.exact = false;
    return out;
}

/// Certificate data attached to a BoundReport.
struct BoundWitnesses {
    std::optional<int> kappa;  ///< vertex connectivity, when computed
    int density_order = 0;     ///< the certifying m of the density bound
    VertexSet neighborhood_set;
};

/// All four lower bounds plus the best applicable one. Absent entries
/// mark inapplicable bounds (disconnected hosts). Every reported value
/// is a sound lower bound on the optimum cost.
struct BoundReport {
    int trivial = 0;
    std::optional<int> connected;
    std::optional<int> connectivity;
    int density = 0;
    int neighborhood = 0;
    bool neighborhood_exact = true;
    int best = 0;
    BoundWitnesses witnesses;
};

/// Evaluates every applicable bound. The trivial and neighborhood
/// bounds are taken over the subgraph induced by non-isolated vertices
/// (the optimum never needs an isolated vertex); the connected and
/// connectivity bounds are skipped on disconnected hosts. Edgeless
/// graphs report all zeros: their optimum cost is zero.
inline BoundReport best_lower_bound(const Graph& g, int k, const SearchBudget& budget = {}) {
    if (k <= 0) throw parameter_error("k must be >= 1");
    BoundReport report;
    const VertexSet active = non_isolated_vertices(g);
    if (active.empty()) return report;

    const InducedSubgraph sub = induced_subgraph(g, active);
    report.trivial = lb_trivial(static_cast<int>(active.size()), k);
    const NeighborhoodBound nb = lb_neighborhood(sub.graph, k, budget);
    report.neighborhood = nb.value;
    report.neighborhood_exact = nb.exact;
    report.witnesses.neighborhood_set = translate_back(nb.witness, sub.original);
    report.density = lb_density(g, k);
    report.witnesses.density_order = report.density;
    if (g.order() >= 2 && is_connected(g)) {
        report.connected = lb_connected(g, k);
        report.connectivity = lb_connectivity(g, k);
        report.witnesses.kappa = vertex_connectivity(g);
    }
    report.best = std::max({report.trivial, report.density, report.neighborhood,
                            report.connected.value_or(0), report.connectivity.value_or(0)});
    return report;
}

} // namespace igcover
