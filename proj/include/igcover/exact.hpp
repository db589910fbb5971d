#pragma once

#include <chrono>
#include <optional>

#include "igcover/bounds.hpp"
#include "igcover/cover.hpp"
#include "igcover/graph.hpp"

namespace igcover {

struct SearchLimits {
    long long max_nodes = 200'000'000;
    std::chrono::milliseconds time_budget{120'000};
};

struct FeasibilityResult {
    std::optional<Cover> cover;
    long long nodes_explored = 0;
};

struct ExactResult {
    int cost = 0;
    Cover cover;
    long long nodes_explored = 0;
};

struct DualResult {
    int parts = 0;
    Cover cover;
    long long nodes_explored = 0;
};

namespace detail {

/// Depth-first search over edge colorings 1..k, where subset V_i is
/// the set of endpoints of color-i edges. A subset is determined by
/// its covered edges up to padding, so this space is complete.
/// Symmetry is broken by only ever opening colors in order; pruning:
///   - a class may never exceed m vertices,
///   - sum of class sizes plus still-untouched non-isolated vertices
///     may never exceed k*m (every such vertex must join some class),
///   - an uncolored edge with a single admissible color is assigned
///     immediately; with none, the branch is dead.
class CoverSearch {
public:
    CoverSearch(const Graph& g, int k, int m, long long node_budget,
                std::chrono::steady_clock::time_point deadline)
        : g_(g), k_(k), m_(m), node_budget_(node_budget), deadline_(deadline) {
        order_ = g.edges();
        std::stable_sort(order_.begin(), order_.end(), [&g](const Edge& a, const Edge& b) {
            return g.degree(a.first) + g.degree(a.second) >
                   g.degree(b.first) + g.degree(b.second);
        });
        color_.assign(order_.size(), -1);
        incidence_.assign(static_cast<std::size_t>(k),
                          std::vector<int>(static_cast<std::size_t>(g.order()), 0));
        class_size_.assign(static_cast<std::size_t>(k), 0);
        touched_.assign(static_cast<std::size_t>(g.order()), 0);
        active_ = static_cast<int>(non_isolated_vertices(g).size());
    }

    std::optional<Cover> run() {
        if (order_.empty()) return make_cover();
        if (m_ < 2) return std::nullopt;
        if (dfs()) return solution_;
        return std::nullopt;
    }

    long long nodes() const { return nodes_; }

private:
    bool fits(int e, int c) const {
        const auto& [u, v] = order_[e];
        const auto& counts = incidence_[c];
        return class_size_[c] + (counts[u] == 0) + (counts[v] == 0) <= m_;
    }

    /// Returns true when this assignment opened a new color.
    bool assign(int e, int c) {
        color_[e] = c;
        const bool opened = c == open_colors_;
        if (opened) ++open_colors_;
        for (Vertex v : {order_[e].first, order_[e].second}) {
            if (incidence_[c][v]++ == 0) {
                ++class_size_[c];
                ++sum_sizes_;
            }
            if (touched_[v]++ == 0) ++touched_count_;
        }
        return opened;
    }

    void unassign(int e, int c, bool opened) {
        color_[e] = -1;
        for (Vertex v : {order_[e].first, order_[e].second}) {
            if (--incidence_[c][v] == 0) {
                --class_size_[c];
                --sum_sizes_;
            }
            if (--touched_[v] == 0) --touched_count_;
        }
        if (opened) --open_colors_;
    }

    void check_budget() {
        if (nodes_ > node_budget_)
            throw budget_exhausted_error("search node budget exhausted");
        if ((nodes_ & 0xFFF) == 1 && std::chrono::steady_clock::now() > deadline_)
            throw budget_exhausted_error("search time budget exhausted");
    }

    Cover make_cover() const {
        Cover cover{g_.order(), std::vector<VertexSet>(static_cast<std::size_t>(k_))};
        for (int c = 0; c < k_; ++c)
            for (Vertex v = 0; v < g_.order(); ++v)
                if (incidence_[c][v] > 0) cover.subsets[c].push_back(v);
        return cover;
    }

    bool dfs() {
        ++nodes_;
        check_budget();

        struct Step {
            int edge;
            int color;
            bool opened;
        };
        std::vector<Step> trail;
        auto undo_trail = [&] {
            for (auto it = trail.rbegin(); it != trail.rend(); ++it)
                unassign(it->edge, it->color, it->opened);
        };

        while (true) {
            if (sum_sizes_ + (active_ - touched_count_) >
                static_cast<long long>(k_) * m_) {
                undo_trail();
                return false;
            }
            const int limit = std::min(open_colors_ + 1, k_);
            int branch_edge = -1;
            int forced_edge = -1, forced_color = -1;
            bool conflict = false;
            for (int e = 0; e < static_cast<int>(order_.size()); ++e) {
                if (color_[e] >= 0) continue;
                int count = 0, first = -1;
                for (int c = 0; c < limit && count < 2; ++c)
                    if (fits(e, c)) {
                        ++count;
                        if (first < 0) first = c;
                    }
                if (count == 0) {
                    conflict = true;
                    break;
                }
                if (count == 1) {
                    forced_edge = e;
                    forced_color = first;
                    break;
                }
                if (branch_edge < 0) branch_edge = e;
            }
            if (conflict) {
                undo_trail();
                return false;
            }
            if (forced_edge >= 0) {
                trail.push_back({forced_edge, forced_color, assign(forced_edge, forced_color)});
                continue;
            }
            if (branch_edge < 0) { // everything colored
                solution_ = make_cover();
                undo_trail();
                return true;
            }
            for (int c = 0; c < limit; ++c) {
                if (!fits(branch_edge, c)) continue;
                const bool opened = assign(branch_edge, c);
                if (dfs()) {
                    unassign(branch_edge, c, opened);
                    undo_trail();
                    return true;
                }
                unassign(branch_edge, c, opened);
            }
            undo_trail();
            return false;
        }
    }

    const Graph& g_;
    int k_, m_;
    long long node_budget_;
    std::chrono::steady_clock::time_point deadline_;
    std::vector<Edge> order_;
    std::vector<int> color_;
    std::vector<std::vector<int>> incidence_;
    std::vector<int> class_size_;
    std::vector<int> touched_;
    int active_ = 0;
    int open_colors_ = 0;
    long long sum_sizes_ = 0;
    int touched_count_ = 0;
    long long nodes_ = 0;
    std::optional<Cover> solution_;
};

inline FeasibilityResult feasible_within(const Graph& g, int k, int m, long long node_budget,
                                         std::chrono::steady_clock::time_point deadline) {
    CoverSearch search(g, k, m, node_budget, deadline);
    FeasibilityResult result;
    try {
        result.cover = search.run();
    } catch (const budget_exhausted_error&) {
        result.nodes_explored = search.nodes();
        throw;
    }
    result.nodes_explored = search.nodes();
    return result;
}

} // namespace detail

/// A cover with k subsets of cardinality at most m, or nullopt when
/// provably none exists. Raises budget_exhausted_error (distinct from
/// infeasibility) when limits run out first.
inline FeasibilityResult exact_feasible(const Graph& g, int k, int m,
                                        const SearchLimits& limits = {}) {
    if (k < 1) throw parameter_error("k must be >= 1");
    if (m < 0) throw parameter_error("m must be >= 0");
    return detail::feasible_within(g, k, m, limits.max_nodes,
                                   std::chrono::steady_clock::now() + limits.time_budget);
}

/// The exact optimum of Cover(g,k) by ascending search on m starting
/// from the best lower bound, so the run also certifies infeasibility
/// at cost-1 whenever the bound is not already tight.
inline ExactResult exact_opt(const Graph& g, int k, const SearchLimits& limits = {}) {
    if (k < 1) throw parameter_error("k must be >= 1");
    const auto deadline = std::chrono::steady_clock::now() + limits.time_budget;
    long long total = 0;
    for (int m = best_lower_bound(g, k).best;; ++m) {
        auto result = detail::feasible_within(g, k, m, limits.max_nodes - total, deadline);
        total += result.nodes_explored;
        if (result.cover) return {m, std::move(*result.cover), total};
    }
}

/// The dual optimum: the minimum number p of subsets of cardinality at
/// most m covering g, by ascending search on p from the density-based
/// starting point ceil(e/rho(m)).
inline DualResult exact_dual(const Graph& g, int m, const SearchLimits& limits = {}) {
    if (g.edge_count() == 0) return {0, Cover{g.order(), {}}, 0};
    if (m < 2) throw infeasible_error("subsets of fewer than 2 vertices cannot cover an edge");
    const auto deadline = std::chrono::steady_clock::now() + limits.time_budget;
    const long long rho_m = DensityFunction::pairs().rho(std::min(m, g.order()));
    long long total = 0;
    for (int p = std::max(1, detail::ceil_div(g.edge_count(), rho_m));; ++p) {
        auto result = detail::feasible_within(g, p, m, limits.max_nodes - total, deadline);
        total += result.nodes_explored;
        if (result.cover) return {p, std::move(*result.cover), total};
    }
}

} // namespace igcover
