#pragma once

#include <array>
#include <numeric>
#include <optional>
#include <vector>

#include "igcover/cover.hpp"
#include "igcover/graph.hpp"

namespace igcover {

/// A 3-Partition instance: 3m positive integers strictly between s/4
/// and s/2 summing to m*s. Every yes-certificate necessarily consists
/// of m triples.
struct ThreePartitionInstance {
    int m = 0;
    long long s = 0;
    std::vector<long long> values; // a_1..a_3m
};

/// m disjoint triples of value indices (0-based), each summing to s.
/// Canonical form: triples sorted internally, groups sorted by first
/// element.
struct ThreePartitionSolution {
    std::vector<std::array<int, 3>> groups;
    bool operator==(const ThreePartitionSolution&) const = default;
};

inline void validate_instance(const ThreePartitionInstance& inst) {
    if (inst.m < 1) throw invalid_instance_error("group count m must be >= 1");
    if (static_cast<int>(inst.values.size()) != 3 * inst.m)
        throw invalid_instance_error("expected " + std::to_string(3 * inst.m) + " values, got " +
                                     std::to_string(inst.values.size()));
    long long sum = 0;
    for (long long a : inst.values) {
        if (a <= 0) throw invalid_instance_error("values must be positive");
        if (!(4 * a > inst.s && 2 * a < inst.s))
            throw invalid_instance_error("value " + std::to_string(a) +
                                         " violates s/4 < a < s/2 for s = " +
                                         std::to_string(inst.s));
        sum += a;
    }
    if (sum != inst.m * inst.s)
        throw invalid_instance_error("values sum to " + std::to_string(sum) + ", expected m*s = " +
                                     std::to_string(inst.m * inst.s));
}

struct ReducedInstance {
    Graph graph; ///< disjoint union of paths, one per value, in value order
    int k = 0;
    long long target = 0;
};

/// The hardness reduction: value a_i becomes a path on a_i vertices
/// occupying the contiguous block starting at sum_{j<i} a_j, k = m and
/// the decision target is s. The instance is a yes-instance exactly
/// when the reduced graph admits a cover of cost at most s.
inline ReducedInstance reduce_3partition(const ThreePartitionInstance& inst) {
    validate_instance(inst);
    std::vector<Edge> edges;
    int offset = 0;
    for (long long a : inst.values) {
        for (int j = 1; j < a; ++j) edges.emplace_back(offset + j - 1, offset + j);
        offset += static_cast<int>(a);
    }
    return {Graph(offset, std::move(edges)), inst.m, inst.s};
}

/// Reads a 3-Partition certificate off a cover of the reduced graph.
/// When the cover is valid with cost <= s, the counting argument pins
/// every path inside exactly one subset and forces every subset to
/// carry exactly s vertices; the induced value grouping is then a
/// valid solution. Returns nullopt for invalid covers or cost > s.
inline std::optional<ThreePartitionSolution> lift_cover_to_partition(
    const ThreePartitionInstance& inst, const Cover& cover) {
    validate_instance(inst);
    const ReducedInstance reduced = reduce_3partition(inst);
    if (static_cast<int>(cover.subsets.size()) != reduced.k ||
        cover.host_order != reduced.graph.order())
        throw mismatched_instance_error("cover shape does not match the reduced instance");
    for (const auto& subset : cover.subsets)
        for (Vertex v : subset)
            if (v < 0 || v >= reduced.graph.order())
                throw mismatched_instance_error("cover references a vertex outside the reduction");

    if (!is_valid_cover(reduced.graph, cover)) return std::nullopt;
    if (cover_cost(cover) > reduced.target) return std::nullopt;

    // Only the all-ones family (forced when s = 3) produces edgeless
    // paths; any grouping into consecutive triples works there.
    const bool all_ones =
        std::all_of(inst.values.begin(), inst.values.end(), [](long long a) { return a == 1; });
    ThreePartitionSolution solution;
    if (all_ones) {
        for (int j = 0; j < inst.m; ++j)
            solution.groups.push_back({3 * j, 3 * j + 1, 3 * j + 2});
        return solution;
    }

    std::vector<std::vector<int>> members(cover.subsets.size());
    std::vector<std::vector<char>> in_subset(cover.subsets.size());
    for (std::size_t j = 0; j < cover.subsets.size(); ++j) {
        in_subset[j].assign(static_cast<std::size_t>(reduced.graph.order()), 0);
        for (Vertex v : cover.subsets[j]) in_subset[j][v] = 1;
    }

    // The executable form of the incidence-matrix count: each block
    // must sit wholly inside exactly one subset, subset loads must be
    // exactly s, and each group must be a triple summing to s.
    int offset = 0;
    for (std::size_t i = 0; i < inst.values.size(); ++i) {
        const int lo = offset, hi = offset + static_cast<int>(inst.values[i]);
        offset = hi;
        int home = -1;
        for (std::size_t j = 0; j < cover.subsets.size(); ++j) {
            bool whole = true;
            for (int v = lo; v < hi && whole; ++v) whole = in_subset[j][v];
            if (whole) {
                if (home >= 0)
                    throw error("counting argument violated: a path fits two subsets");
                home = static_cast<int>(j);
            }
        }
        if (home < 0) throw error("counting argument violated: a path fits no subset");
        members[home].push_back(static_cast<int>(i));
    }
    for (std::size_t j = 0; j < members.size(); ++j) {
        if (members[j].size() != 3)
            throw error("counting argument violated: a group is not a triple");
        long long sum = 0;
        for (int i : members[j]) sum += inst.values[i];
        if (sum != inst.s) throw error("counting argument violated: a group misses the target");
        solution.groups.push_back({members[j][0], members[j][1], members[j][2]});
    }
    std::sort(solution.groups.begin(), solution.groups.end());
    return solution;
}

namespace detail {

inline bool brute_triples(const ThreePartitionInstance& inst, std::vector<char>& used,
                          ThreePartitionSolution& partial) {
    const int total = static_cast<int>(inst.values.size());
    int anchor = -1;
    for (int i = 0; i < total; ++i)
        if (!used[i]) {
            anchor = i;
            break;
        }
    if (anchor < 0) return true;
    for (int i = anchor + 1; i < total; ++i) {
        if (used[i]) continue;
        for (int j = i + 1; j < total; ++j) {
            if (used[j]) continue;
            if (inst.values[anchor] + inst.values[i] + inst.values[j] != inst.s) continue;
            used[anchor] = used[i] = used[j] = 1;
            partial.groups.push_back({anchor, i, j});
            if (brute_triples(inst, used, partial)) return true;
            partial.groups.pop_back();
            used[anchor] = used[i] = used[j] = 0;
        }
    }
    return false;
}

} // namespace detail

/// Exhaustive search over partitions into triples, anchored on the
/// smallest free index so the first hit is the lexicographically
/// smallest solution. Desk-scale only: 3m <= 12.
inline std::optional<ThreePartitionSolution> brute_3partition(const ThreePartitionInstance& inst) {
    validate_instance(inst);
    if (inst.values.size() > 12)
        throw size_limit_error("brute-force 3-Partition is limited to 3m <= 12");
    std::vector<char> used(inst.values.size(), 0);
    ThreePartitionSolution solution;
    if (detail::brute_triples(inst, used, solution)) return solution;
    return std::nullopt;
}

} // namespace igcover
