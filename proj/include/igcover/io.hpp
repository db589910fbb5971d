#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "igcover/bounds.hpp"
#include "igcover/cover.hpp"
#include "igcover/graph.hpp"
#include "igcover/hypergraph.hpp"
#include "igcover/three_partition.hpp"

namespace igcover {

namespace detail {

inline std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            lines.emplace_back(text.substr(start));
            break;
        }
        lines.emplace_back(text.substr(start, end - start));
        start = end + 1;
    }
    // "a\nb\n" is two lines, not two lines and an empty one
    if (!text.empty() && text.back() == '\n') lines.pop_back();
    return lines;
}

inline bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

inline std::vector<long long> parse_ints(const std::string& line, int line_number) {
    std::istringstream in(line);
    std::vector<long long> out;
    long long value;
    while (in >> value) out.push_back(value);
    std::string rest;
    if (in.clear(), in >> rest)
        throw parse_error(line_number, "unexpected token '" + rest + "'");
    return out;
}

} // namespace detail

/// DIMACS-like graph text: a header "p edge n m", then "e u v" lines
/// with 1-indexed endpoints. Comment lines start with "c"; duplicate
/// edges are merged; self-loops are rejected.
inline Graph parse_graph(std::string_view text) {
    int n = -1;
    std::vector<Edge> edges;
    const auto lines = detail::split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const int line_number = static_cast<int>(i) + 1;
        const std::string& line = lines[i];
        if (detail::blank(line)) continue;
        std::istringstream in(line);
        std::string kind;
        in >> kind;
        if (kind == "c") continue;
        if (kind == "p") {
            if (n >= 0) throw parse_error(line_number, "duplicate problem header");
            std::string format;
            long long header_n = -1, header_m = -1;
            if (!(in >> format >> header_n >> header_m) || format != "edge" || header_n < 0 ||
                header_m < 0)
                throw parse_error(line_number, "malformed header, expected 'p edge n m'");
            n = static_cast<int>(header_n);
            edges.reserve(static_cast<std::size_t>(header_m));
            continue;
        }
        if (kind == "e") {
            if (n < 0) throw parse_error(line_number, "edge before the problem header");
            long long u = 0, v = 0;
            if (!(in >> u >> v)) throw parse_error(line_number, "malformed edge, expected 'e u v'");
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error(line_number, "vertex out of range 1.." + std::to_string(n));
            if (u == v) throw parse_error(line_number, "self-loop on vertex " + std::to_string(u));
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
            continue;
        }
        throw parse_error(line_number, "unknown line type '" + kind + "'");
    }
    if (n < 0) throw parse_error(static_cast<int>(lines.size()), "missing 'p edge n m' header");
    return Graph(n, std::move(edges));
}

inline std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

/// Cover text: a line holding k, then k lines of space-separated
/// 1-indexed vertices; a blank line is an empty subset.
inline Cover parse_cover(std::string_view text, int host_order) {
    const auto lines = detail::split_lines(text);
    if (lines.empty() || detail::blank(lines[0]))
        throw parse_error(1, "expected the subset count k");
    const auto header = detail::parse_ints(lines[0], 1);
    if (header.size() != 1 || header[0] < 0)
        throw parse_error(1, "expected the subset count k");
    const int k = static_cast<int>(header[0]);

    Cover cover{host_order, {}};
    for (int j = 0; j < k; ++j) {
        const int line_number = j + 2;
        if (static_cast<std::size_t>(j + 1) >= lines.size())
            throw parse_error(line_number, "expected " + std::to_string(k) + " subset lines");
        VertexSet subset;
        for (long long v : detail::parse_ints(lines[j + 1], line_number)) {
            if (v < 1 || v > host_order)
                throw parse_error(line_number,
                                  "vertex out of range 1.." + std::to_string(host_order));
            subset.push_back(static_cast<Vertex>(v - 1));
        }
        cover.subsets.push_back(canonical_set(std::move(subset)));
    }
    return cover;
}

inline std::string write_cover(const Cover& c) {
    std::ostringstream out;
    out << c.subsets.size() << '\n';
    for (const auto& subset : c.subsets) {
        for (std::size_t i = 0; i < subset.size(); ++i)
            out << (i ? " " : "") << subset[i] + 1;
        out << '\n';
    }
    return out.str();
}

/// 3-Partition text: "m S" on the first line, the 3m values on the
/// second.
inline ThreePartitionInstance parse_three_partition(std::string_view text) {
    const auto lines = detail::split_lines(text);
    if (lines.empty()) throw parse_error(1, "expected 'm S'");
    const auto header = detail::parse_ints(lines[0], 1);
    if (header.size() != 2 || header[0] < 1)
        throw parse_error(1, "expected 'm S' with m >= 1");
    if (lines.size() < 2) throw parse_error(2, "expected the 3m values");
    ThreePartitionInstance inst{static_cast<int>(header[0]), header[1],
                                detail::parse_ints(lines[1], 2)};
    validate_instance(inst);
    return inst;
}

inline std::string write_three_partition(const ThreePartitionInstance& inst) {
    std::ostringstream out;
    out << inst.m << ' ' << inst.s << '\n';
    for (std::size_t i = 0; i < inst.values.size(); ++i)
        out << (i ? " " : "") << inst.values[i];
    out << '\n';
    return out.str();
}

/// Hypergraph text: "n p" on the first line, then p hyperedge lines of
/// space-separated 1-indexed vertices.
inline Hypergraph parse_hypergraph(std::string_view text) {
    const auto lines = detail::split_lines(text);
    if (lines.empty()) throw parse_error(1, "expected 'n p'");
    const auto header = detail::parse_ints(lines[0], 1);
    if (header.size() != 2 || header[0] < 0 || header[1] < 0)
        throw parse_error(1, "expected 'n p'");
    const int n = static_cast<int>(header[0]);
    const int p = static_cast<int>(header[1]);
    std::vector<VertexSet> edges;
    for (int j = 0; j < p; ++j) {
        const int line_number = j + 2;
        if (static_cast<std::size_t>(j + 1) >= lines.size())
            throw parse_error(line_number, "expected " + std::to_string(p) + " hyperedge lines");
        VertexSet edge;
        for (long long v : detail::parse_ints(lines[j + 1], line_number)) {
            if (v < 1 || v > n)
                throw parse_error(line_number, "vertex out of range 1.." + std::to_string(n));
            edge.push_back(static_cast<Vertex>(v - 1));
        }
        if (edge.size() < 2)
            throw parse_error(line_number, "hyperedges must contain at least 2 vertices");
        edges.push_back(std::move(edge));
    }
    return Hypergraph(n, std::move(edges));
}

inline std::string write_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    out << h.order() << ' ' << h.hyperedges().size() << '\n';
    for (const auto& edge : h.hyperedges()) {
        for (std::size_t i = 0; i < edge.size(); ++i)
            out << (i ? " " : "") << edge[i] + 1;
        out << '\n';
    }
    return out.str();
}

/// One solve run's structured result. Timing is diagnostic only and
/// never part of the canonical document.
struct RunReport {
    std::string algorithm;
    int k = 0;
    int cost = 0;
    std::vector<VertexSet> subsets;
    BoundReport bounds;
    bool valid = false;
    double elapsed_ms = 0.0;
    std::uint64_t seed = 0;
};

namespace detail {

inline nlohmann::ordered_json json_subsets(const std::vector<VertexSet>& subsets) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& subset : subsets) {
        nlohmann::ordered_json entry = nlohmann::ordered_json::array();
        for (Vertex v : subset) entry.push_back(v + 1);
        out.push_back(std::move(entry));
    }
    return out;
}

inline nlohmann::ordered_json json_bounds(const BoundReport& bounds) {
    nlohmann::ordered_json out;
    out["trivial"] = bounds.trivial;
    out["connected"] = bounds.connected ? nlohmann::ordered_json(*bounds.connected)
                                        : nlohmann::ordered_json(nullptr);
    out["connectivity"] = bounds.connectivity ? nlohmann::ordered_json(*bounds.connectivity)
                                              : nlohmann::ordered_json(nullptr);
    out["density"] = bounds.density;
    out["neighborhood"] = bounds.neighborhood;
    out["best"] = bounds.best;
    return out;
}

} // namespace detail

/// Canonical run document with stable key order: algorithm, k, cost,
/// subsets, bounds{trivial, connected, connectivity, density,
/// neighborhood, best}, valid, seed. Vertex lists are 1-indexed and
/// sorted ascending.
inline std::string emit_report(const RunReport& report) {
    nlohmann::ordered_json doc;
    doc["algorithm"] = report.algorithm;
    doc["k"] = report.k;
    doc["cost"] = report.cost;
    doc["subsets"] = detail::json_subsets(report.subsets);
    doc["bounds"] = detail::json_bounds(report.bounds);
    doc["valid"] = report.valid;
    doc["seed"] = report.seed;
    return doc.dump(2) + "\n";
}

} // namespace igcover
