#pragma once

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "igcover/approx.hpp"
#include "igcover/exact.hpp"
#include "igcover/generators.hpp"
#include "igcover/io.hpp"

namespace igcover {

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline std::uint64_t default_seed() {
    if (const char* env = std::getenv("IGCOVER_SEED")) {
        char* end = nullptr;
        const std::uint64_t value = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return value;
    }
    return 0;
}

inline nlohmann::ordered_json json_witnesses(const BoundReport& bounds) {
    nlohmann::ordered_json w;
    w["kappa"] = bounds.witnesses.kappa ? nlohmann::ordered_json(*bounds.witnesses.kappa)
                                        : nlohmann::ordered_json(nullptr);
    w["density_order"] = bounds.witnesses.density_order;
    nlohmann::ordered_json set = nlohmann::ordered_json::array();
    for (Vertex v : bounds.witnesses.neighborhood_set) set.push_back(v + 1);
    w["neighborhood_set"] = std::move(set);
    return w;
}

} // namespace detail

/// Exit statuses: 0 success with valid output, 1 usage or parse
/// errors, 2 infeasible or absent results, 3 budget exhaustion.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"cover a graph with k induced subgraphs of minimum maximum order"};
    app.name("igcover");
    app.require_subcommand(1);

    std::string file, cover_file, tp_file;
    std::string algorithm;
    int k = 1, m = 2;
    std::uint64_t seed = detail::default_seed();
    long long max_nodes = SearchLimits{}.max_nodes;
    long long time_ms = SearchLimits{}.time_budget.count();

    auto* solve = app.add_subcommand("solve", "run a covering algorithm on a graph");
    solve->add_option("--alg", algorithm, "algorithm")
        ->required()
        ->check(CLI::IsMember(
            {"exact", "caterpillar", "bounded-degree", "degenerate", "separator", "clique"}));
    solve->add_option("-k,--subsets", k, "number of subsets")->required();
    solve->add_option("--seed", seed, "seed for the heuristic bound search");
    solve->add_option("--max-nodes", max_nodes, "search node budget (exact only)");
    solve->add_option("--time-ms", time_ms, "search time budget in milliseconds (exact only)");
    solve->add_option("file", file, "graph file (DIMACS-like)")->required();

    auto* bounds_cmd = app.add_subcommand("bounds", "report the lower bounds for a graph");
    bounds_cmd->add_option("-k,--subsets", k, "number of subsets")->required();
    bounds_cmd->add_option("--seed", seed, "seed for the heuristic bound search");
    bounds_cmd->add_option("file", file, "graph file (DIMACS-like)")->required();

    auto* dual = app.add_subcommand("dual", "minimize the number of capped subsets");
    dual->add_option("-m,--cap", m, "subset size cap")->required();
    dual->add_option("--max-nodes", max_nodes, "search node budget");
    dual->add_option("--time-ms", time_ms, "search time budget in milliseconds");
    dual->add_option("file", file, "graph file (DIMACS-like)")->required();

    auto* check = app.add_subcommand("check", "validate a cover file against a graph");
    check->add_option("-k,--subsets", k, "expected number of subsets")->required();
    check->add_option("--cover", cover_file, "cover file")->required();
    check->add_option("file", file, "graph file (DIMACS-like)")->required();

    auto* reduce = app.add_subcommand("reduce", "reduce a 3-Partition instance to a graph");
    reduce->add_option("--three-partition", tp_file, "3-Partition instance file")->required();

    auto* gen = app.add_subcommand("gen", "emit a generated graph");
    gen->require_subcommand(1);
    int gen_n = 1, gen_spine = 1, gen_height = 0, gen_c = 1;
    std::uint64_t gen_seed = 0;
    std::vector<int> gen_leaves, gen_lengths;
    auto* gen_path_cmd = gen->add_subcommand("path", "path on n vertices");
    gen_path_cmd->add_option("--n", gen_n, "vertex count")->required();
    auto* gen_cat = gen->add_subcommand("caterpillar", "caterpillar from spine + leaf counts");
    gen_cat->add_option("--spine", gen_spine, "spine length")->required();
    gen_cat->add_option("--leaves", gen_leaves, "comma-separated leaf counts per spine vertex")
        ->delimiter(',');
    auto* gen_forest = gen->add_subcommand("forest", "disjoint union of paths");
    gen_forest->add_option("--lengths", gen_lengths, "comma-separated path lengths")
        ->delimiter(',')
        ->required();
    auto* gen_clique_cmd = gen->add_subcommand("clique", "complete graph on n vertices");
    gen_clique_cmd->add_option("--n", gen_n, "vertex count")->required();
    auto* gen_ternary = gen->add_subcommand("ternary", "complete ternary tree of a given height");
    gen_ternary->add_option("--height", gen_height, "height h")->required();
    auto* gen_degen = gen->add_subcommand("degenerate", "random graph of bounded degeneracy");
    gen_degen->add_option("--n", gen_n, "vertex count")->required();
    gen_degen->add_option("--c", gen_c, "degeneracy bound")->required();
    gen_degen->add_option("--seed", gen_seed, "generator seed");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    const SearchLimits limits{max_nodes, std::chrono::milliseconds(time_ms)};
    try {
        if (app.got_subcommand(solve)) {
            const Graph g = parse_graph(detail::read_file(file));
            const auto start = std::chrono::steady_clock::now();
            Cover cover;
            if (algorithm == "exact") {
                cover = exact_opt(g, k, limits).cover;
            } else if (algorithm == "caterpillar") {
                cover = cover_caterpillar(g, k);
            } else if (algorithm == "bounded-degree") {
                cover = cover_bounded_degree(g, k);
            } else if (algorithm == "degenerate") {
                cover = cover_degenerate(g, k);
            } else if (algorithm == "separator") {
                cover = cover_separator(
                    g, k, is_tree(g) ? make_centroid_provider() : make_bfs_provider());
            } else {
                cover = cover_clique(g.order(), k);
            }
            RunReport report;
            report.algorithm = algorithm;
            report.k = k;
            report.cost = cover_cost(cover);
            report.subsets = cover.subsets;
            report.bounds = best_lower_bound(g, k, SearchBudget{24, seed});
            report.valid = is_valid_cover(g, cover);
            report.elapsed_ms = std::chrono::duration<double, std::milli>(
                                    std::chrono::steady_clock::now() - start)
                                    .count();
            report.seed = seed;
            out << emit_report(report);
            err << "solved in " << report.elapsed_ms << " ms\n";
            return report.valid ? 0 : 2;
        }
        if (app.got_subcommand(bounds_cmd)) {
            const Graph g = parse_graph(detail::read_file(file));
            const BoundReport bounds = best_lower_bound(g, k, SearchBudget{24, seed});
            nlohmann::ordered_json doc;
            doc["k"] = k;
            doc["bounds"] = detail::json_bounds(bounds);
            doc["neighborhood_exact"] = bounds.neighborhood_exact;
            doc["witnesses"] = detail::json_witnesses(bounds);
            doc["seed"] = seed;
            out << doc.dump(2) << '\n';
            return 0;
        }
        if (app.got_subcommand(dual)) {
            const Graph g = parse_graph(detail::read_file(file));
            const DualResult result = exact_dual(g, m, limits);
            nlohmann::ordered_json doc;
            doc["m"] = m;
            doc["p"] = result.parts;
            doc["subsets"] = detail::json_subsets(result.cover.subsets);
            doc["valid"] = is_valid_cover(g, result.cover);
            out << doc.dump(2) << '\n';
            return 0;
        }
        if (app.got_subcommand(check)) {
            const Graph g = parse_graph(detail::read_file(file));
            const Cover cover = parse_cover(detail::read_file(cover_file), g.order());
            if (static_cast<int>(cover.subsets.size()) != k) {
                err << "error: cover file holds " << cover.subsets.size()
                    << " subsets, expected k = " << k << '\n';
                return 1;
            }
            const auto violations = validate_cover(g, cover);
            nlohmann::ordered_json doc;
            doc["k"] = k;
            doc["cost"] = cover_cost(cover);
            doc["valid"] = violations.empty();
            nlohmann::ordered_json list = nlohmann::ordered_json::array();
            for (const auto& violation : violations)
                list.push_back({violation.edge.first + 1, violation.edge.second + 1});
            doc["violations"] = std::move(list);
            out << doc.dump(2) << '\n';
            return violations.empty() ? 0 : 2;
        }
        if (app.got_subcommand(reduce)) {
            const ThreePartitionInstance inst =
                parse_three_partition(detail::read_file(tp_file));
            const ReducedInstance reduced = reduce_3partition(inst);
            out << "c three-partition reduction\n";
            out << "c k " << reduced.k << '\n';
            out << "c target " << reduced.target << '\n';
            out << write_graph(reduced.graph);
            return 0;
        }
        if (app.got_subcommand(gen)) {
            Graph g;
            if (gen->got_subcommand(gen_path_cmd)) {
                g = gen_path(gen_n);
            } else if (gen->got_subcommand(gen_cat)) {
                if (gen_leaves.empty()) gen_leaves.assign(static_cast<std::size_t>(gen_spine), 0);
                g = gen_caterpillar(gen_spine, gen_leaves);
            } else if (gen->got_subcommand(gen_forest)) {
                g = gen_forest_of_paths(gen_lengths);
            } else if (gen->got_subcommand(gen_clique_cmd)) {
                g = gen_clique(gen_n);
            } else if (gen->got_subcommand(gen_ternary)) {
                g = gen_ternary_tree(gen_height);
            } else {
                g = gen_random_degenerate(gen_n, gen_c, gen_seed);
            }
            out << write_graph(g);
            return 0;
        }
    } catch (const budget_exhausted_error& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const infeasible_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const not_a_caterpillar_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const not_a_tree_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const disconnected_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

} // namespace igcover
