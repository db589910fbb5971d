#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace igcover;

TEST_CASE("hypergraph construction") {
    const Hypergraph h(4, {{0, 1}, {1, 2, 3}, {0, 1}});
    CHECK(h.order() == 4);
    CHECK(h.hyperedges().size() == 2); // duplicates merged
    CHECK_THROWS_AS(Hypergraph(4, {{2}}), invalid_instance_error);
    CHECK_THROWS_AS(Hypergraph(4, {{1, 1}}), invalid_instance_error); // collapses to a singleton
    CHECK_THROWS_AS(Hypergraph(3, {{1, 5}}), invalid_vertex_error);
}

TEST_CASE("normalize drops contained hyperedges") {
    const Hypergraph h(4, {{0, 1}, {0, 1, 2}});
    CHECK(normalize(h).hyperedges() == std::vector<VertexSet>{{0, 1, 2}});

    const Hypergraph antichain(5, {{0, 1}, {1, 2}, {3, 4}});
    CHECK(normalize(antichain).hyperedges() == antichain.hyperedges());

    const Hypergraph chain(5, {{0, 1}, {0, 1, 2}, {0, 1, 2, 3}});
    CHECK(normalize(chain).hyperedges() == std::vector<VertexSet>{{0, 1, 2, 3}});
}

TEST_CASE("normalize is idempotent and preserves cover validity", "[property]") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 5);
        std::vector<VertexSet> edges;
        const int count = 2 + static_cast<int>(rng() % 5);
        for (int i = 0; i < count; ++i) {
            VertexSet e;
            for (Vertex v = 0; v < n; ++v)
                if (rng() % 3 == 0) e.push_back(v);
            if (e.size() >= 2) edges.push_back(e);
        }
        if (edges.empty()) continue;
        const Hypergraph h(n, edges);
        const Hypergraph once = normalize(h);
        const Hypergraph twice = normalize(once);
        CHECK(once.hyperedges() == twice.hyperedges());

        HyperCover cover;
        for (int j = 0; j < 2; ++j) {
            VertexSet s;
            for (Vertex v = 0; v < n; ++v)
                if (rng() % 2 == 0) s.push_back(v);
            cover.subsets.push_back(s);
        }
        CHECK(validate_hypercover(h, cover).empty() ==
              validate_hypercover(once, cover).empty());
    }
}

TEST_CASE("hypercover validation examples") {
    const Hypergraph h(4, {{0, 1, 2}});
    CHECK(validate_hypercover(h, {{{0, 1, 2}}, std::nullopt}).empty());

    const Hypergraph two(5, {{0, 1}, {2, 3}});
    const auto uncovered = validate_hypercover(two, {{{0, 1, 2}}, std::nullopt});
    REQUIRE(uncovered.size() == 1);
    CHECK(uncovered[0] == VertexSet{2, 3});

    CHECK_THROWS_AS(validate_hypercover(two, {{{0, 1, 2}}, 2}), cap_violation_error);
    CHECK_THROWS_AS(validate_hypercover(two, {{{0, 9}}, std::nullopt}), invalid_cover_error);
}

TEST_CASE("2-uniform hypercover validity matches graph cover validity", "[oracle]") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Graph g = testutil::random_graph(4 + static_cast<int>(seed % 5), 45, seed);
        if (g.edge_count() == 0) continue;
        std::vector<VertexSet> hyperedges;
        for (const auto& [u, v] : g.edges()) hyperedges.push_back({u, v});
        const Hypergraph h(g.order(), hyperedges);

        std::mt19937_64 rng(seed * 31 + 7);
        for (int trial = 0; trial < 4; ++trial) {
            Cover cover{g.order(), {}};
            HyperCover hcover;
            for (int j = 0; j < 2; ++j) {
                VertexSet s;
                for (Vertex v = 0; v < g.order(); ++v)
                    if (rng() % 2 == 0) s.push_back(v);
                cover.subsets.push_back(s);
                hcover.subsets.push_back(s);
            }
            const auto graph_violations = validate_cover(g, cover);
            const auto hyper_violations = validate_hypercover(h, hcover);
            CHECK(graph_violations.empty() == hyper_violations.empty());
            CHECK(graph_violations.size() == hyper_violations.size());
        }
    }
}
