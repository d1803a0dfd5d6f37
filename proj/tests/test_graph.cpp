#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toughham/generators.hpp"
#include "toughham/graph.hpp"

using namespace toughham;

TEST_CASE("vertex set basics") {
    VertexSet s{3, 70, 127};
    CHECK(s.size() == 3);
    CHECK(s.first() == 3);
    CHECK(s.next(3) == 70);
    CHECK(s.next(70) == 127);
    CHECK(s.next(127) == -1);
    CHECK(s.to_string() == "{3,70,127}");
    CHECK(VertexSet::range(65).size() == 65);
    CHECK((VertexSet::range(5) - VertexSet{1, 2}).to_vector() == std::vector<int>{0, 3, 4});
    CHECK(lex_less(VertexSet{0, 2}, VertexSet{0, 3}));
    CHECK(lex_less(VertexSet{0, 3}, VertexSet{1}));
    CHECK_FALSE(lex_less(VertexSet{1}, VertexSet{1}));
}

TEST_CASE("graph construction rejects bad input") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(129, {}), std::invalid_argument);
    Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(g.edge_count() == 2);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("induced subgraph") {
    SUBCASE("path inside C5") {
        Graph c5 = cycle_graph(5);
        auto sub = induced_subgraph(c5, VertexSet{0, 1, 2});
        CHECK(sub.graph.order() == 3);
        CHECK(sub.graph.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
        CHECK(sub.labels == std::vector<int>{0, 1, 2});
    }
    SUBCASE("whole vertex set is identity") {
        Graph p = petersen();
        CHECK(induced_subgraph(p, p.vertices()).graph == p);
    }
    SUBCASE("cliques are hereditary") {
        auto sub = induced_subgraph(complete_graph(4), VertexSet{0, 2, 3});
        CHECK(sub.graph == complete_graph(3));
        CHECK(sub.to_host(VertexSet{1}) == VertexSet{2});
    }
}

TEST_CASE("components") {
    SUBCASE("C6 split by an antipodal pair") {
        Graph c6 = cycle_graph(6);
        auto parts = components(c6, c6.vertices() - VertexSet{0, 3});
        REQUIRE(parts.count() == 2);
        CHECK(parts.parts[0].vertices == VertexSet{1, 2});
        CHECK(parts.parts[1].vertices == VertexSet{4, 5});
        CHECK(parts.all_cliques());
        CHECK(parts.nontrivial_count() == 2);
        CHECK(parts.index_of(5) == 1);
        CHECK(parts.index_of(0) == -1);
    }
    SUBCASE("K5") {
        auto parts = components(complete_graph(5), VertexSet::range(5));
        CHECK(parts.count() == 1);
        CHECK(parts.parts[0].clique);
    }
    SUBCASE("edgeless") {
        auto parts = components(Graph(4, {}), VertexSet::range(4));
        CHECK(parts.count() == 4);
        for (const auto& p : parts.parts) CHECK(p.trivial);
    }
}

TEST_CASE("degree into a set") {
    CHECK(degree_into(complete_graph(4), 0, VertexSet{1, 2}) == 2);
    CHECK(degree_into(cycle_graph(5), 0, VertexSet{2, 3}) == 0);
    CHECK(degree_into(complete_bipartite(1, 3), 0, VertexSet{1, 2, 3}) == 3);
}

TEST_CASE("adjacent component count") {
    Graph c6 = cycle_graph(6);
    auto parts = components(c6, c6.vertices() - VertexSet{0, 3});
    CHECK(adjacent_component_count(c6, parts, 0) == 2);
    Graph g(5, {{0, 1}, {0, 2}, {3, 4}});
    auto p2 = components(g, VertexSet{1, 2, 3, 4});
    CHECK(adjacent_component_count(g, p2, 0) == 2);
}

TEST_CASE("component counts agree with union-find over random cutsets") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 3 + static_cast<int>(rng() % 12);
        Graph g = oracle::random_graph(n, 0.3, rng);
        std::uint32_t removed = static_cast<std::uint32_t>(rng()) & ((1U << n) - 1);
        VertexSet within;
        for (int v = 0; v < n; ++v)
            if (!(removed >> v & 1U)) within.insert(v);
        int expected = oracle::components_without(g, removed);
        CHECK(component_count(g, within) == expected);
        CHECK(components(g, within).count() == expected);
    }
}

TEST_CASE("connectivity and clique predicates") {
    CHECK(is_connected(petersen()));
    CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
    CHECK(complete_graph(6).is_complete());
    CHECK(cycle_graph(5).is_independent(VertexSet{0, 2}));
    CHECK_FALSE(cycle_graph(5).is_clique(VertexSet{0, 2}));
    CHECK(cycle_graph(5).neighborhood(VertexSet{0}) == VertexSet{1, 4});
    CHECK(cycle_graph(5).min_degree() == 2);
}
