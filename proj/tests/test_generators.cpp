#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "toughham/generators.hpp"
#include "toughham/pattern.hpp"
#include "toughham/toughness.hpp"

using namespace toughham;

TEST_CASE("family names") {
    for (Family f : {Family::complete, Family::cycle, Family::complete_split, Family::split, Family::two_cliques_join,
                     Family::random_free})
        CHECK(parse_family(to_string(f)) == f);
    CHECK(to_string(Family::two_cliques_join) == "two-cliques-join");
    CHECK_THROWS_AS(parse_family("wheel"), std::invalid_argument);
    CHECK(parse_filter("2k2-free") == EnumFilter::two_k2_free);
    CHECK_THROWS_AS(parse_filter("free"), std::invalid_argument);
}

TEST_CASE("deterministic families") {
    Graph cs = complete_split(4, 2);
    CHECK(cs.order() == 6);
    CHECK(toughness(cs).tau == Rational(2));
    Graph tj = two_cliques_join(16, 16, 60);
    CHECK(tj.order() == 92);
    CHECK(is_p2p3_free(tj));
    CHECK(cycle_graph(9).edge_count() == 9);
    CHECK(complete_graph(7).edge_count() == 21);
    CHECK(petersen().edge_count() == 15);
    CHECK(complete_bipartite(3, 4).edge_count() == 12);
    FamilySpec spec;
    spec.family = Family::two_cliques_join;
    spec.a = 16;
    spec.b = 16;
    spec.k = 60;
    CHECK(generate(spec) == tj);
}

TEST_CASE("parameter errors") {
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK_THROWS_AS(complete_split(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(two_cliques_join(60, 60, 60), std::invalid_argument);
    CHECK_THROWS_AS(random_free(5, 1.5, 1), std::invalid_argument);
}

TEST_CASE("random families") {
    Graph rf = random_free(8, 0.5, 1);
    CHECK(is_p2p3_free(rf));
    CHECK(random_free(8, 0.5, 1) == rf);
    for (std::uint64_t seed = 1; seed <= 30; ++seed) CHECK(oracle::p2p3_free(random_free(11, 0.3, seed)));
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph sp = random_split(6, 5, 0.5, seed);
        CHECK(is_p2p3_free(sp));
        CHECK(sp.is_clique(VertexSet::range(6)));
        CHECK(sp.is_independent(VertexSet::range(11) - VertexSet::range(6)));
        CHECK(random_split(6, 5, 0.5, seed) == sp);
    }
}

TEST_CASE("complete split toughness") {
    for (int m = 1; m <= 8; ++m)
        for (int s = 2; m + s <= 12; ++s) CHECK(toughness(complete_split(m, s)).tau == Rational(m, s));
}

TEST_CASE("canonical code is a labeling invariant") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 7);
        Graph g = oracle::random_graph(n, 0.5, rng);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_code(g) == canonical_code(oracle::relabel(g, perm)));
        Graph h = oracle::random_graph(n, 0.5, rng);
        CHECK((canonical_code(g) == canonical_code(h)) == (oracle::brute_canonical(g) == oracle::brute_canonical(h)));
    }
    CHECK_THROWS_AS(canonical_code(cycle_graph(12)), std::invalid_argument);
    CHECK(graph_from_code(3, canonical_code(cycle_graph(3))) == cycle_graph(3));
}

TEST_CASE("connected graph counts") {
    const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 1; n <= 8; ++n) CHECK(enumerate_small(n).size() == expected[n - 1]);
    auto three = enumerate_small(3);
    CHECK(three[0].edge_count() == 2);
    CHECK(three[1] == complete_graph(3));
    CHECK_THROWS_AS(enumerate_small(10), std::invalid_argument);
}

TEST_CASE("enumeration matches brute-force isomorphism classes") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::uint64_t> classes;
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            Graph g = graph_from_code(n, mask);
            if (is_connected(g)) classes.insert(oracle::brute_canonical(g));
        }
        std::set<std::uint64_t> listed;
        for (const Graph& g : enumerate_small(n)) {
            CHECK(is_connected(g));
            listed.insert(oracle::brute_canonical(g));
        }
        CHECK(listed == classes);
    }
}

TEST_CASE("filtered enumeration") {
    const std::size_t p2p3[] = {1, 1, 2, 6, 21, 102, 605, 5146};
    const std::size_t two_k2[] = {1, 1, 2, 6, 18, 72, 341, 2133};
    for (int n = 1; n <= 8; ++n) {
        std::size_t free = 0, strict = 0;
        for (const Graph& g : enumerate_small(n)) {
            free += oracle::p2p3_free(g) ? 1 : 0;
            strict += oracle::two_k2_free(g) ? 1 : 0;
        }
        CHECK(free == p2p3[n - 1]);
        CHECK(strict == two_k2[n - 1]);
        if (n <= 7) {
            CHECK(enumerate_small(n, EnumFilter::p2p3_free).size() == free);
            CHECK(enumerate_small(n, EnumFilter::two_k2_free).size() == strict);
        }
    }
}
