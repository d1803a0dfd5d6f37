#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toughham/graph.hpp"

namespace toughham {

enum class Family { complete, cycle, complete_split, split, two_cliques_join, random_free };

std::string to_string(Family family);
/// Throws std::invalid_argument for unknown names.
Family parse_family(const std::string& name);

/// Parameters by family:
///   complete, cycle: n
///   complete-split: m (clique), s (independent side)
///   split: m (clique), s (independent side), p (cross-edge density), seed
///   two-cliques-join: a, b, k
///   random-free: n, p, seed
struct FamilySpec {
    Family family = Family::complete;
    int n = 0;
    int m = 0;
    int s = 0;
    int a = 0;
    int b = 0;
    int k = 0;
    double p = 0.5;
    std::uint64_t seed = 0;
};

/// Throws std::invalid_argument when a parameter is out of range.
Graph generate(const FamilySpec& spec);

Graph complete_graph(int n);
Graph cycle_graph(int n);
/// Clique 0..m-1, independent vertices m..m+s-1 joined to the whole clique.
/// Toughness m/s for s >= 2.
Graph complete_split(int m, int s);
/// Clique 0..m-1 and independent m..m+s-1, each cross pair present with probability p.
Graph random_split(int m, int s, double p, std::uint64_t seed);
/// K_a on 0..a-1, K_b on a..a+b-1, and a k-clique a+b..a+b+k-1 joined to everything.
Graph two_cliques_join(int a, int b, int k);
/// G(n, p), then while an induced P2 ∪ P3 exists, add the edge between the two
/// least nonadjacent witness vertices. Throws std::runtime_error past 10 n^2 repairs.
Graph random_free(int n, double p, std::uint64_t seed);
Graph petersen();
Graph complete_bipartite(int m, int n);

enum class EnumFilter { none, p2p3_free, two_k2_free };

std::string to_string(EnumFilter filter);
EnumFilter parse_filter(const std::string& name);

/// Isomorphism-invariant code: the least upper-triangle bit string (column by
/// column) over the labelings that list vertices by refined degree class.
/// Requires n <= 11.
std::uint64_t canonical_code(const Graph& g);
Graph graph_from_code(int n, std::uint64_t code);

/// All connected graphs on n <= 9 vertices up to isomorphism, passing `filter`,
/// ordered by canonical code and labeled canonically.
std::vector<Graph> enumerate_small(int n, EnumFilter filter = EnumFilter::none);

}  // namespace toughham
