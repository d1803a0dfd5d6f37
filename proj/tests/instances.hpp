#pragma once

// Dense (P2 ∪ P3)-free instances for the cycle construction: cliques joined
// to a common cutset clique, with optional extras.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "toughham/graph.hpp"

namespace instances {

using toughham::Edge;
using toughham::Graph;

struct Variant {
    std::vector<int> cliques;    // sizes of the components of G - S
    int k = 0;                   // |S|, a clique joined to every component vertex
    int trivial = 0;             // extra vertices joined to all of S
    int partial = 0;             // one extra vertex joined to the first `partial` vertices of S
    bool cocktail = false;       // remove a perfect matching from S
    std::uint64_t shuffle = 0;   // relabel with this seed (0 keeps the natural order)

    [[nodiscard]] std::string name() const {
        std::string out = "cliques=";
        for (std::size_t i = 0; i < cliques.size(); ++i) out += (i ? "," : "") + std::to_string(cliques[i]);
        out += " k=" + std::to_string(k);
        if (trivial) out += " trivial=" + std::to_string(trivial);
        if (partial) out += " partial=" + std::to_string(partial);
        if (cocktail) out += " cocktail";
        if (shuffle) out += " shuffle=" + std::to_string(shuffle);
        return out;
    }
};

/// The cutset is the block of vertices right after the cliques (before relabeling).
inline Graph build(const Variant& v) {
    std::vector<Edge> edges;
    std::vector<int> clique_vertices;
    int n = 0;
    for (int c : v.cliques) {
        for (int i = 0; i < c; ++i) {
            for (int j = i + 1; j < c; ++j) edges.emplace_back(n + i, n + j);
            clique_vertices.push_back(n + i);
        }
        n += c;
    }
    const int s0 = n;
    n += v.k;
    for (int i = 0; i < v.k; ++i)
        for (int j = i + 1; j < v.k; ++j)
            if (!(v.cocktail && j == i + 1 && i % 2 == 0)) edges.emplace_back(s0 + i, s0 + j);
    for (int u : clique_vertices)
        for (int i = 0; i < v.k; ++i) edges.emplace_back(u, s0 + i);
    for (int t = 0; t < v.trivial; ++t, ++n)
        for (int i = 0; i < v.k; ++i) edges.emplace_back(n, s0 + i);
    if (v.partial > 0) {
        for (int i = 0; i < v.partial; ++i) edges.emplace_back(n, s0 + i);
        ++n;
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    if (v.shuffle != 0) {
        std::mt19937_64 rng(v.shuffle);
        std::shuffle(perm.begin(), perm.end(), rng);
    }
    for (auto& [a, b] : edges) {
        a = perm[static_cast<std::size_t>(a)];
        b = perm[static_cast<std::size_t>(b)];
    }
    return Graph(n, edges);
}

/// Variations of two K16 under a 60-clique: relabelings, unequal and extra
/// cliques, trivial components, a partially attached vertex, and cutsets
/// missing a perfect matching.
inline std::vector<Variant> construction_variants() {
    return {
        {{16, 16}, 60, 0, 0, false, 7},   {{20, 12}, 60, 0, 0, false, 0}, {{10, 10}, 40, 0, 0, false, 0},
        {{5, 5}, 30, 0, 0, false, 0},     {{10, 10, 10}, 45, 0, 0, false, 0},
        {{8, 8, 8, 8}, 60, 0, 0, false, 3}, {{16, 16}, 60, 2, 0, false, 0}, {{16, 16}, 60, 2, 0, false, 11},
        {{20, 20}, 60, 1, 0, false, 0},   {{2, 60}, 30, 0, 0, false, 0},  {{2, 60}, 30, 0, 0, false, 5},
        {{20, 20}, 45, 0, 30, false, 0},  {{20, 20}, 45, 0, 30, false, 9}, {{16, 16}, 60, 0, 0, true, 0},
        {{16, 16}, 60, 0, 0, true, 13},   {{3, 40}, 40, 0, 0, false, 0},  {{12, 12, 2}, 45, 0, 0, false, 0},
        {{16, 16, 2}, 60, 0, 0, false, 0}, {{30, 2}, 40, 0, 0, false, 0}, {{14, 14}, 60, 0, 0, false, 21},
        {{25, 15}, 60, 0, 0, false, 0},   {{16, 16}, 60, 0, 30, false, 17}, {{10, 10, 10}, 45, 0, 0, true, 0},
    };
}

}  // namespace instances
