#pragma once

// Brute-force reference implementations.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "toughham/graph.hpp"
#include "toughham/rational.hpp"

namespace oracle {

using toughham::Graph;
using toughham::Rational;
using toughham::VertexSet;

/// Component count of g restricted to the vertices whose bit is clear in `removed`.
inline int components_without(const Graph& g, std::uint32_t removed) {
    const int n = g.order();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!(removed >> u & 1U) && !(removed >> v & 1U) && g.adjacent(u, v)) parent[find(u)] = find(v);
    int count = 0;
    for (int v = 0; v < n; ++v)
        if (!(removed >> v & 1U) && find(v) == v) ++count;
    return count;
}

/// Minimum of |S| / c(G - S) over all 2^n subsets with c >= 2; nullopt when none
/// exists (complete graphs). Disconnected graphs give 0 via the empty set.
inline std::optional<Rational> toughness(const Graph& g) {
    const int n = g.order();
    std::optional<Rational> best;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        int c = components_without(g, mask);
        if (c < 2) continue;
        Rational r(__builtin_popcount(mask), c);
        if (!best || r < *best) best = r;
    }
    return best;
}

/// Every 5-subset; the induced subgraph is P2 ∪ P3 iff it has three edges and
/// degree multiset {2,1,1,1,1}.
inline bool p2p3_free(const Graph& g) {
    const int n = g.order();
    int idx[5];
    for (idx[0] = 0; idx[0] < n; ++idx[0])
        for (idx[1] = idx[0] + 1; idx[1] < n; ++idx[1])
            for (idx[2] = idx[1] + 1; idx[2] < n; ++idx[2])
                for (idx[3] = idx[2] + 1; idx[3] < n; ++idx[3])
                    for (idx[4] = idx[3] + 1; idx[4] < n; ++idx[4]) {
                        int deg[5] = {0, 0, 0, 0, 0};
                        int edges = 0;
                        for (int i = 0; i < 5; ++i)
                            for (int j = i + 1; j < 5; ++j)
                                if (g.adjacent(idx[i], idx[j])) {
                                    ++edges;
                                    ++deg[i];
                                    ++deg[j];
                                }
                        std::sort(deg, deg + 5);
                        if (edges == 3 && deg[0] == 1 && deg[3] == 1 && deg[4] == 2) return false;
                    }
    return true;
}

/// Every 4-subset: two edges, all degrees 1.
inline bool two_k2_free(const Graph& g) {
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    int q[4] = {a, b, c, d};
                    int deg[4] = {0, 0, 0, 0};
                    int edges = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.adjacent(q[i], q[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                    if (edges == 2 && deg[0] == 1 && deg[1] == 1 && deg[2] == 1 && deg[3] == 1) return false;
                }
    return true;
}

/// Exhaustive leaf assignment: every x gets f(x) distinct unused neighbors in Y.
inline bool star_assignment_exists(const Graph& g, const std::vector<int>& xs, const std::vector<int>& ys,
                                   const std::function<int(int)>& f) {
    std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
    std::function<bool(std::size_t, int, std::size_t)> place = [&](std::size_t xi, int left, std::size_t from) {
        if (xi == xs.size()) return true;
        if (left == 0) return place(xi + 1, xi + 1 < xs.size() ? f(xs[xi + 1]) : 0, 0);
        for (std::size_t j = from; j < ys.size(); ++j) {
            int y = ys[j];
            if (used[y] || !g.adjacent(xs[xi], y)) continue;
            used[y] = true;
            if (place(xi, left - 1, j + 1)) return true;
            used[y] = false;
        }
        return false;
    };
    return xs.empty() || place(0, f(xs[0]), 0);
}

/// Least column-major upper-triangle code over all n! labelings.
inline std::uint64_t brute_canonical(const Graph& g) {
    const int n = g.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~0ULL;
    do {
        std::uint64_t code = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(perm[i], perm[j]) ? 1U : 0U);
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// Permutation search with vertex 0 fixed first.
inline bool hamiltonian(const Graph& g) {
    const int n = g.order();
    if (n < 3) return false;
    std::vector<int> perm(static_cast<std::size_t>(n - 1));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        bool ok = g.adjacent(0, perm.front()) && g.adjacent(perm.back(), 0);
        for (std::size_t i = 0; ok && i + 1 < perm.size(); ++i) ok = g.adjacent(perm[i], perm[i + 1]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<toughham::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<toughham::Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.order(), edges);
}

}  // namespace oracle
