#include "toughham/pattern.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace toughham {

Graph p2_union_p3() { return Graph(5, {{0, 1}, {2, 3}, {3, 4}}); }

Graph two_k2() { return Graph(4, {{0, 1}, {2, 3}}); }

bool witness_matches(const Graph& g, const Graph& pattern, const std::vector<int>& vertices) {
    const int k = pattern.order();
    if (static_cast<int>(vertices.size()) != k) return false;
    for (int i = 0; i < k; ++i) {
        if (vertices[static_cast<std::size_t>(i)] < 0 || vertices[static_cast<std::size_t>(i)] >= g.order()) return false;
        for (int j = i + 1; j < k; ++j) {
            if (vertices[static_cast<std::size_t>(i)] == vertices[static_cast<std::size_t>(j)]) return false;
            if (g.adjacent(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)]) != pattern.adjacent(i, j))
                return false;
        }
    }
    return true;
}

std::optional<PatternWitness> find_induced(const Graph& g, const Graph& pattern, const std::string& name) {
    const int k = pattern.order();
    if (k > kMaxPatternOrder)
        throw std::invalid_argument("pattern has " + std::to_string(k) + " vertices; at most " +
                                    std::to_string(kMaxPatternOrder) + " supported");
    const int n = g.order();
    if (k > n) return std::nullopt;
    if (k == 0) return PatternWitness{name, {}};

    std::array<int, kMaxPatternOrder> pattern_degrees{};
    for (int i = 0; i < k; ++i) pattern_degrees[static_cast<std::size_t>(i)] = pattern.degree(i);
    std::sort(pattern_degrees.begin(), pattern_degrees.begin() + k);

    std::vector<int> subset(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i;
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::vector<int> image(static_cast<std::size_t>(k));

    while (true) {
        VertexSet members = VertexSet::from(subset);
        std::array<int, kMaxPatternOrder> degrees{};
        for (int i = 0; i < k; ++i) degrees[static_cast<std::size_t>(i)] = degree_into(g, subset[static_cast<std::size_t>(i)], members);
        std::sort(degrees.begin(), degrees.begin() + k);
        if (std::equal(degrees.begin(), degrees.begin() + k, pattern_degrees.begin())) {
            for (int i = 0; i < k; ++i) perm[static_cast<std::size_t>(i)] = i;
            do {
                for (int i = 0; i < k; ++i) image[static_cast<std::size_t>(i)] = subset[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
                if (witness_matches(g, pattern, image)) return PatternWitness{name, image};
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        // next k-subset in lexicographic order
        int i = k - 1;
        while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++subset[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
    return std::nullopt;
}

FreenessVerdict check_p2p3_free(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        VertexSet rest = g.vertices() - g.neighbors(u) - g.neighbors(v);
        rest.erase(u);
        rest.erase(v);
        int found_center = -1;
        int found_a = -1;
        int found_b = -1;
        rest.for_each([&](int c) {
            if (found_center != -1) return;
            VertexSet around = g.neighbors(c) & rest;
            around.for_each([&](int a) {
                if (found_center != -1) return;
                VertexSet far = around - g.neighbors(a);
                far.erase(a);
                if (!far.empty()) {
                    found_center = c;
                    found_a = a;
                    found_b = far.first();
                }
            });
        });
        if (found_center != -1) return {false, PatternWitness{"P2+P3", {u, v, found_a, found_center, found_b}}};
    }
    return {true, std::nullopt};
}

bool is_p2p3_free(const Graph& g) { return check_p2p3_free(g).free; }

FreenessVerdict check_2k2_free(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        VertexSet rest = g.vertices() - g.neighbors(u) - g.neighbors(v);
        rest.erase(u);
        rest.erase(v);
        int found_a = -1;
        int found_b = -1;
        rest.for_each([&](int a) {
            if (found_a != -1) return;
            VertexSet partner = g.neighbors(a) & rest;
            if (!partner.empty()) {
                found_a = a;
                found_b = partner.first();
            }
        });
        if (found_a != -1) return {false, PatternWitness{"2K2", {u, v, found_a, found_b}}};
    }
    return {true, std::nullopt};
}

bool is_2k2_free(const Graph& g) { return check_2k2_free(g).free; }

}  // namespace toughham
