#include "toughham/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "toughham/pattern.hpp"

namespace toughham {

namespace {

const std::map<Family, std::string>& family_names() {
    static const std::map<Family, std::string> names{{Family::complete, "complete"},
                                                    {Family::cycle, "cycle"},
                                                    {Family::complete_split, "complete-split"},
                                                    {Family::split, "split"},
                                                    {Family::two_cliques_join, "two-cliques-join"},
                                                    {Family::random_free, "random-free"}};
    return names;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

void add_clique(std::vector<Edge>& edges, int first, int count) {
    for (int u = first; u < first + count; ++u)
        for (int v = u + 1; v < first + count; ++v) edges.emplace_back(u, v);
}

}  // namespace

std::string to_string(Family family) { return family_names().at(family); }

Family parse_family(const std::string& name) {
    for (const auto& [family, text] : family_names())
        if (text == name) return family;
    throw std::invalid_argument("unknown family '" + name + "'");
}

Graph complete_graph(int n) {
    require(n >= 1 && n <= kMaxVertices, "complete: need 1 <= n <= 128");
    std::vector<Edge> edges;
    add_clique(edges, 0, n);
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    require(n >= 3 && n <= kMaxVertices, "cycle: need 3 <= n <= 128");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

Graph complete_split(int m, int s) {
    require(m >= 1 && s >= 1 && m + s <= kMaxVertices, "complete-split: need m, s >= 1 and m + s <= 128");
    std::vector<Edge> edges;
    add_clique(edges, 0, m);
    for (int u = 0; u < m; ++u)
        for (int v = m; v < m + s; ++v) edges.emplace_back(u, v);
    return Graph(m + s, edges);
}

Graph random_split(int m, int s, double p, std::uint64_t seed) {
    require(m >= 1 && s >= 0 && m + s <= kMaxVertices, "split: need m >= 1, s >= 0 and m + s <= 128");
    require(p >= 0.0 && p <= 1.0, "split: density must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    add_clique(edges, 0, m);
    for (int v = m; v < m + s; ++v)
        for (int u = 0; u < m; ++u)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(m + s, edges);
}

Graph two_cliques_join(int a, int b, int k) {
    require(a >= 1 && b >= 1 && k >= 1 && a + b + k <= kMaxVertices,
            "two-cliques-join: need a, b, k >= 1 and a + b + k <= 128");
    std::vector<Edge> edges;
    add_clique(edges, 0, a);
    add_clique(edges, a, b);
    add_clique(edges, a + b, k);
    for (int x = a + b; x < a + b + k; ++x)
        for (int v = 0; v < a + b; ++v) edges.emplace_back(v, x);
    return Graph(a + b + k, edges);
}

Graph random_free(int n, double p, std::uint64_t seed) {
    require(n >= 1 && n <= kMaxVertices, "random-free: need 1 <= n <= 128");
    require(p >= 0.0 && p <= 1.0, "random-free: p must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    Graph g(n, edges);
    const int cap = 10 * n * n;
    for (int round = 0;; ++round) {
        auto verdict = check_p2p3_free(g);
        if (verdict.free) return g;
        if (round >= cap) throw std::runtime_error("random-free: repair did not terminate");
        std::vector<int> w = verdict.witness->vertices;
        std::sort(w.begin(), w.end());
        bool added = false;
        for (std::size_t i = 0; i < w.size() && !added; ++i)
            for (std::size_t j = i + 1; j < w.size() && !added; ++j)
                if (!g.adjacent(w[i], w[j])) {
                    edges.emplace_back(w[i], w[j]);
                    added = true;
                }
        g = Graph(n, edges);
    }
}

Graph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, edges);
}

Graph complete_bipartite(int m, int n) {
    require(m >= 1 && n >= 1 && m + n <= kMaxVertices, "complete-bipartite: need m, n >= 1 and m + n <= 128");
    std::vector<Edge> edges;
    for (int u = 0; u < m; ++u)
        for (int v = m; v < m + n; ++v) edges.emplace_back(u, v);
    return Graph(m + n, edges);
}

Graph generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::complete: return complete_graph(spec.n);
        case Family::cycle: return cycle_graph(spec.n);
        case Family::complete_split: return complete_split(spec.m, spec.s);
        case Family::split: return random_split(spec.m, spec.s, spec.p, spec.seed);
        case Family::two_cliques_join: return two_cliques_join(spec.a, spec.b, spec.k);
        case Family::random_free: return random_free(spec.n, spec.p, spec.seed);
    }
    throw std::invalid_argument("unknown family");
}

std::string to_string(EnumFilter filter) {
    switch (filter) {
        case EnumFilter::none: return "none";
        case EnumFilter::p2p3_free: return "p2p3-free";
        case EnumFilter::two_k2_free: return "2k2-free";
    }
    return "?";
}

EnumFilter parse_filter(const std::string& name) {
    for (EnumFilter f : {EnumFilter::none, EnumFilter::p2p3_free, EnumFilter::two_k2_free})
        if (to_string(f) == name) return f;
    throw std::invalid_argument("unknown filter '" + name + "'");
}

namespace {

/// Color refinement from degrees; colors are ranks of sorted signatures, so
/// isomorphic graphs get matching color classes.
std::vector<int> refined_colors(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    int classes = -1;
    while (true) {
        std::vector<std::vector<int>> signature(n);
        for (int v = 0; v < n; ++v) {
            signature[v].push_back(color[v]);
            std::vector<int> around;
            g.neighbors(v).for_each([&](int u) { around.push_back(color[u]); });
            std::sort(around.begin(), around.end());
            signature[v].insert(signature[v].end(), around.begin(), around.end());
        }
        std::vector<std::vector<int>> distinct = signature;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), signature[v]) - distinct.begin());
        if (static_cast<int>(distinct.size()) == classes) return color;
        classes = static_cast<int>(distinct.size());
    }
}

struct CodeSearch {
    const Graph& g;
    int n;
    int total_bits;
    std::vector<int> slot_color;  // color required at each position
    std::vector<int> color;
    std::vector<int> placed;
    VertexSet used;
    std::uint64_t best = ~0ULL;
    bool have_best = false;

    void run(int depth, std::uint64_t code, int bits) {
        if (have_best && (code > (best >> (total_bits - bits)))) return;
        if (depth == n) {
            if (!have_best || code < best) {
                best = code;
                have_best = true;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used.contains(v) || color[v] != slot_color[depth]) continue;
            std::uint64_t next = code;
            for (int i = 0; i < depth; ++i) next = (next << 1) | (g.adjacent(placed[i], v) ? 1U : 0U);
            used.insert(v);
            placed.push_back(v);
            run(depth + 1, next, bits + depth);
            placed.pop_back();
            used.erase(v);
        }
    }
};

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    const int n = g.order();
    if (n > 11) throw std::invalid_argument("canonical_code supports n <= 11");
    std::vector<int> color = refined_colors(g);
    std::vector<int> slots = color;
    std::sort(slots.begin(), slots.end());
    CodeSearch search{g, n, n * (n - 1) / 2, slots, color, {}, {}, 0, false};
    search.run(0, 0, 0);
    return n <= 1 ? 0 : search.best;
}

Graph graph_from_code(int n, std::uint64_t code) {
    if (n < 1 || n > 11) throw std::invalid_argument("graph_from_code supports 1 <= n <= 11");
    int bit = n * (n - 1) / 2;
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((code >> --bit) & 1U) edges.emplace_back(i, j);
    return Graph(n, edges);
}

std::vector<Graph> enumerate_small(int n, EnumFilter filter) {
    if (n < 1 || n > 9) throw std::invalid_argument("enumerate_small supports 1 <= n <= 9");
    auto keep = [&](const Graph& g) {
        switch (filter) {
            case EnumFilter::none: return true;
            case EnumFilter::p2p3_free: return is_p2p3_free(g);
            case EnumFilter::two_k2_free: return is_2k2_free(g);
        }
        return true;
    };
    // Every connected graph has a vertex whose removal leaves it connected, and
    // both filters are hereditary, so each level extends the previous one.
    std::set<std::uint64_t> level{0};
    for (int k = 2; k <= n; ++k) {
        std::set<std::uint64_t> next;
        for (std::uint64_t code : level) {
            const Graph base = graph_from_code(k - 1, code);
            const std::vector<Edge> base_edges = base.edges();
            for (std::uint32_t mask = 1; mask < (1U << (k - 1)); ++mask) {
                std::vector<Edge> edges = base_edges;
                for (int v = 0; v < k - 1; ++v)
                    if (mask & (1U << v)) edges.emplace_back(v, k - 1);
                Graph g(k, edges);
                if (keep(g)) next.insert(canonical_code(g));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (std::uint64_t code : level) out.push_back(graph_from_code(n, code));
    return out;
}

}  // namespace toughham
