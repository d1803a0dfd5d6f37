#include "toughham/graph.hpp"

#include <algorithm>

namespace toughham {

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool first_member = true;
    for_each([&](int v) {
        if (!first_member) out += ',';
        out += std::to_string(v);
        first_member = false;
    });
    out += '}';
    return out;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
    int x = a.first();
    int y = b.first();
    while (x != -1 && y != -1) {
        if (x != y) return x < y;
        x = a.next(x);
        y = b.next(y);
    }
    return x == -1 && y != -1;
}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph order " + std::to_string(n) + " outside 0.." +
                                    std::to_string(kMaxVertices));
    adj_.assign(static_cast<std::size_t>(n), VertexSet{});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") out of range");
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].insert(v);
        adj_[static_cast<std::size_t>(v)].insert(u);
    }
}

int Graph::edge_count() const {
    int twice = 0;
    for (const auto& row : adj_) twice += row.size();
    return twice / 2;
}

int Graph::min_degree() const {
    int best = n_ == 0 ? 0 : n_;
    for (const auto& row : adj_) best = std::min(best, row.size());
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        adj_[static_cast<std::size_t>(u)].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

bool Graph::is_complete() const { return 2 * edge_count() == n_ * (n_ - 1); }

bool Graph::is_clique(const VertexSet& s) const {
    bool ok = true;
    s.for_each([&](int v) {
        if (ok && !(s - VertexSet{v}).is_subset_of(adj_[static_cast<std::size_t>(v)])) ok = false;
    });
    return ok;
}

bool Graph::is_independent(const VertexSet& s) const {
    bool ok = true;
    s.for_each([&](int v) {
        if (ok && adj_[static_cast<std::size_t>(v)].intersects(s)) ok = false;
    });
    return ok;
}

VertexSet Graph::neighborhood(const VertexSet& s) const {
    VertexSet out;
    s.for_each([&](int v) { out |= adj_[static_cast<std::size_t>(v)]; });
    return out;
}

bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

int degree_into(const Graph& g, int x, const VertexSet& s) { return (g.neighbors(x) & s).size(); }

VertexSet InducedSubgraph::to_host(const VertexSet& local) const {
    VertexSet out;
    local.for_each([&](int v) { out.insert(labels[static_cast<std::size_t>(v)]); });
    return out;
}

std::vector<int> InducedSubgraph::to_host(const std::vector<int>& local) const {
    std::vector<int> out;
    out.reserve(local.size());
    for (int v : local) out.push_back(labels[static_cast<std::size_t>(v)]);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (!s.is_subset_of(g.vertices()))
        throw std::invalid_argument("vertex set " + s.to_string() + " not contained in graph of order " +
                                    std::to_string(g.order()));
    InducedSubgraph out;
    out.labels = s.to_vector();
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < out.labels.size(); ++i) local[static_cast<std::size_t>(out.labels[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < out.labels.size(); ++i) {
        int u = out.labels[i];
        (g.neighbors(u) & s).for_each([&](int v) {
            if (u < v) edges.emplace_back(static_cast<int>(i), local[static_cast<std::size_t>(v)]);
        });
    }
    out.graph = Graph(static_cast<int>(out.labels.size()), edges);
    return out;
}

namespace {

VertexSet flood(const Graph& g, const VertexSet& within, int start) {
    VertexSet reached{start};
    VertexSet frontier{start};
    while (!frontier.empty()) {
        VertexSet grown = g.neighborhood(frontier) & within;
        frontier = grown - reached;
        reached |= frontier;
    }
    return reached;
}

void check_within(const Graph& g, const VertexSet& within) {
    if (!within.is_subset_of(g.vertices()))
        throw std::invalid_argument("vertex set " + within.to_string() + " not contained in graph of order " +
                                    std::to_string(g.order()));
}

}  // namespace

int ComponentPartition::nontrivial_count() const {
    return static_cast<int>(std::count_if(parts.begin(), parts.end(), [](const Component& c) { return !c.trivial; }));
}

bool ComponentPartition::all_cliques() const {
    return std::all_of(parts.begin(), parts.end(), [](const Component& c) { return c.clique; });
}

int ComponentPartition::index_of(int v) const {
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i].vertices.contains(v)) return static_cast<int>(i);
    return -1;
}

ComponentPartition components(const Graph& g, const VertexSet& within) {
    check_within(g, within);
    ComponentPartition out;
    VertexSet rest = within;
    while (!rest.empty()) {
        Component c;
        c.vertices = flood(g, within, rest.first());
        c.trivial = c.vertices.size() == 1;
        c.clique = g.is_clique(c.vertices);
        rest -= c.vertices;
        out.parts.push_back(c);
    }
    return out;
}

int component_count(const Graph& g, const VertexSet& within) {
    int count = 0;
    VertexSet rest = within;
    while (!rest.empty()) {
        rest -= flood(g, within, rest.first());
        ++count;
    }
    return count;
}

bool is_connected(const Graph& g) { return component_count(g, g.vertices()) <= 1; }

int adjacent_component_count(const Graph& g, const ComponentPartition& parts, int x) {
    int count = 0;
    for (const auto& c : parts.parts)
        if (g.neighbors(x).intersects(c.vertices)) ++count;
    return count;
}

}  // namespace toughham
