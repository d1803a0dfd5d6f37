#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "toughham/vertex_set.hpp"

namespace toughham {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1 (n <= 128).
///
/// Vertex removal is never performed on a Graph: queries take a VertexSet
/// mask instead (components of G - S are `components(g, g.vertices() - s)`).
class Graph {
public:
    Graph() = default;

    /// Throws std::invalid_argument on n out of range, loops or out-of-range endpoints.
    /// Duplicate edges are merged.
    Graph(int n, const std::vector<Edge>& edges);

    [[nodiscard]] int order() const { return n_; }
    [[nodiscard]] int edge_count() const;
    [[nodiscard]] VertexSet vertices() const { return VertexSet::range(n_); }
    [[nodiscard]] const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
    [[nodiscard]] int degree(int v) const { return adj_[static_cast<std::size_t>(v)].size(); }
    [[nodiscard]] int min_degree() const;

    /// Edges as (u, v) with u < v, in lexicographic order.
    [[nodiscard]] std::vector<Edge> edges() const;

    [[nodiscard]] bool is_complete() const;
    [[nodiscard]] bool is_clique(const VertexSet& s) const;
    [[nodiscard]] bool is_independent(const VertexSet& s) const;

    /// Union of the neighborhoods of the members of s.
    [[nodiscard]] VertexSet neighborhood(const VertexSet& s) const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

/// |N(x) ∩ s|
int degree_into(const Graph& g, int x, const VertexSet& s);

struct InducedSubgraph {
    Graph graph;
    /// labels[i] is the host vertex that became vertex i.
    std::vector<int> labels;

    [[nodiscard]] VertexSet to_host(const VertexSet& local) const;
    [[nodiscard]] std::vector<int> to_host(const std::vector<int>& local) const;
};

/// Relabels the members of s to 0..|s|-1 in ascending order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

struct Component {
    VertexSet vertices;
    bool trivial = false;
    bool clique = false;

    [[nodiscard]] int size() const { return vertices.size(); }
};

/// Connected components of g[within], ordered by ascending minimum vertex.
struct ComponentPartition {
    std::vector<Component> parts;

    [[nodiscard]] int count() const { return static_cast<int>(parts.size()); }
    [[nodiscard]] int nontrivial_count() const;
    [[nodiscard]] bool all_cliques() const;
    /// Index of the part containing v, or -1.
    [[nodiscard]] int index_of(int v) const;
};

ComponentPartition components(const Graph& g, const VertexSet& within);

/// c(g[within]) without building the partition.
int component_count(const Graph& g, const VertexSet& within);

bool is_connected(const Graph& g);

/// Number of components of g[within] that contain a neighbor of x.
int adjacent_component_count(const Graph& g, const ComponentPartition& parts, int x);

}  // namespace toughham
