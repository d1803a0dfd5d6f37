#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toughham/graph.hpp"

namespace toughham {

/// A cycle with a fixed orientation. Adjacency in a host graph is not checked
/// here (see validate_cycle); the constructor only enforces length >= 3 and
/// distinct in-range vertices.
class OrientedCycle {
public:
    explicit OrientedCycle(std::vector<int> order);

    [[nodiscard]] const std::vector<int>& order() const { return order_; }
    [[nodiscard]] int size() const { return static_cast<int>(order_.size()); }
    [[nodiscard]] bool contains(int v) const { return v >= 0 && v < kMaxVertices && position_[v] >= 0; }
    [[nodiscard]] int position(int v) const { return position_[v]; }
    [[nodiscard]] int successor(int v) const;
    [[nodiscard]] int predecessor(int v) const;
    [[nodiscard]] VertexSet vertices() const { return members_; }

    /// from, from+, ..., to
    [[nodiscard]] std::vector<int> forward_arc(int from, int to) const;
    /// from, from-, ..., to
    [[nodiscard]] std::vector<int> backward_arc(int from, int to) const;

    /// FNV-1a over the vertex sequence.
    [[nodiscard]] std::uint64_t hash() const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const OrientedCycle& a, const OrientedCycle& b) { return a.order_ == b.order_; }

private:
    std::vector<int> order_;
    std::array<std::int16_t, kMaxVertices> position_{};
    VertexSet members_;
};

/// A (front, back)-path given by its vertex sequence.
struct PathSeg {
    std::vector<int> vertices;

    [[nodiscard]] int front() const { return vertices.front(); }
    [[nodiscard]] int back() const { return vertices.back(); }
};

enum class HamiltonStatus { found, none, timeout };

struct HamiltonOptions {
    int timeout_ms = 10000;
    int dp_limit = 24;
};

struct HamiltonResult {
    HamiltonStatus status = HamiltonStatus::none;
    std::optional<OrientedCycle> cycle;
};

/// Bitmask dynamic program up to options.dp_limit vertices, backtracking above.
HamiltonResult hamiltonian_cycle(const Graph& g, const HamiltonOptions& options = {});
/// Throws std::invalid_argument above 24 vertices.
HamiltonResult hamiltonian_cycle_dp(const Graph& g);
HamiltonResult hamiltonian_cycle_backtrack(const Graph& g, int timeout_ms);

std::string to_string(HamiltonStatus status);

enum class ExtensionRule { splice, rotate };

std::string to_string(ExtensionRule rule);

/// Outcome of a cycle-extension attempt. On failure the successor sets are the
/// contradiction witness: W for a single vertex (independent in G), or W_x and
/// W_z for a path (no edge between them).
struct ExtensionResult {
    std::optional<OrientedCycle> cycle;
    ExtensionRule rule = ExtensionRule::splice;
    VertexSet successors_x;
    VertexSet successors_z;

    [[nodiscard]] bool ok() const { return cycle.has_value(); }
};

/// Absorb x into c: splice into the lexicographically least cycle edge whose
/// ends both see x, else rotate through an edge u+ w+ between successors of
/// neighbors, else fail with W = {u+ : u in N(x) ∩ V(c)}.
/// Throws std::invalid_argument if x is already on c.
ExtensionResult extend_with_vertex(const Graph& g, const OrientedCycle& c, int x);

/// Absorb the (x, z)-path p into c by a splice (x ~ u, z ~ w, uw a cycle edge)
/// or a rotation through W_x and W_z. Throws std::invalid_argument if p meets c
/// or is not a path of g.
ExtensionResult extend_with_path(const Graph& g, const OrientedCycle& c, const PathSeg& p);

/// c is a cycle of g (consecutive vertices adjacent, in range) covering `required`.
bool validate_cycle(const Graph& g, const OrientedCycle& c, const VertexSet& required);

}  // namespace toughham
