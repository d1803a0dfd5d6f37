#include "toughham/hamiltonicity.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

namespace toughham {

OrientedCycle::OrientedCycle(std::vector<int> order) : order_(std::move(order)) {
    if (order_.size() < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
    position_.fill(-1);
    for (std::size_t i = 0; i < order_.size(); ++i) {
        int v = order_[i];
        if (v < 0 || v >= kMaxVertices) throw std::invalid_argument("cycle vertex " + std::to_string(v) + " out of range");
        if (position_[v] >= 0) throw std::invalid_argument("cycle repeats vertex " + std::to_string(v));
        position_[v] = static_cast<std::int16_t>(i);
        members_.insert(v);
    }
}

int OrientedCycle::successor(int v) const {
    int p = position_[v];
    return order_[(p + 1) % size()];
}

int OrientedCycle::predecessor(int v) const {
    int p = position_[v];
    return order_[(p + size() - 1) % size()];
}

std::vector<int> OrientedCycle::forward_arc(int from, int to) const {
    std::vector<int> out{from};
    for (int v = from; v != to;) {
        v = successor(v);
        out.push_back(v);
    }
    return out;
}

std::vector<int> OrientedCycle::backward_arc(int from, int to) const {
    std::vector<int> out{from};
    for (int v = from; v != to;) {
        v = predecessor(v);
        out.push_back(v);
    }
    return out;
}

std::uint64_t OrientedCycle::hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (int v : order_) {
        h ^= static_cast<std::uint64_t>(v) + 1;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string OrientedCycle::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < order_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(order_[i]);
    }
    return out;
}

std::string to_string(HamiltonStatus status) {
    switch (status) {
        case HamiltonStatus::found: return "found";
        case HamiltonStatus::none: return "none";
        case HamiltonStatus::timeout: return "timeout";
    }
    return "?";
}

std::string to_string(ExtensionRule rule) { return rule == ExtensionRule::splice ? "splice" : "rotate"; }

HamiltonResult hamiltonian_cycle_dp(const Graph& g) {
    const int n = g.order();
    if (n > 24) throw std::invalid_argument("bitmask DP limited to 24 vertices");
    if (n < 3) return {};
    // Vertex 0 anchors the cycle; bit i-1 of a mask stands for vertex i.
    const int m = n - 1;
    std::vector<std::uint32_t> nbr(m);
    for (int i = 0; i < m; ++i) {
        (g.neighbors(i + 1) - VertexSet{0}).for_each([&](int w) { nbr[i] |= 1u << (w - 1); });
    }
    std::uint32_t from_start = 0;
    g.neighbors(0).for_each([&](int w) { from_start |= 1u << (w - 1); });

    const std::uint32_t full = (1u << m) - 1;
    // reach[mask]: endpoints v in mask of a path 0 -> ... -> v covering {0} ∪ mask.
    std::vector<std::uint32_t> reach(std::size_t{1} << m, 0);
    for (int i = 0; i < m; ++i)
        if (from_start & (1u << i)) reach[1u << i] = 1u << i;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) < 2) continue;
        std::uint32_t ends = 0;
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            if (nbr[v] & reach[mask ^ (1u << v)]) ends |= 1u << v;
        }
        reach[mask] = ends;
    }
    std::uint32_t closing = reach[full] & from_start;
    if (closing == 0) return {HamiltonStatus::none, std::nullopt};

    std::vector<int> path;
    std::uint32_t mask = full;
    int v = std::countr_zero(closing);
    while (true) {
        path.push_back(v + 1);
        std::uint32_t prev_mask = mask ^ (1u << v);
        if (prev_mask == 0) break;
        v = std::countr_zero(reach[prev_mask] & nbr[v]);
        mask = prev_mask;
    }
    path.push_back(0);
    std::reverse(path.begin(), path.end());
    return {HamiltonStatus::found, OrientedCycle(path)};
}

namespace {

class Backtracker {
public:
    Backtracker(const Graph& g, int timeout_ms)
        : g_(g), deadline_(std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms)) {}

    HamiltonResult run() {
        const int n = g_.order();
        if (n < 3) return {};
        unvisited_ = g_.vertices();
        unvisited_.erase(0);
        path_.push_back(0);
        if (search(0)) return {HamiltonStatus::found, OrientedCycle(path_)};
        return {timed_out_ ? HamiltonStatus::timeout : HamiltonStatus::none, std::nullopt};
    }

private:
    bool search(int cur) {
        if (timed_out_) return false;
        if ((++nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_) {
            timed_out_ = true;
            return false;
        }
        if (unvisited_.empty()) return g_.adjacent(cur, 0);
        if (!feasible(cur)) return false;

        std::vector<std::pair<int, int>> moves;
        (g_.neighbors(cur) & unvisited_).for_each([&](int w) {
            moves.emplace_back(degree_into(g_, w, unvisited_), w);
        });
        std::sort(moves.begin(), moves.end());
        for (auto [ignored, w] : moves) {
            unvisited_.erase(w);
            path_.push_back(w);
            if (search(w)) return true;
            path_.pop_back();
            unvisited_.insert(w);
            if (timed_out_) return false;
        }
        return false;
    }

    bool feasible(int cur) const {
        // The start must still be reachable for the closing edge.
        if (!g_.neighbors(0).intersects(unvisited_)) return false;
        VertexSet open = unvisited_;
        open.insert(cur);
        open.insert(0);
        bool ok = true;
        unvisited_.for_each([&](int w) {
            if (ok && degree_into(g_, w, open) < 2) ok = false;
        });
        if (!ok) return false;
        VertexSet within = unvisited_;
        within.insert(cur);
        return component_count(g_, within) == 1;
    }

    const Graph& g_;
    std::chrono::steady_clock::time_point deadline_;
    VertexSet unvisited_;
    std::vector<int> path_;
    std::uint64_t nodes_ = 0;
    bool timed_out_ = false;
};

}  // namespace

HamiltonResult hamiltonian_cycle_backtrack(const Graph& g, int timeout_ms) { return Backtracker(g, timeout_ms).run(); }

HamiltonResult hamiltonian_cycle(const Graph& g, const HamiltonOptions& options) {
    if (g.order() < 3) return {};
    if (g.order() <= std::min(options.dp_limit, 24)) return hamiltonian_cycle_dp(g);
    return hamiltonian_cycle_backtrack(g, options.timeout_ms);
}

namespace {

void require_in_graph(const Graph& g, const OrientedCycle& c) {
    for (int v : c.order())
        if (v >= g.order()) throw std::invalid_argument("cycle vertex " + std::to_string(v) + " not in graph");
}

/// Cycle edges (a, a+) ordered by their unordered endpoint pair.
std::vector<std::pair<int, int>> arcs_by_edge(const OrientedCycle& c) {
    std::vector<std::pair<int, int>> arcs;
    for (int a : c.order()) arcs.emplace_back(a, c.successor(a));
    std::sort(arcs.begin(), arcs.end(), [](const auto& p, const auto& q) {
        return std::minmax(p.first, p.second) < std::minmax(q.first, q.second);
    });
    return arcs;
}

std::vector<int> insert_after(const OrientedCycle& c, int a, const std::vector<int>& block) {
    std::vector<int> out;
    out.reserve(c.order().size() + block.size());
    for (int v : c.order()) {
        out.push_back(v);
        if (v == a) out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

VertexSet successors_of(const OrientedCycle& c, const VertexSet& anchors) {
    VertexSet out;
    anchors.for_each([&](int u) { out.insert(c.successor(u)); });
    return out;
}

}  // namespace

ExtensionResult extend_with_vertex(const Graph& g, const OrientedCycle& c, int x) {
    require_in_graph(g, c);
    if (x < 0 || x >= g.order()) throw std::invalid_argument("vertex " + std::to_string(x) + " out of range");
    if (c.contains(x)) throw std::invalid_argument("vertex " + std::to_string(x) + " already on the cycle");

    ExtensionResult result;
    for (auto [a, b] : arcs_by_edge(c)) {
        if (g.adjacent(x, a) && g.adjacent(x, b)) {
            result.cycle = OrientedCycle(insert_after(c, a, {x}));
            result.rule = ExtensionRule::splice;
            return result;
        }
    }

    const VertexSet anchors = g.neighbors(x) & c.vertices();
    const std::vector<int> nbrs = anchors.to_vector();
    for (int u : nbrs) {
        for (int w : nbrs) {
            if (u == w || !g.adjacent(c.successor(u), c.successor(w))) continue;
            // u+ ->C w, x, u <-C w+, closing through the edge w+ u+.
            std::vector<int> seq = c.forward_arc(c.successor(u), w);
            seq.push_back(x);
            auto back = c.backward_arc(u, c.successor(w));
            seq.insert(seq.end(), back.begin(), back.end());
            result.cycle = OrientedCycle(seq);
            result.rule = ExtensionRule::rotate;
            return result;
        }
    }
    result.successors_x = successors_of(c, anchors);
    return result;
}

ExtensionResult extend_with_path(const Graph& g, const OrientedCycle& c, const PathSeg& p) {
    require_in_graph(g, c);
    if (p.vertices.empty()) throw std::invalid_argument("empty path");
    VertexSet on_path;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        int v = p.vertices[i];
        if (v < 0 || v >= g.order()) throw std::invalid_argument("path vertex " + std::to_string(v) + " out of range");
        if (c.contains(v)) throw std::invalid_argument("path vertex " + std::to_string(v) + " lies on the cycle");
        if (on_path.contains(v)) throw std::invalid_argument("path repeats vertex " + std::to_string(v));
        if (i > 0 && !g.adjacent(p.vertices[i - 1], v))
            throw std::invalid_argument("path hop " + std::to_string(p.vertices[i - 1]) + "-" + std::to_string(v) +
                                        " is not an edge");
        on_path.insert(v);
    }
    const int x = p.front();
    const int z = p.back();
    std::vector<int> reversed(p.vertices.rbegin(), p.vertices.rend());

    ExtensionResult result;
    for (auto [a, b] : arcs_by_edge(c)) {
        if (g.adjacent(x, a) && g.adjacent(z, b)) {
            result.cycle = OrientedCycle(insert_after(c, a, p.vertices));
            return result;
        }
        if (g.adjacent(z, a) && g.adjacent(x, b)) {
            result.cycle = OrientedCycle(insert_after(c, a, reversed));
            return result;
        }
    }

    const VertexSet anchors_x = g.neighbors(x) & c.vertices();
    const VertexSet anchors_z = g.neighbors(z) & c.vertices();
    for (int u : anchors_x.to_vector()) {
        for (int w : anchors_z.to_vector()) {
            if (u == w || !g.adjacent(c.successor(u), c.successor(w))) continue;
            // u+ ->C w, z P x, u <-C w+, closing through w+ u+.
            std::vector<int> seq = c.forward_arc(c.successor(u), w);
            seq.insert(seq.end(), reversed.begin(), reversed.end());
            auto back = c.backward_arc(u, c.successor(w));
            seq.insert(seq.end(), back.begin(), back.end());
            result.cycle = OrientedCycle(seq);
            result.rule = ExtensionRule::rotate;
            return result;
        }
    }
    result.successors_x = successors_of(c, anchors_x);
    result.successors_z = successors_of(c, anchors_z);
    return result;
}

bool validate_cycle(const Graph& g, const OrientedCycle& c, const VertexSet& required) {
    const auto& seq = c.order();
    for (std::size_t i = 0; i < seq.size(); ++i) {
        int a = seq[i];
        int b = seq[(i + 1) % seq.size()];
        if (a >= g.order() || b >= g.order() || !g.adjacent(a, b)) return false;
    }
    return required.is_subset_of(c.vertices());
}

}  // namespace toughham
