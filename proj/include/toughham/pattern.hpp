#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toughham/graph.hpp"

namespace toughham {

/// An induced copy of a named pattern: vertices[i] is the host vertex playing
/// pattern vertex i, and the induced edge set matches exactly under that map.
struct PatternWitness {
    std::string pattern;
    std::vector<int> vertices;
};

inline constexpr int kMaxPatternOrder = 6;

/// P2 ∪ P3 with pattern vertices 0-1 (the edge) and 2-3-4 (the path).
Graph p2_union_p3();
/// 2K2 with pattern edges 0-1 and 2-3.
Graph two_k2();

/// Generic search: k-subsets of V(g) in lexicographic order, degree-sequence
/// filter, then the first bijection (lexicographic permutation) that matches.
/// Throws std::invalid_argument for patterns with more than six vertices.
std::optional<PatternWitness> find_induced(const Graph& g, const Graph& pattern, const std::string& name = "pattern");

struct FreenessVerdict {
    bool free = true;
    std::optional<PatternWitness> witness;
};

/// Edge-anchored search: for each edge uv (lexicographic) look for an induced P3
/// inside V - N[u] - N[v].
FreenessVerdict check_p2p3_free(const Graph& g);
bool is_p2p3_free(const Graph& g);

/// Same anchoring with a second edge instead of a P3.
FreenessVerdict check_2k2_free(const Graph& g);
bool is_2k2_free(const Graph& g);

/// True iff the witness tuple really induces `pattern` in g.
bool witness_matches(const Graph& g, const Graph& pattern, const std::vector<int>& vertices);

}  // namespace toughham
