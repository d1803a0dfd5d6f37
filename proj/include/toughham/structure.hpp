#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "toughham/graph.hpp"
#include "toughham/hamiltonicity.hpp"
#include "toughham/pattern.hpp"

namespace toughham {

/// A hypothesis of an operation does not hold. `name` identifies which one.
class PreconditionError : public std::runtime_error {
public:
    PreconditionError(std::string name, const std::string& detail, std::optional<PatternWitness> witness = std::nullopt)
        : std::runtime_error(name + ": " + detail), name_(std::move(name)), witness_(std::move(witness)) {}

    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] const std::optional<PatternWitness>& witness() const { return witness_; }

private:
    std::string name_;
    std::optional<PatternWitness> witness_;
};

/// A cutset whose ratio contradicts the toughness the caller assumed, found
/// while building a structure that the assumption guarantees.
class ToughnessRefutation : public std::runtime_error {
public:
    ToughnessRefutation(const std::string& what, VertexSet deficient, VertexSet cutset)
        : std::runtime_error(what), deficient_(deficient), cutset_(cutset) {}

    [[nodiscard]] const VertexSet& deficient() const { return deficient_; }
    [[nodiscard]] const VertexSet& cutset() const { return cutset_; }

private:
    VertexSet deficient_;
    VertexSet cutset_;
};

struct Star {
    int center = -1;
    std::vector<int> leaves;
};

/// Vertex-disjoint stars with centers on the X side and leaves on the Y side.
struct StarMatching {
    std::vector<Star> stars;
    VertexSet x_side;
    VertexSet y_side;

    [[nodiscard]] VertexSet covered() const;
    [[nodiscard]] VertexSet centers() const;
    [[nodiscard]] VertexSet leaves() const;
};

using Demand = std::function<int(int)>;

struct StarMatchingResult {
    std::optional<StarMatching> matching;
    /// Hall-type certificate: |N(S) ∩ Y| < sum of f over S.
    std::optional<VertexSet> deficient;

    [[nodiscard]] bool ok() const { return matching.has_value(); }
};

/// Every x in X becomes the center of a star with exactly f(x) leaves in Y, or a
/// deficient subset of X is returned. Max-flow on the demand-expanded bipartite graph.
StarMatchingResult star_matching(const VertexSet& x_side, const VertexSet& y_side, const Graph& g, const Demand& f);

enum class VerdictStatus { pass, violation, precondition };

std::string to_string(VerdictStatus status);

struct StructureVerdict {
    VerdictStatus status = VerdictStatus::pass;
    std::string detail;
    std::vector<VertexSet> components;  // offending components, if any
    int vertex = -1;                    // offending cutset vertex, if any
    int missed = -1;                    // component vertex it fails to see
    std::optional<PatternWitness> witness;

    [[nodiscard]] bool passed() const { return status == VerdictStatus::pass; }
};

/// If some component of G - S is not a clique, all others are trivial; if two are
/// nontrivial, all are cliques. Requires g (P2 ∪ P3)-free and s a cutset.
StructureVerdict check_component_shapes(const Graph& g, const VertexSet& s);

/// x in S adjacent to exactly one component D, with a nontrivial component it
/// misses, sees all of D.
StructureVerdict check_single_attachment(const Graph& g, const VertexSet& s, int x);

/// Clique-connection statements (i)-(iii) for a cutset whose vertices each see
/// at least two components.
StructureVerdict check_clique_connections(const Graph& g, const VertexSet& s);

/// Cutset analysis used by the cycle assembly.
struct CutsetDecomposition {
    VertexSet original;
    VertexSet s1;  // after absorbing single-component vertices
    VertexSet s0;  // vertices of s1 adjacent to no component of G - s1
    VertexSet s2;  // s1 - s0
    int components_original = 0;  // c(G - S)
    int components_s1 = 0;        // c(G - S1)

    /// Components of G - S2 sorted by size (descending), ties by least vertex.
    std::vector<VertexSet> parts;
    int large_count = 0;       // t: parts with at least 3 vertices
    int nontrivial_count = 0;  // parts with at least 2 vertices

    VertexSet q1;  // sees a component other than the first two
    VertexSet q2;  // sees fewer than (|D1| - 1) / 2 vertices of D1
    VertexSet q3;  // sees fewer than (|D2| - 1) / 2 vertices of D2

    /// Union of the parts with index >= max(t + 1, 3) (1-based).
    VertexSet w;
    /// V(D2) when t == 1 and D2 is not absorbed by the base cycle: otherwise
    /// nothing would ever cover it. These vertices get stars like W.
    VertexSet stranded;
    /// K_{1,2}-matching from W ∪ stranded into S2.
    StarMatching m;

    [[nodiscard]] int component_count() const { return static_cast<int>(parts.size()); }
};

/// Absorbs (least index first) every vertex of s that sees exactly one component,
/// splits off S0 and S2, and builds Q1..Q3, W and the K_{1,2}-matching.
/// Throws PreconditionError (not a cutset, fewer than two nontrivial clique
/// components, not (P2 ∪ P3)-free) or ToughnessRefutation (no matching).
CutsetDecomposition decompose_cutset(const Graph& g, const VertexSet& s);

/// Names of the structural invariants the decomposition violates (empty when sound).
std::vector<std::string> decomposition_violations(const Graph& g, const CutsetDecomposition& d);

}  // namespace toughham
