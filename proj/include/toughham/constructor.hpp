#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "toughham/graph.hpp"
#include "toughham/hamiltonicity.hpp"
#include "toughham/pattern.hpp"
#include "toughham/rational.hpp"
#include "toughham/structure.hpp"

namespace toughham {

/// An inequality asserted during a construction, with both sides evaluated exactly.
///
/// `kind` names the measured quantity and `bound` the right-hand formula
/// ("n/16", "9n/32", "3n/20", "4c", "s", "5", ...). Both sides can be
/// recomputed from the graph and the step alone.
struct TraceCheck {
    std::string kind;
    std::string operand = "-";
    Rational lhs;
    std::string relation;  // one of < <= > >= =
    std::string bound;
    Rational rhs;
    bool holds = false;
};

/// Rule ids: splice, rotate, vertex-insert, path-insert, claim-hcycle-assembly,
/// case1-matching, case1-fallback, case2-cutset, oracle-fallback.
struct TraceStep {
    std::string rule;
    std::string via = "-";   // splice or rotate for insertions
    std::vector<int> vertices;
    VertexSet set;           // cutset S, or V2 for case1-matching
    std::uint64_t cycle_hash = 0;  // 0 while no cycle exists
    std::vector<TraceCheck> checks;
};

struct ConstructionTrace {
    std::string graph6;
    std::vector<TraceStep> steps;

    [[nodiscard]] bool has_rule(const std::string& rule) const;
    [[nodiscard]] bool all_checks_hold() const;
};

/// Line-oriented, tab-separated text form.
std::string serialize_trace(const ConstructionTrace& trace);
/// Throws std::invalid_argument on malformed text.
ConstructionTrace parse_trace(const std::string& text);

struct ConstructionFailure {
    std::string step;
    std::string detail;
    VertexSet witness;        // e.g. the independent successor set of a failed extension
    VertexSet witness_extra;  // W_z for a failed path extension
    std::optional<PatternWitness> pattern;
};

struct ConstructOptions {
    int timeout_ms = 10000;
    int heuristic_samples = 16;
    std::uint64_t seed = 1;
    /// Case 1: try the cutset route before the oracle on G - V2.
    bool prefer_cutset_route = true;
};

struct Construction {
    std::optional<OrientedCycle> cycle;
    ConstructionTrace trace;
    std::optional<ConstructionFailure> failure;

    [[nodiscard]] bool ok() const { return cycle.has_value(); }
};

/// First unmet hypothesis of the cutset procedure, or nullopt. Names:
/// order, connected, p2p3-free, cutset, cutset-size, clique-components, edge-degree-sum.
std::optional<PreconditionError> cutset_precondition_failure(const Graph& g, const VertexSet& s,
                                                             bool check_freeness = true);

/// Cycle assembly from a cutset: decomposition, base cycle through the large
/// clique components, then single-vertex and path insertions.
/// Throws PreconditionError when a hypothesis does not hold. A claimed structure
/// that turns out to be absent yields `failure` instead of a cycle.
Construction assemble_from_cutset(const Graph& g, const VertexSet& s, const ConstructOptions& options = {});

enum class DriverVerdict { hamiltonian, rejected_not_free, hypotheses_unmet_no_cycle, timeout, construction_failed };

std::string to_string(DriverVerdict verdict);

struct DriverResult {
    DriverVerdict verdict = DriverVerdict::construction_failed;
    std::optional<OrientedCycle> cycle;
    ConstructionTrace trace;
    std::optional<ConstructionFailure> failure;
    std::optional<PatternWitness> witness;  // set when the input is not (P2 ∪ P3)-free
    std::string route;                      // oracle, case1, case1-cutset, case2
};

/// Hamiltonian cycle for a (P2 ∪ P3)-free graph following the two-case argument,
/// with the exhaustive oracle for small or complete inputs and as a fallback when
/// the minimum degree exceeds n/16 - 1. Throws std::invalid_argument for n < 3.
DriverResult hamiltonian_driver(const Graph& g, const ConstructOptions& options = {});

struct ReplayResult {
    bool ok = false;
    int failed_step = -1;
    std::string reason;

    explicit operator bool() const { return ok; }
};

/// Re-executes every step against g and recomputes every check.
ReplayResult replay_trace(const Graph& g, const ConstructionTrace& trace);

}  // namespace toughham
