#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "toughham/graph.hpp"
#include "toughham/rational.hpp"

namespace toughham {

/// Raised when an exact exponential search is requested above its size guard.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ToughnessOptions {
    int exact_bound = 20;
    bool force = false;
};

/// tau(G) with the cutset attaining it.
///
/// For complete graphs `infinite` is set and there is no witness. Disconnected
/// graphs get tau = 0 with the empty witness and `disconnected` set; only
/// connected graphs are meaningful for the theory.
struct ToughnessCertificate {
    bool infinite = false;
    bool disconnected = false;
    Rational tau;
    std::optional<VertexSet> witness;
    int components = 0;

    /// "tau=inf" or "tau=p/q witness={...}"
    [[nodiscard]] std::string to_string() const;
};

/// Exact toughness by size-ordered cutset enumeration with the bound
/// |S| / min(n - |S|, alpha(G)) >= best. Ties go to the smallest, then
/// lexicographically least, minimizing cutset.
/// Throws CapacityError when n > options.exact_bound unless options.force.
ToughnessCertificate toughness(const Graph& g, const ToughnessOptions& options = {});

struct ToughnessTest {
    bool tough = true;
    std::optional<VertexSet> violation;  // |S| < t * c(G - S)
};

/// Exact t-toughness decision; agrees with toughness(g).tau >= t.
ToughnessTest is_t_tough(const Graph& g, const Rational& t, const ToughnessOptions& options = {});

/// Independence number by branch and bound (used as a component-count cap).
int independence_number(const Graph& g);

struct CutsetCandidate {
    VertexSet cutset;
    int components = 0;
    Rational ratio;
};

/// Repeatedly drops from s the least vertex adjacent to at most one component
/// of G - s. The result separates at least as many components with fewer vertices.
VertexSet shrink_cutset(const Graph& g, VertexSet s);

/// Distinct cutsets found by neighborhood seeds (every N(v), every
/// N(u) ∪ N(v) - {u, v}) and `samples` random maximal-independent-set seeds,
/// each passed through shrink_cutset. Sorted by ratio, size, then lexicographically.
std::vector<CutsetCandidate> heuristic_cutsets(const Graph& g, int samples, std::uint64_t seed);

struct FalsifierVerdict {
    bool violation_found = false;
    std::optional<CutsetCandidate> violation;  // exact recheck: |S| < t * c(G - S)
    std::optional<CutsetCandidate> best;       // lowest ratio seen
};

/// Randomized search for a t-toughness violation on graphs beyond the exact bound.
/// A violation is always genuine; its absence proves nothing.
FalsifierVerdict toughness_lower_bound_check(const Graph& g, const Rational& t, int samples, std::uint64_t seed);

}  // namespace toughham
