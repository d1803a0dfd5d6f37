#include "toughham/constructor.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "flow_network.hpp"
#include "toughham/graph_io.hpp"
#include "toughham/toughness.hpp"

namespace toughham {

bool ConstructionTrace::has_rule(const std::string& rule) const {
    return std::any_of(steps.begin(), steps.end(), [&](const TraceStep& s) { return s.rule == rule; });
}

bool ConstructionTrace::all_checks_hold() const {
    for (const auto& step : steps)
        for (const auto& c : step.checks)
            if (!c.holds) return false;
    return true;
}

std::string to_string(DriverVerdict verdict) {
    switch (verdict) {
        case DriverVerdict::hamiltonian: return "hamiltonian";
        case DriverVerdict::rejected_not_free: return "rejected-not-free";
        case DriverVerdict::hypotheses_unmet_no_cycle: return "hypotheses-unmet-no-cycle";
        case DriverVerdict::timeout: return "timeout";
        case DriverVerdict::construction_failed: return "construction-failed";
    }
    return "?";
}

namespace {

struct CheckSpec {
    std::string kind;
    std::string operand;
    std::string relation;
    std::string bound;
};

struct EvalContext {
    const Graph& g;
    const TraceStep& step;
    const OrientedCycle* before = nullptr;
    const OrientedCycle* after = nullptr;
    const CutsetDecomposition* decomposition = nullptr;
};

int parse_int(std::string_view text) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
    return value;
}

const CutsetDecomposition& need_decomposition(const EvalContext& ctx) {
    if (ctx.decomposition == nullptr) throw std::invalid_argument("check needs a cutset decomposition");
    return *ctx.decomposition;
}

VertexSet low_degree_vertices(const Graph& g) {
    VertexSet v1;
    for (int v = 0; v < g.order(); ++v)
        if (8 * g.degree(v) <= 3 * g.order()) v1.insert(v);
    return v1;
}

Rational measure(const std::string& kind, const std::string& operand, const EvalContext& ctx) {
    const Graph& g = ctx.g;
    if (kind == "deg-on-cycle") {
        if (ctx.before == nullptr) throw std::invalid_argument("deg-on-cycle without a cycle");
        int v = parse_int(operand);
        if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
        return Rational(degree_into(g, v, ctx.before->vertices()));
    }
    if (kind == "cycle-size") {
        if (ctx.after == nullptr) throw std::invalid_argument("cycle-size without a cycle");
        return Rational(ctx.after->size());
    }
    if (kind == "cutset-size") return Rational(ctx.step.set.size());
    if (kind == "d1-size") return Rational(need_decomposition(ctx).parts.front().size());
    if (kind == "matching-leaves") return Rational(need_decomposition(ctx).m.leaves().size());
    if (kind == "spare-s2") {
        const auto& d = need_decomposition(ctx);
        return Rational((d.s2 - d.q2 - d.q3).size());
    }
    if (kind == "spare-q1") {
        const auto& d = need_decomposition(ctx);
        return Rational((d.q1 - d.m.covered()).size());
    }
    if (kind == "edge-sum") {
        auto dash = operand.find('-');
        if (dash == std::string::npos) throw std::invalid_argument("edge operand must be u-v");
        int u = parse_int(std::string_view(operand).substr(0, dash));
        int v = parse_int(std::string_view(operand).substr(dash + 1));
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v))
            throw std::invalid_argument("edge operand is not an edge");
        return Rational(g.degree(u) + g.degree(v));
    }
    if (kind == "min-edge-sum") {
        int best = std::numeric_limits<int>::max();
        for (auto [u, v] : g.edges()) best = std::min(best, g.degree(u) + g.degree(v));
        return Rational(best);
    }
    if (kind == "v1-size") return Rational(low_degree_vertices(g).size());
    if (kind == "v2-size") return Rational(ctx.step.set.size());
    if (kind == "min-component") {
        int smallest = std::numeric_limits<int>::max();
        for (const auto& c : components(g, g.vertices() - ctx.step.set).parts) smallest = std::min(smallest, c.size());
        return Rational(smallest);
    }
    throw std::invalid_argument("unknown check kind '" + kind + "'");
}

Rational bound_value(const std::string& bound, const EvalContext& ctx) {
    const int n = ctx.g.order();
    if (bound == "s") return Rational(ctx.step.set.size());
    if (bound == "4c") return Rational(4 * need_decomposition(ctx).component_count());
    if (auto pos = bound.find('n'); pos != std::string::npos) {
        // "<p>n/<q>" with p optional
        std::string_view text(bound);
        int p = pos == 0 ? 1 : parse_int(text.substr(0, pos));
        if (text.substr(pos + 1, 1) != "/") throw std::invalid_argument("malformed bound '" + bound + "'");
        int q = parse_int(text.substr(pos + 2));
        if (q == 0) throw std::invalid_argument("malformed bound '" + bound + "'");
        return Rational(static_cast<std::int64_t>(p) * n, q);
    }
    return Rational(parse_int(bound));
}

bool compare(const Rational& lhs, const std::string& relation, const Rational& rhs) {
    if (relation == "<") return lhs < rhs;
    if (relation == "<=") return lhs <= rhs;
    if (relation == ">") return lhs > rhs;
    if (relation == ">=") return lhs >= rhs;
    if (relation == "=") return lhs == rhs;
    throw std::invalid_argument("unknown relation '" + relation + "'");
}

TraceCheck evaluate(const CheckSpec& spec, const EvalContext& ctx) {
    TraceCheck c;
    c.kind = spec.kind;
    c.operand = spec.operand.empty() ? "-" : spec.operand;
    c.relation = spec.relation;
    c.bound = spec.bound;
    c.lhs = measure(spec.kind, c.operand, ctx);
    c.rhs = bound_value(spec.bound, ctx);
    c.holds = compare(c.lhs, c.relation, c.rhs);
    return c;
}

std::string describe(const TraceCheck& c) {
    return c.kind + (c.operand == "-" ? "" : "(" + c.operand + ")") + " = " + c.lhs.to_string() + " " + c.relation +
           " " + c.bound + " = " + c.rhs.to_string();
}

/// from, the rest of `clique` ascending, to. Assumes from != to, both in clique.
std::vector<int> clique_path(int from, const VertexSet& clique, int to) {
    std::vector<int> out{from};
    VertexSet middle = clique;
    middle.erase(from);
    middle.erase(to);
    middle.for_each([&](int v) { out.push_back(v); });
    out.push_back(to);
    return out;
}

/// Accumulates steps on a growing cycle. Every method returns false after
/// recording a failure.
class Builder {
public:
    Builder(const Graph& g, const ConstructOptions& options) : g_(g), n_(g.order()), options_(options) {
        trace_.graph6 = encode_graph6(g);
    }

    Construction finish() {
        Construction out;
        out.trace = std::move(trace_);
        out.failure = failure_;
        if (!failure_) {
            if (cycle_ && validate_cycle(g_, *cycle_, g_.vertices()))
                out.cycle = cycle_;
            else
                out.failure = ConstructionFailure{"final-validation", "assembled cycle is not hamiltonian", {}, {}, {}};
        }
        return out;
    }

    bool fail(std::string step, std::string detail, VertexSet witness = {}, VertexSet extra = {},
              std::optional<PatternWitness> pattern = std::nullopt) {
        if (!failure_) failure_ = ConstructionFailure{std::move(step), std::move(detail), witness, extra, std::move(pattern)};
        return false;
    }

    /// Pushes `step` with the evaluated checks; fails on the first check that does not hold.
    bool push(TraceStep step, const std::vector<CheckSpec>& specs, const std::optional<OrientedCycle>& after,
              const CutsetDecomposition* d = nullptr) {
        EvalContext ctx{g_, step, cycle_ ? &*cycle_ : nullptr, after ? &*after : nullptr, d};
        for (const auto& spec : specs) step.checks.push_back(evaluate(spec, ctx));
        if (after) cycle_ = after;
        step.cycle_hash = cycle_ ? cycle_->hash() : 0;
        std::optional<TraceCheck> broken;
        for (const auto& c : step.checks)
            if (!c.holds && !broken) broken = c;
        std::string rule = step.rule;
        trace_.steps.push_back(std::move(step));
        if (broken) return fail(rule, "check failed: " + describe(*broken));
        return true;
    }

    /// Evaluates gate checks against the current cycle without recording them.
    std::optional<TraceCheck> broken_gate(const TraceStep& step, const std::vector<CheckSpec>& specs,
                                          std::vector<TraceCheck>& out) const {
        EvalContext ctx{g_, step, cycle_ ? &*cycle_ : nullptr, nullptr, nullptr};
        std::optional<TraceCheck> broken;
        for (const auto& spec : specs) {
            out.push_back(evaluate(spec, ctx));
            if (!out.back().holds && !broken) broken = out.back();
        }
        return broken;
    }

    bool insert_vertex(int x) {
        TraceStep step;
        step.rule = "vertex-insert";
        step.vertices = {x};
        if (auto broken = broken_gate(step, {{"deg-on-cycle", std::to_string(x), ">", "n/16"}}, step.checks)) {
            step.cycle_hash = cycle_->hash();
            trace_.steps.push_back(step);
            return fail("vertex-insert", "check failed: " + describe(*broken));
        }
        ExtensionResult r = extend_with_vertex(g_, *cycle_, x);
        if (!r.ok())
            return fail("vertex-insert", "vertex " + std::to_string(x) + " cannot be absorbed; successors independent",
                        r.successors_x);
        step.via = to_string(r.rule);
        cycle_ = r.cycle;
        step.cycle_hash = cycle_->hash();
        trace_.steps.push_back(std::move(step));
        return true;
    }

    bool insert_path(const std::vector<int>& path) {
        TraceStep step;
        step.rule = "path-insert";
        step.vertices = path;
        std::vector<CheckSpec> gates{{"deg-on-cycle", std::to_string(path.front()), ">", "9n/32"},
                                     {"deg-on-cycle", std::to_string(path.back()), ">", "9n/32"}};
        if (auto broken = broken_gate(step, gates, step.checks)) {
            step.cycle_hash = cycle_->hash();
            trace_.steps.push_back(step);
            return fail("path-insert", "check failed: " + describe(*broken));
        }
        ExtensionResult r = extend_with_path(g_, *cycle_, PathSeg{path});
        if (!r.ok())
            return fail("path-insert", "path cannot be absorbed; no edge between successor sets", r.successors_x,
                        r.successors_z);
        step.via = to_string(r.rule);
        cycle_ = r.cycle;
        step.cycle_hash = cycle_->hash();
        trace_.steps.push_back(std::move(step));
        return true;
    }

    /// Stars whose center has more than n/16 neighbors on the current cycle go in
    /// vertex by vertex; the rest as leaf-center-leaf paths.
    bool insert_split_stars(const std::vector<Star>& stars) {
        std::vector<const Star*> first;
        std::vector<const Star*> second;
        const VertexSet on_cycle = cycle_->vertices();
        for (const auto& s : stars) {
            if (16 * degree_into(g_, s.center, on_cycle) > n_)
                first.push_back(&s);
            else
                second.push_back(&s);
        }
        for (const Star* s : first) {
            if (!insert_vertex(s->center)) return false;
            for (int leaf : s->leaves)
                if (!insert_vertex(leaf)) return false;
        }
        for (const Star* s : second)
            if (!insert_path({s->leaves[0], s->center, s->leaves[1]})) return false;
        return true;
    }

    bool run_cutset(const VertexSet& s);
    bool run_case1();
    bool run_case2();

    [[nodiscard]] const std::optional<ConstructionFailure>& failure() const { return failure_; }
    [[nodiscard]] bool has_cycle() const { return cycle_.has_value(); }

private:
    struct BaseCycle {
        std::vector<int> order;
        std::vector<CheckSpec> extra_checks;
    };

    std::optional<BaseCycle> base_cycle(const CutsetDecomposition& d);
    bool claims_hold(const CutsetDecomposition& d);

    const Graph& g_;
    int n_;
    ConstructOptions options_;
    ConstructionTrace trace_;
    std::optional<OrientedCycle> cycle_;
    std::optional<ConstructionFailure> failure_;
};

bool Builder::claims_hold(const CutsetDecomposition& d) {
    auto refute = [&](const std::string& claim, const std::string& detail) {
        auto verdict = check_p2p3_free(g_);
        return fail(claim, detail, {}, {}, verdict.witness);
    };
    if (auto bad = decomposition_violations(g_, d); !bad.empty()) return refute("decomposition", bad.front());
    const VertexSet& d1 = d.parts[0];
    const VertexSet& d2 = d.parts[1];
    if (!g_.is_clique(d.q2)) return refute("claim-q2", "Q2 is not a clique");
    if (!g_.is_clique(d.q3)) return refute("claim-q3", "Q3 is not a clique");
    bool ok = true;
    d.q2.for_each([&](int x) { ok = ok && d2.is_subset_of(g_.neighbors(x)); });
    if (!ok) return refute("claim-q2", "a vertex of Q2 misses part of D2");
    d.q3.for_each([&](int x) { ok = ok && d1.is_subset_of(g_.neighbors(x)); });
    if (!ok) return refute("claim-q3", "a vertex of Q3 misses part of D1");
    for (const auto& star : d.m.stars)
        if (d.w.contains(star.center))
            for (int leaf : star.leaves) ok = ok && d.q1.contains(leaf);
    if (!ok) return refute("claim-mvertex", "a matched cutset vertex is outside Q1");
    return true;
}

std::optional<Builder::BaseCycle> Builder::base_cycle(const CutsetDecomposition& d) {
    const VertexSet matched = d.m.covered();
    BaseCycle base;

    if (d.nontrivial_count >= 3) {
        const int t = d.large_count;
        std::vector<int> connectors;
        (d.s2 - matched).for_each([&](int x) {
            if (static_cast<int>(connectors.size()) < t) connectors.push_back(x);
        });
        if (static_cast<int>(connectors.size()) < t) {
            fail("claim-hcycle-assembly", "not enough connector vertices in S2 - V(M)");
            return std::nullopt;
        }
        for (int i = 0; i < t; ++i) {
            const VertexSet& part = d.parts[static_cast<std::size_t>(i)];
            const int prev = connectors[static_cast<std::size_t>((i + t - 1) % t)];
            const int x = connectors[static_cast<std::size_t>(i)];
            VertexSet into = g_.neighbors(prev) & part;
            if (into.empty()) {
                fail("claim-hcycle-assembly", "connector " + std::to_string(prev) + " misses a large component");
                return std::nullopt;
            }
            const int u = into.first();
            VertexSet out = (g_.neighbors(x) & part) - VertexSet{u};
            if (out.empty()) {
                fail("claim-hcycle-assembly", "connector " + std::to_string(x) + " lacks a second neighbor");
                return std::nullopt;
            }
            for (int v : clique_path(u, part, out.first())) base.order.push_back(v);
            base.order.push_back(x);
        }
        return base;
    }

    const VertexSet g1 = d.parts[0] | d.q3;
    const VertexSet g2 = d.parts[1] | d.q2;
    if (!g_.is_clique(g1) || !g_.is_clique(g2)) {
        fail("claim-hcycle-assembly", "D1 + Q3 or D2 + Q2 is not complete", {}, {}, check_p2p3_free(g_).witness);
        return std::nullopt;
    }
    if (d.large_count == 1 && d.q2.empty()) {
        base.order = g1.to_vector();
        return base;
    }

    // Two disjoint cross edges.
    for (int a1 : g1.to_vector()) {
        for (int b1 : (g_.neighbors(a1) & g2).to_vector()) {
            for (int a2 : (g1 - VertexSet{a1}).to_vector()) {
                VertexSet b2s = (g_.neighbors(a2) & g2) - VertexSet{b1};
                if (b2s.empty()) continue;
                const int b2 = b2s.first();
                base.order = clique_path(a1, g1, a2);
                for (int v : clique_path(b2, g2, b1)) base.order.push_back(v);
                return base;
            }
        }
    }

    if (d.component_count() == 2) {
        base.extra_checks.push_back({"spare-s2", "-", ">=", "29"});
        // Two vertex-disjoint G1-G2 paths with interiors outside G1 and G2, by
        // unit vertex capacities.
        const VertexSet rest = g_.vertices() - g1 - g2;
        const int source = 2 * n_;
        const int sink = 2 * n_ + 1;
        detail::FlowNetwork net(2 * n_ + 2);
        for (int v = 0; v < n_; ++v) net.add(2 * v, 2 * v + 1, 1);
        g1.for_each([&](int v) { net.add(source, 2 * v, 1); });
        g2.for_each([&](int v) { net.add(2 * v + 1, sink, 1); });
        for (auto [a, b] : g_.edges()) {
            for (auto [u, w] : {Edge{a, b}, Edge{b, a}}) {
                bool from_ok = g1.contains(u) || rest.contains(u);
                bool to_ok = rest.contains(w) || g2.contains(w);
                if (from_ok && to_ok) net.add(2 * u + 1, 2 * w, 1);
            }
        }
        if (net.max_flow(source, sink, 2) < 2) {
            fail("claim-hcycle-assembly", "no two disjoint paths between D1 + Q3 and D2 + Q2");
            return std::nullopt;
        }
        std::vector<std::vector<int>> paths;
        g1.for_each([&](int start) {
            if (net.flow(source, 2 * start) == 0) return;
            std::vector<int> path{start};
            int cur = start;
            while (!g2.contains(cur)) {
                int next = -1;
                for (int w = 0; w < n_ && next == -1; ++w)
                    if (net.flow(2 * cur + 1, 2 * w) > 0) next = w;
                if (next == -1) break;
                path.push_back(next);
                cur = next;
            }
            paths.push_back(std::move(path));
        });
        if (paths.size() != 2 || !g2.contains(paths[0].back()) || !g2.contains(paths[1].back())) {
            fail("claim-hcycle-assembly", "flow decomposition did not yield two paths");
            return std::nullopt;
        }
        const auto& p1 = paths[0];
        const auto& p2 = paths[1];
        base.order = p1;  // x1 ... y1
        std::vector<int> across = clique_path(p1.back(), g2, p2.back());
        base.order.insert(base.order.end(), across.begin() + 1, across.end());  // ... y2
        for (auto it = p2.rbegin() + 1; it != p2.rend(); ++it) base.order.push_back(*it);  // ... x2
        std::vector<int> back = clique_path(p2.front(), g1, p1.front());
        base.order.insert(base.order.end(), back.begin() + 1, back.end() - 1);
        return base;
    }

    base.extra_checks.push_back({"spare-q1", "-", ">=", "13"});
    const std::vector<int> spare = (d.q1 - matched).to_vector();
    for (std::size_t i = 0; i < spare.size(); ++i) {
        for (std::size_t j = i + 1; j < spare.size(); ++j) {
            const int x = spare[i];
            const int y = spare[j];
            for (int x1 : (g_.neighbors(x) & g1).to_vector()) {
                for (int x2 : (g_.neighbors(x) & g2).to_vector()) {
                    VertexSet y1s = (g_.neighbors(y) & g1) - VertexSet{x1};
                    VertexSet y2s = (g_.neighbors(y) & g2) - VertexSet{x2};
                    if (y1s.empty() || y2s.empty()) continue;
                    const int y1 = y1s.first();
                    const int y2 = y2s.first();
                    base.order = {x};
                    for (int v : clique_path(x2, g2, y2)) base.order.push_back(v);
                    base.order.push_back(y);
                    for (int v : clique_path(y1, g1, x1)) base.order.push_back(v);
                    return base;
                }
            }
        }
    }
    fail("claim-hcycle-assembly", "no pair of Q1 - V(M) vertices reaches both cliques twice");
    return std::nullopt;
}

bool Builder::run_cutset(const VertexSet& s) {
    std::optional<CutsetDecomposition> decomposition;
    try {
        decomposition = decompose_cutset(g_, s);
    } catch (const ToughnessRefutation& e) {
        return fail("decompose", e.what(), e.cutset(), e.deficient());
    }
    const CutsetDecomposition& d = *decomposition;

    TraceStep step;
    step.rule = "claim-hcycle-assembly";
    step.set = s;
    std::vector<CheckSpec> checks{{"cutset-size", "-", "<=", "3n/4"},
                                  {"d1-size", "-", ">=", "5"},
                                  {"matching-leaves", "-", "<=", "4c"}};
    {
        EvalContext ctx{g_, step, nullptr, nullptr, &d};
        for (const auto& spec : checks) {
            TraceCheck c = evaluate(spec, ctx);
            if (!c.holds) {
                step.checks.push_back(c);
                trace_.steps.push_back(step);
                return fail("claim-hcycle-assembly", "check failed: " + describe(c));
            }
        }
    }
    if (!claims_hold(d)) return false;
    auto base = base_cycle(d);
    if (!base) return false;
    OrientedCycle c(base->order);
    if (!validate_cycle(g_, c, VertexSet{}) || c.vertices().intersects(d.m.covered()))
        return fail("claim-hcycle-assembly", "assembled base cycle is invalid");

    const bool small_cutset = 12 * s.size() <= 7 * n_;
    checks.insert(checks.end(), base->extra_checks.begin(), base->extra_checks.end());
    checks.push_back({"cycle-size", "-", ">=", "3n/20"});
    checks.push_back({"cutset-size", "-", small_cutset ? "<=" : ">", "7n/12"});
    step.vertices = c.order();
    if (!push(step, checks, c, &d)) return false;

    const VertexSet pending = d.s2 - cycle_->vertices() - d.m.covered();
    for (int x : pending.to_vector())
        if (!insert_vertex(x)) return false;

    if (small_cutset) {
        for (const auto& star : d.m.stars)
            if (!insert_path({star.leaves[0], star.center, star.leaves[1]})) return false;
        return true;
    }
    return insert_split_stars(d.m.stars);
}

bool Builder::run_case2() {
    int best_u = -1;
    int best_v = -1;
    int best_sum = std::numeric_limits<int>::max();
    for (auto [u, v] : g_.edges()) {
        int sum = g_.degree(u) + g_.degree(v);
        if (sum < best_sum) {
            best_sum = sum;
            best_u = u;
            best_v = v;
        }
    }
    VertexSet s = g_.neighbors(best_u) | g_.neighbors(best_v);
    s.erase(best_u);
    s.erase(best_v);
    TraceStep step;
    step.rule = "case2-cutset";
    step.vertices = {best_u, best_v};
    step.set = s;
    std::string edge = std::to_string(best_u) + "-" + std::to_string(best_v);
    if (!push(step, {{"edge-sum", edge, "<=", "3n/4"}, {"min-edge-sum", "-", ">=", "s"}}, std::nullopt)) return false;
    if (auto unmet = cutset_precondition_failure(g_, s, false))
        return fail("case2-cutset", unmet->what(), s, {}, unmet->witness());
    return run_cutset(s);
}

bool Builder::run_case1() {
    const VertexSet all = g_.vertices();
    const VertexSet v1 = low_degree_vertices(g_);
    TraceStep matching_step;
    matching_step.rule = "case1-matching";
    matching_step.vertices = v1.to_vector();

    std::vector<Star> stars;
    VertexSet v2;
    if (!v1.empty()) {
        if (16 * v1.size() > n_) {
            push(matching_step, {{"v1-size", "-", "<=", "n/16"}}, std::nullopt);
            return false;
        }
        auto result = star_matching(v1, all - v1, g_, [](int) { return 2; });
        if (!result.ok()) {
            VertexSet cut = g_.neighborhood(*result.deficient) - v1;
            return fail("case1-matching", "low-degree vertices admit no K_{1,2}-matching", cut, *result.deficient);
        }
        stars = result.matching->stars;
        v2 = result.matching->covered();
    }
    matching_step.set = v2;
    if (!push(matching_step, {{"v1-size", "-", "<=", "n/16"}, {"v2-size", "-", "<=", "3n/16"}}, std::nullopt))
        return false;

    const InducedSubgraph g1 = induced_subgraph(g_, all - v2);

    if (options_.prefer_cutset_route) {
        std::vector<VertexSet> candidates;
        if (g1.graph.order() <= ToughnessOptions{}.exact_bound && !g1.graph.is_complete()) {
            auto cert = toughness(g1.graph);
            if (cert.witness && !cert.witness->empty()) candidates.push_back(g1.to_host(*cert.witness));
        }
        for (const auto& cand : heuristic_cutsets(g1.graph, options_.heuristic_samples, options_.seed))
            candidates.push_back(g1.to_host(cand.cutset));
        for (const VertexSet& s1 : candidates) {
            const VertexSet s = s1 | v2;
            if (cutset_precondition_failure(g_, s, false)) continue;
            TraceStep step;
            step.rule = "case1-fallback";
            step.vertices = s1.to_vector();
            step.set = s;
            if (!push(step, {{"cutset-size", "-", "<=", "3n/4"}, {"min-edge-sum", "-", ">=", "s"}}, std::nullopt))
                return false;
            return run_cutset(s);
        }
    }

    HamiltonOptions ho;
    ho.timeout_ms = options_.timeout_ms;
    HamiltonResult r = hamiltonian_cycle(g1.graph, ho);
    if (r.status != HamiltonStatus::found)
        return fail("case1-fallback", "no usable cutset and G - V2 " +
                                          std::string(r.status == HamiltonStatus::timeout ? "timed out" : "is not hamiltonian"));
    TraceStep step;
    step.rule = "oracle-fallback";
    step.vertices = g1.to_host(r.cycle->order());
    OrientedCycle c(step.vertices);
    if (!push(step, {}, c)) return false;
    return insert_split_stars(stars);
}

Construction oracle_only(const Graph& g, const ConstructOptions& options, HamiltonStatus& status) {
    Builder b(g, options);
    HamiltonOptions ho;
    ho.timeout_ms = options.timeout_ms;
    HamiltonResult r = hamiltonian_cycle(g, ho);
    status = r.status;
    if (r.status == HamiltonStatus::found) {
        TraceStep step;
        step.rule = "oracle-fallback";
        step.vertices = r.cycle->order();
        b.push(step, {}, *r.cycle);
    } else {
        b.fail("oracle-fallback", "oracle status " + to_string(r.status));
    }
    return b.finish();
}

}  // namespace

std::optional<PreconditionError> cutset_precondition_failure(const Graph& g, const VertexSet& s, bool check_freeness) {
    const int n = g.order();
    if (n < 31) return PreconditionError("order", "n=" + std::to_string(n) + " < 31");
    if (!is_connected(g)) return PreconditionError("connected", "graph is disconnected");
    if (check_freeness) {
        if (auto verdict = check_p2p3_free(g); !verdict.free)
            return PreconditionError("p2p3-free", "graph contains an induced P2+P3", verdict.witness);
    }
    if (!s.is_subset_of(g.vertices())) return PreconditionError("cutset", "S has out-of-range vertices");
    const ComponentPartition parts = components(g, g.vertices() - s);
    if (parts.count() < 2) return PreconditionError("cutset", "G - S is connected");
    if (4 * s.size() > 3 * n)
        return PreconditionError("cutset-size", "|S|=" + std::to_string(s.size()) + " > 3n/4=" + Rational(3 * n, 4).to_string());
    int cliques = 0;
    for (const auto& c : parts.parts)
        if (!c.trivial && c.clique) ++cliques;
    if (cliques < 2)
        return PreconditionError("clique-components",
                                 "G - S has " + std::to_string(cliques) + " nontrivial clique components");
    for (auto [u, v] : g.edges()) {
        if (g.degree(u) + g.degree(v) < s.size())
            return PreconditionError("edge-degree-sum", "d(" + std::to_string(u) + ")+d(" + std::to_string(v) +
                                                            ")=" + std::to_string(g.degree(u) + g.degree(v)) +
                                                            " < |S|=" + std::to_string(s.size()));
    }
    return std::nullopt;
}

Construction assemble_from_cutset(const Graph& g, const VertexSet& s, const ConstructOptions& options) {
    if (auto unmet = cutset_precondition_failure(g, s)) throw *unmet;
    Builder b(g, options);
    b.run_cutset(s);
    return b.finish();
}

DriverResult hamiltonian_driver(const Graph& g, const ConstructOptions& options) {
    const int n = g.order();
    if (n < 3) throw std::invalid_argument("driver needs at least three vertices");
    DriverResult out;
    if (auto verdict = check_p2p3_free(g); !verdict.free) {
        out.verdict = DriverVerdict::rejected_not_free;
        out.witness = verdict.witness;
        return out;
    }

    auto use_oracle = [&](std::optional<ConstructionFailure> abandoned) {
        HamiltonStatus status = HamiltonStatus::none;
        Construction c = oracle_only(g, options, status);
        out.route = "oracle";
        out.trace = std::move(c.trace);
        out.cycle = c.cycle;
        out.failure = abandoned ? abandoned : c.failure;
        if (status == HamiltonStatus::found)
            out.verdict = DriverVerdict::hamiltonian;
        else if (status == HamiltonStatus::timeout)
            out.verdict = DriverVerdict::timeout;
        else
            out.verdict = DriverVerdict::hypotheses_unmet_no_cycle;
        return out;
    };

    if (g.is_complete() || n < 31) return use_oracle(std::nullopt);

    bool case1 = true;
    for (auto [u, v] : g.edges())
        if (4 * (g.degree(u) + g.degree(v)) <= 3 * n) case1 = false;

    Builder b(g, options);
    if (case1)
        b.run_case1();
    else
        b.run_case2();
    Construction c = b.finish();
    if (c.ok()) {
        out.verdict = DriverVerdict::hamiltonian;
        out.cycle = c.cycle;
        out.trace = std::move(c.trace);
        out.route = !case1 ? "case2" : out.trace.has_rule("case1-fallback") ? "case1-cutset" : "case1";
        return out;
    }
    if (16 * (g.min_degree() + 1) > n) return use_oracle(c.failure);
    out.verdict = DriverVerdict::construction_failed;
    out.trace = std::move(c.trace);
    out.failure = c.failure;
    out.route = case1 ? "case1" : "case2";
    return out;
}

// --- serialization -----------------------------------------------------------

namespace {

std::string join_ints(const std::vector<int>& values) {
    if (values.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

std::vector<int> split_ints(const std::string& text) {
    std::vector<int> out;
    if (text == "-") return out;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) out.push_back(parse_int(part));
    return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string part;
    std::stringstream in(text);
    while (std::getline(in, part, sep)) out.push_back(part);
    if (!text.empty() && text.back() == sep) out.emplace_back();
    return out;
}

std::string hex(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

}  // namespace

std::string serialize_trace(const ConstructionTrace& trace) {
    std::string out = "toughham-trace\t1\n";
    out += "graph\t" + trace.graph6 + "\n";
    for (const auto& step : trace.steps) {
        std::string checks;
        for (const auto& c : step.checks) {
            if (!checks.empty()) checks += ';';
            checks += c.kind + ' ' + c.operand + ' ' + c.lhs.to_string() + ' ' + c.relation + ' ' + c.bound + ' ' +
                      c.rhs.to_string() + ' ' + (c.holds ? "1" : "0");
        }
        out += "step\t" + step.rule + '\t' + step.via + '\t' + join_ints(step.vertices) + '\t' +
               join_ints(step.set.to_vector()) + '\t' + hex(step.cycle_hash) + '\t' + (checks.empty() ? "-" : checks) +
               "\n";
    }
    return out;
}

ConstructionTrace parse_trace(const std::string& text) {
    ConstructionTrace trace;
    std::stringstream in(text);
    std::string line;
    int line_no = 0;
    bool header = false;
    bool graph = false;
    auto bad = [&](const std::string& why) {
        return std::invalid_argument("trace line " + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto fields = split(line, '\t');
        if (!header) {
            if (fields.size() != 2 || fields[0] != "toughham-trace" || fields[1] != "1") throw bad("missing header");
            header = true;
            continue;
        }
        if (fields[0] == "graph") {
            if (fields.size() != 2 || graph) throw bad("malformed graph line");
            trace.graph6 = fields[1];
            graph = true;
            continue;
        }
        if (fields[0] != "step" || fields.size() != 7) throw bad("expected a step record with 7 fields");
        TraceStep step;
        step.rule = fields[1];
        step.via = fields[2];
        try {
            step.vertices = split_ints(fields[3]);
            for (int v : split_ints(fields[4])) {
                if (v < 0 || v >= kMaxVertices) throw bad("vertex out of range");
                step.set.insert(v);
            }
            std::size_t used = 0;
            step.cycle_hash = std::stoull(fields[5], &used, 16);
            if (used != fields[5].size()) throw bad("malformed hash");
            if (fields[6] != "-") {
                for (const auto& item : split(fields[6], ';')) {
                    auto parts = split(item, ' ');
                    if (parts.size() != 7) throw bad("malformed check '" + item + "'");
                    TraceCheck c;
                    c.kind = parts[0];
                    c.operand = parts[1];
                    c.lhs = Rational::parse(parts[2]);
                    c.relation = parts[3];
                    c.bound = parts[4];
                    c.rhs = Rational::parse(parts[5]);
                    if (parts[6] != "0" && parts[6] != "1") throw bad("malformed check flag");
                    c.holds = parts[6] == "1";
                    step.checks.push_back(std::move(c));
                }
            }
        } catch (const std::invalid_argument& e) {
            throw bad(e.what());
        } catch (const std::out_of_range&) {
            throw bad("number out of range");
        }
        trace.steps.push_back(std::move(step));
    }
    if (!header || !graph) throw std::invalid_argument("trace lacks header or graph line");
    return trace;
}

// --- replay ------------------------------------------------------------------

ReplayResult replay_trace(const Graph& g, const ConstructionTrace& trace) {
    ReplayResult result;
    if (encode_graph6(g) != trace.graph6) {
        result.reason = "trace was recorded on a different graph";
        return result;
    }
    const VertexSet all = g.vertices();
    std::optional<OrientedCycle> cycle;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const TraceStep& step = trace.steps[i];
        auto reject = [&](const std::string& why) {
            result.failed_step = static_cast<int>(i);
            result.reason = step.rule + ": " + why;
            return result;
        };
        try {
            std::optional<OrientedCycle> next = cycle;
            std::optional<CutsetDecomposition> decomposition;
            const std::string& rule = step.rule;
            if (rule == "oracle-fallback" || rule == "claim-hcycle-assembly") {
                next = OrientedCycle(step.vertices);
                if (!validate_cycle(g, *next, VertexSet{})) return reject("not a cycle of the graph");
                if (rule == "claim-hcycle-assembly") decomposition = decompose_cutset(g, step.set);
            } else if (rule == "vertex-insert" || rule == "path-insert" || rule == "splice" || rule == "rotate") {
                if (!cycle) return reject("insertion before any cycle");
                if (step.vertices.empty()) return reject("nothing to insert");
                ExtensionResult r = step.vertices.size() == 1 && rule != "path-insert"
                                        ? extend_with_vertex(g, *cycle, step.vertices.front())
                                        : extend_with_path(g, *cycle, PathSeg{step.vertices});
                if (!r.ok()) return reject("extension failed");
                const std::string used = to_string(r.rule);
                const std::string expected = (rule == "splice" || rule == "rotate") ? rule : step.via;
                if (used != expected) return reject("extension used " + used + ", trace says " + expected);
                next = r.cycle;
            } else if (rule == "case1-matching") {
                if (VertexSet::from(step.vertices) != low_degree_vertices(g)) return reject("V1 differs");
                if (!step.vertices.empty()) {
                    auto m = star_matching(VertexSet::from(step.vertices), all - VertexSet::from(step.vertices), g,
                                           [](int) { return 2; });
                    if (!m.ok() || m.matching->covered() != step.set) return reject("V2 differs");
                } else if (!step.set.empty()) {
                    return reject("V2 differs");
                }
            } else if (rule == "case2-cutset") {
                if (step.vertices.size() != 2 || !g.adjacent(step.vertices[0], step.vertices[1]))
                    return reject("not an edge");
                VertexSet s = g.neighbors(step.vertices[0]) | g.neighbors(step.vertices[1]);
                s.erase(step.vertices[0]);
                s.erase(step.vertices[1]);
                if (s != step.set) return reject("cutset differs from N(u) + N(v) - {u, v}");
            } else if (rule == "case1-fallback") {
                if (!VertexSet::from(step.vertices).is_subset_of(step.set)) return reject("S1 not inside S");
                if (component_count(g, all - step.set) < 2) return reject("S is not a cutset");
            } else {
                return reject("unknown rule");
            }

            EvalContext ctx{g, step, cycle ? &*cycle : nullptr, next ? &*next : nullptr,
                            decomposition ? &*decomposition : nullptr};
            for (const auto& c : step.checks) {
                TraceCheck again = evaluate({c.kind, c.operand, c.relation, c.bound}, ctx);
                if (again.lhs != c.lhs || again.rhs != c.rhs || again.holds != c.holds)
                    return reject("check " + c.kind + " recomputes differently");
                if (!again.holds) return reject("check " + describe(again) + " fails");
            }
            const std::uint64_t hash = next ? next->hash() : 0;
            if (hash != step.cycle_hash) return reject("cycle hash mismatch");
            cycle = std::move(next);
        } catch (const std::exception& e) {
            return reject(e.what());
        }
    }
    if (!cycle || !validate_cycle(g, *cycle, all)) {
        result.failed_step = static_cast<int>(trace.steps.size());
        result.reason = "final cycle is not hamiltonian";
        return result;
    }
    result.ok = true;
    return result;
}

}  // namespace toughham
