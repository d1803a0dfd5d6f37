#include "toughham/structure.hpp"

#include "flow_network.hpp"

#include <algorithm>
#include <array>

namespace toughham {

VertexSet StarMatching::covered() const { return centers() | leaves(); }

VertexSet StarMatching::centers() const {
    VertexSet out;
    for (const auto& s : stars) out.insert(s.center);
    return out;
}

VertexSet StarMatching::leaves() const {
    VertexSet out;
    for (const auto& s : stars)
        for (int l : s.leaves) out.insert(l);
    return out;
}

using detail::FlowNetwork;

StarMatchingResult star_matching(const VertexSet& x_side, const VertexSet& y_side, const Graph& g, const Demand& f) {
    if (x_side.intersects(y_side)) throw std::invalid_argument("star-matching sides overlap");
    const std::vector<int> xs = x_side.to_vector();
    const std::vector<int> ys = y_side.to_vector();
    const int nx = static_cast<int>(xs.size());
    const int ny = static_cast<int>(ys.size());
    FlowNetwork net(2 + nx + ny);
    constexpr int kSource = 0;
    constexpr int kSink = 1;
    int demand_total = 0;
    for (int i = 0; i < nx; ++i) {
        int d = f(xs[i]);
        if (d < 1) throw std::invalid_argument("demand must be a positive integer");
        demand_total += d;
        net.add(kSource, 2 + i, d);
        for (int j = 0; j < ny; ++j)
            if (g.adjacent(xs[i], ys[j])) net.add(2 + i, 2 + nx + j, FlowNetwork::kInfinite);
    }
    for (int j = 0; j < ny; ++j) net.add(2 + nx + j, kSink, 1);

    StarMatchingResult result;
    if (net.max_flow(kSource, kSink) == demand_total) {
        StarMatching m;
        m.x_side = x_side;
        m.y_side = y_side;
        for (int i = 0; i < nx; ++i) {
            Star s{xs[i], {}};
            for (int j = 0; j < ny; ++j)
                if (net.flow(2 + i, 2 + nx + j) > 0) s.leaves.push_back(ys[j]);
            m.stars.push_back(std::move(s));
        }
        result.matching = std::move(m);
        return result;
    }
    auto seen = net.reachable(kSource);
    VertexSet deficient;
    for (int i = 0; i < nx; ++i)
        if (seen[2 + i]) deficient.insert(xs[i]);
    result.deficient = deficient;
    return result;
}

std::string to_string(VerdictStatus status) {
    switch (status) {
        case VerdictStatus::pass: return "pass";
        case VerdictStatus::violation: return "violation";
        case VerdictStatus::precondition: return "precondition";
    }
    return "?";
}

namespace {

StructureVerdict unmet(std::string detail, std::optional<PatternWitness> witness = std::nullopt) {
    StructureVerdict v;
    v.status = VerdictStatus::precondition;
    v.detail = std::move(detail);
    v.witness = std::move(witness);
    return v;
}

/// Shared hypotheses: g is (P2 ∪ P3)-free and s separates it.
std::optional<StructureVerdict> common_preconditions(const Graph& g, const VertexSet& s, const ComponentPartition& parts) {
    if (!s.is_subset_of(g.vertices())) return unmet("cutset-out-of-range");
    if (parts.count() < 2) return unmet("not-a-cutset");
    if (auto free = check_p2p3_free(g); !free.free) return unmet("not-p2p3-free", free.witness);
    return std::nullopt;
}

/// Induced P3 a-b-c inside a connected non-clique vertex set.
std::optional<std::array<int, 3>> induced_p3(const Graph& g, const VertexSet& part) {
    std::optional<std::array<int, 3>> found;
    part.for_each([&](int b) {
        if (found) return;
        VertexSet around = g.neighbors(b) & part;
        around.for_each([&](int a) {
            if (found) return;
            VertexSet far = around - g.neighbors(a);
            far.erase(a);
            if (!far.empty()) found = std::array<int, 3>{a, b, far.first()};
        });
    });
    return found;
}

std::optional<Edge> some_edge(const Graph& g, const VertexSet& part) {
    std::optional<Edge> found;
    part.for_each([&](int a) {
        if (found) return;
        VertexSet around = g.neighbors(a) & part;
        if (!around.empty()) found = Edge{a, around.first()};
    });
    return found;
}

}  // namespace

StructureVerdict check_component_shapes(const Graph& g, const VertexSet& s) {
    const ComponentPartition parts = components(g, g.vertices() - s);
    if (auto bad = common_preconditions(g, s, parts)) return *bad;

    for (const auto& d : parts.parts) {
        if (d.clique) continue;
        for (const auto& other : parts.parts) {
            if (other.vertices == d.vertices || other.trivial) continue;
            StructureVerdict v;
            v.status = VerdictStatus::violation;
            v.detail = "non-clique component beside a nontrivial component";
            v.components = {d.vertices, other.vertices};
            auto p3 = induced_p3(g, d.vertices);
            auto e = some_edge(g, other.vertices);
            if (p3 && e) v.witness = PatternWitness{"P2+P3", {e->first, e->second, (*p3)[0], (*p3)[1], (*p3)[2]}};
            return v;
        }
    }
    if (parts.nontrivial_count() >= 2 && !parts.all_cliques()) {
        StructureVerdict v;
        v.status = VerdictStatus::violation;
        v.detail = "two nontrivial components but not all cliques";
        return v;
    }
    return {};
}

StructureVerdict check_single_attachment(const Graph& g, const VertexSet& s, int x) {
    if (x < 0 || x >= g.order() || !s.contains(x)) return unmet("x-not-in-cutset");
    const ComponentPartition parts = components(g, g.vertices() - s);
    if (auto bad = common_preconditions(g, s, parts)) return *bad;

    int seen = -1;
    int seen_count = 0;
    bool misses_nontrivial = false;
    for (int i = 0; i < parts.count(); ++i) {
        const auto& d = parts.parts[i];
        if (g.neighbors(x).intersects(d.vertices)) {
            seen = i;
            ++seen_count;
        } else if (!d.trivial) {
            misses_nontrivial = true;
        }
    }
    if (seen_count != 1) return unmet("x-not-adjacent-to-exactly-one-component");
    if (!misses_nontrivial) return unmet("no-nontrivial-component-avoiding-x");

    const VertexSet missed = parts.parts[seen].vertices - g.neighbors(x);
    if (missed.empty()) return {};
    StructureVerdict v;
    v.status = VerdictStatus::violation;
    v.detail = "x misses a vertex of its only component";
    v.vertex = x;
    v.missed = missed.first();
    v.components = {parts.parts[seen].vertices};
    return v;
}

StructureVerdict check_clique_connections(const Graph& g, const VertexSet& s) {
    const ComponentPartition parts = components(g, g.vertices() - s);
    if (auto bad = common_preconditions(g, s, parts)) return *bad;
    if (!is_connected(g)) return unmet("not-connected");
    bool every_sees_two = true;
    s.for_each([&](int x) {
        if (adjacent_component_count(g, parts, x) < 2) every_sees_two = false;
    });
    if (!every_sees_two) return unmet("cutset-vertex-sees-fewer-than-two-components");

    std::vector<const Component*> cliques;
    for (const auto& d : parts.parts)
        if (!d.trivial && d.clique) cliques.push_back(&d);

    auto violation = [](std::string detail, int x, std::vector<VertexSet> comps) {
        StructureVerdict v;
        v.status = VerdictStatus::violation;
        v.detail = std::move(detail);
        v.vertex = x;
        v.components = std::move(comps);
        return v;
    };

    for (int x : s.to_vector()) {
        const int sees = adjacent_component_count(g, parts, x);
        for (const Component* d : cliques) {
            const int k = degree_into(g, x, d->vertices);
            if (k == 0) return violation("(i) cutset vertex misses a nontrivial clique component", x, {d->vertices});
            if (sees >= 3 && k < d->size() - 1)
                return violation("(ii) vertex seeing three components has fewer than |D|-1 neighbors in D", x,
                                 {d->vertices});
        }
        for (std::size_t i = 0; i < cliques.size(); ++i) {
            for (std::size_t j = i + 1; j < cliques.size(); ++j) {
                const Component& a = *cliques[i];
                const Component& b = *cliques[j];
                const int ka = degree_into(g, x, a.vertices);
                const int kb = degree_into(g, x, b.vertices);
                bool near_both = ka >= a.size() - 1 && kb >= b.size() - 1;
                bool all_of_one = ka == a.size() || kb == b.size();
                if (!near_both && !all_of_one)
                    return violation("(iii) neither near-complete to both nor complete to one", x,
                                     {a.vertices, b.vertices});
            }
        }
    }
    return {};
}

CutsetDecomposition decompose_cutset(const Graph& g, const VertexSet& s) {
    const VertexSet all = g.vertices();
    if (!s.is_subset_of(all)) throw PreconditionError("cutset-out-of-range", s.to_string());
    const ComponentPartition initial = components(g, all - s);
    if (initial.count() < 2) throw PreconditionError("not-a-cutset", "G - S is connected");
    int nontrivial_cliques = 0;
    for (const auto& d : initial.parts)
        if (!d.trivial && d.clique) ++nontrivial_cliques;
    if (nontrivial_cliques < 2)
        throw PreconditionError("two-nontrivial-clique-components",
                                "G - S has " + std::to_string(nontrivial_cliques) + " nontrivial clique components");
    if (auto free = check_p2p3_free(g); !free.free)
        throw PreconditionError("not-p2p3-free", "graph contains an induced P2+P3", free.witness);

    CutsetDecomposition d;
    d.original = s;
    d.components_original = initial.count();

    VertexSet current = s;
    while (true) {
        ComponentPartition parts = components(g, all - current);
        int mover = -1;
        current.for_each([&](int x) {
            if (mover == -1 && adjacent_component_count(g, parts, x) == 1) mover = x;
        });
        if (mover == -1) break;
        current.erase(mover);
    }
    d.s1 = current;
    const ComponentPartition after = components(g, all - d.s1);
    d.components_s1 = after.count();
    d.s1.for_each([&](int x) {
        if (adjacent_component_count(g, after, x) == 0)
            d.s0.insert(x);
        else
            d.s2.insert(x);
    });

    for (const auto& c : components(g, all - d.s2).parts) d.parts.push_back(c.vertices);
    std::stable_sort(d.parts.begin(), d.parts.end(),
                     [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
    for (const auto& p : d.parts) {
        if (p.size() >= 3) ++d.large_count;
        if (p.size() >= 2) ++d.nontrivial_count;
    }

    const VertexSet& d1 = d.parts[0];
    const VertexSet& d2 = d.parts[1];
    VertexSet beyond_first_two;
    for (std::size_t i = 2; i < d.parts.size(); ++i) beyond_first_two |= d.parts[i];
    d.s2.for_each([&](int x) {
        if (g.neighbors(x).intersects(beyond_first_two)) d.q1.insert(x);
        if (2 * degree_into(g, x, d1) < d1.size() - 1) d.q2.insert(x);
        if (2 * degree_into(g, x, d2) < d2.size() - 1) d.q3.insert(x);
    });

    const int first_w = std::max(d.large_count + 1, 3);  // 1-based
    for (int i = first_w; i <= d.component_count(); ++i) d.w |= d.parts[i - 1];
    if (d.large_count == 1 && (d.nontrivial_count >= 3 || d.q2.empty())) d.stranded = d2;

    const VertexSet centers = d.w | d.stranded;
    if (!centers.empty()) {
        auto result = star_matching(centers, d.s2, g, [](int) { return 2; });
        if (!result.ok()) {
            VertexSet cut = g.neighborhood(*result.deficient) & d.s2;
            throw ToughnessRefutation("no K_{1,2}-matching from " + result.deficient->to_string() +
                                          " into S2; cutset " + cut.to_string() + " is too small",
                                      *result.deficient, cut);
        }
        d.m = std::move(*result.matching);
    } else {
        d.m.x_side = centers;
        d.m.y_side = d.s2;
    }
    return d;
}

std::vector<std::string> decomposition_violations(const Graph& g, const CutsetDecomposition& d) {
    std::vector<std::string> bad;
    const VertexSet all = g.vertices();
    if (d.s2 != (d.s1 - d.s0)) bad.emplace_back("s2-equals-s1-minus-s0");
    const ComponentPartition around_s2 = components(g, all - d.s2);
    bool each_sees_two = true;
    d.s2.for_each([&](int x) {
        if (adjacent_component_count(g, around_s2, x) < 2) each_sees_two = false;
    });
    if (!each_sees_two) bad.emplace_back("s2-vertices-see-two-components");
    if (!around_s2.all_cliques()) bad.emplace_back("components-of-g-minus-s2-are-cliques");
    if (d.components_original != d.components_s1) bad.emplace_back("absorption-preserves-component-count");
    if (!g.is_clique(d.s0)) {
        // G[S0] is a disjoint union of cliques.
        for (const auto& c : components(g, d.s0).parts)
            if (!c.clique) {
                bad.emplace_back("s0-is-union-of-cliques");
                break;
            }
    }
    for (std::size_t i = 1; i < d.parts.size(); ++i)
        if (d.parts[i - 1].size() < d.parts[i].size()) {
            bad.emplace_back("parts-sorted-by-size");
            break;
        }
    if (d.q1.intersects(d.q2) || d.q1.intersects(d.q3) || d.q2.intersects(d.q3)) bad.emplace_back("q-sets-disjoint");
    VertexSet expected_w;
    for (int i = std::max(d.large_count + 1, 3); i <= d.component_count(); ++i) expected_w |= d.parts[i - 1];
    if (expected_w != d.w) bad.emplace_back("w-definition");
    for (const auto& star : d.m.stars) {
        bool ok = (d.w | d.stranded).contains(star.center) && star.leaves.size() == 2;
        for (int l : star.leaves) ok = ok && d.s2.contains(l) && g.adjacent(star.center, l);
        if (!ok) {
            bad.emplace_back("stars-are-k12-into-s2");
            break;
        }
    }
    if (d.m.centers() != (d.w | d.stranded)) bad.emplace_back("stars-cover-w");
    if (d.m.leaves().size() != 2 * static_cast<int>(d.m.stars.size())) bad.emplace_back("stars-disjoint");
    return bad;
}

}  // namespace toughham
