#include "toughham/toughness.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <unordered_set>

namespace toughham {

Rational Rational::parse(std::string_view text) {
    auto bad = [&] { return std::invalid_argument("malformed rational '" + std::string(text) + "'"); };
    auto to_int = [&](std::string_view part) {
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty()) throw bad();
        return value;
    };
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::int64_t den = to_int(text.substr(slash + 1));
        if (den == 0) throw bad();
        return Rational(to_int(text.substr(0, slash)), den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 12) throw bad();
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        bool negative = !whole.empty() && whole[0] == '-';
        std::int64_t w = whole.empty() || whole == "-" ? 0 : to_int(whole);
        std::int64_t f = to_int(frac);
        std::int64_t magnitude = (w < 0 ? -w : w) * scale + f;
        return Rational(negative ? -magnitude : magnitude, scale);
    }
    return Rational(to_int(text));
}

std::string ToughnessCertificate::to_string() const {
    if (infinite) return "tau=inf";
    std::string out = "tau=" + tau.to_string() + " witness=" + (witness ? witness->to_string() : std::string("-"));
    if (disconnected) out += " disconnected";
    return out;
}

namespace {

int mis_search(const Graph& g, VertexSet cand, int taken, int best) {
    if (cand.empty()) return std::max(best, taken);
    if (taken + cand.size() <= best) return best;
    int pick = -1;
    int pick_degree = kMaxVertices + 1;
    cand.for_each([&](int v) {
        int d = degree_into(g, v, cand);
        if (d < pick_degree) {
            pick_degree = d;
            pick = v;
        }
    });
    VertexSet with = cand - g.neighbors(pick);
    with.erase(pick);
    best = mis_search(g, with, taken + 1, best);
    if (pick_degree <= 1) return best;
    VertexSet without = cand;
    without.erase(pick);
    return mis_search(g, without, taken, best);
}

/// Calls visit(S) for every k-subset of 0..n-1 in lexicographic order until it returns true.
template <typename Visit>
bool for_each_subset_of_size(int n, int k, Visit&& visit) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (visit(VertexSet::from(idx))) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

void guard_size(const Graph& g, const ToughnessOptions& options) {
    if (g.order() > options.exact_bound && !options.force)
        throw CapacityError("exact toughness limited to n <= " + std::to_string(options.exact_bound) + " (got n=" +
                            std::to_string(g.order()) +
                            "); use the randomized lower-bound check or force the exact search");
}

}  // namespace

int independence_number(const Graph& g) { return mis_search(g, g.vertices(), 0, 0); }

ToughnessCertificate toughness(const Graph& g, const ToughnessOptions& options) {
    ToughnessCertificate cert;
    if (g.is_complete()) {
        cert.infinite = true;
        return cert;
    }
    const int n = g.order();
    const VertexSet all = g.vertices();
    if (int c = component_count(g, all); c >= 2) {
        cert.disconnected = true;
        cert.tau = Rational(0);
        cert.witness = VertexSet{};
        cert.components = c;
        return cert;
    }
    guard_size(g, options);

    const int alpha = independence_number(g);
    std::optional<Rational> best;
    for (int k = 1; k <= n - 2; ++k) {
        const int max_components = std::min(n - k, alpha);
        if (max_components < 2) continue;
        if (best && Rational(k, max_components) >= *best) break;
        for_each_subset_of_size(n, k, [&](const VertexSet& s) {
            int c = component_count(g, all - s);
            if (c >= 2) {
                Rational ratio(k, c);
                if (!best || ratio < *best) {
                    best = ratio;
                    cert.witness = s;
                    cert.components = c;
                }
            }
            return false;
        });
    }
    // A connected non-complete graph always has a cutset (two non-adjacent vertices).
    cert.tau = *best;
    return cert;
}

ToughnessTest is_t_tough(const Graph& g, const Rational& t, const ToughnessOptions& options) {
    if (t < Rational(0)) throw std::invalid_argument("toughness threshold must be non-negative");
    if (t == Rational(0) || g.is_complete()) return {};
    const int n = g.order();
    const VertexSet all = g.vertices();
    if (component_count(g, all) >= 2) return {false, VertexSet{}};
    guard_size(g, options);

    const int alpha = independence_number(g);
    ToughnessTest result;
    for (int k = 1; k <= n - 2; ++k) {
        const int max_components = std::min(n - k, alpha);
        if (max_components < 2) continue;
        if (Rational(k) >= t * Rational(max_components)) break;
        bool hit = for_each_subset_of_size(n, k, [&](const VertexSet& s) {
            int c = component_count(g, all - s);
            if (c >= 2 && Rational(k) < t * Rational(c)) {
                result.tough = false;
                result.violation = s;
                return true;
            }
            return false;
        });
        if (hit) break;
    }
    return result;
}

VertexSet shrink_cutset(const Graph& g, VertexSet s) {
    const VertexSet all = g.vertices();
    bool changed = true;
    while (changed) {
        changed = false;
        ComponentPartition parts = components(g, all - s);
        int drop = -1;
        s.for_each([&](int x) {
            if (drop != -1) return;
            int seen = 0;
            for (const auto& c : parts.parts) {
                if (g.neighbors(x).intersects(c.vertices) && ++seen > 1) break;
            }
            if (seen <= 1) drop = x;
        });
        if (drop != -1) {
            s.erase(drop);
            changed = true;
        }
    }
    return s;
}

std::vector<CutsetCandidate> heuristic_cutsets(const Graph& g, int samples, std::uint64_t seed) {
    const int n = g.order();
    const VertexSet all = g.vertices();
    std::unordered_set<VertexSet, VertexSetHash> seen;
    std::vector<CutsetCandidate> out;

    auto consider = [&](const VertexSet& seed_set) {
        if (seed_set.empty() || seed_set.size() > n - 2) return;
        if (component_count(g, all - seed_set) < 2) return;
        VertexSet s = shrink_cutset(g, seed_set);
        if (s.empty() || !seen.insert(s).second) return;
        int c = component_count(g, all - s);
        if (c < 2) return;
        out.push_back({s, c, Rational(s.size(), c)});
    };

    for (int v = 0; v < n; ++v) consider(g.neighbors(v));
    for (auto [u, v] : g.edges()) {
        VertexSet s = g.neighbors(u) | g.neighbors(v);
        s.erase(u);
        s.erase(v);
        consider(s);
    }

    std::mt19937_64 rng(seed);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int round = 0; round < samples; ++round) {
        std::shuffle(order.begin(), order.end(), rng);
        VertexSet independent;
        VertexSet blocked;
        for (int v : order) {
            if (blocked.contains(v)) continue;
            independent.insert(v);
            blocked |= g.neighbors(v);
            blocked.insert(v);
        }
        consider(all - independent);
        // Second seed per round: the neighborhood of a random independent pair.
        if (independent.size() >= 2) {
            std::vector<int> members = independent.to_vector();
            std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
            int a = members[pick(rng)];
            int b = members[pick(rng)];
            consider(g.neighbors(a) | g.neighbors(b));
        }
    }

    std::sort(out.begin(), out.end(), [](const CutsetCandidate& a, const CutsetCandidate& b) {
        if (a.ratio != b.ratio) return a.ratio < b.ratio;
        if (a.cutset.size() != b.cutset.size()) return a.cutset.size() < b.cutset.size();
        return lex_less(a.cutset, b.cutset);
    });
    return out;
}

FalsifierVerdict toughness_lower_bound_check(const Graph& g, const Rational& t, int samples, std::uint64_t seed) {
    FalsifierVerdict verdict;
    if (g.is_complete()) return verdict;
    const VertexSet all = g.vertices();
    if (int c = component_count(g, all); c >= 2) {
        CutsetCandidate empty_cut{VertexSet{}, c, Rational(0)};
        verdict.best = empty_cut;
        if (t > Rational(0)) {
            verdict.violation_found = true;
            verdict.violation = empty_cut;
        }
        return verdict;
    }
    auto candidates = heuristic_cutsets(g, samples, seed);
    if (candidates.empty()) return verdict;
    verdict.best = candidates.front();
    for (const auto& cand : candidates) {
        // Recheck from scratch rather than trusting the cached count.
        int c = component_count(g, all - cand.cutset);
        if (c >= 2 && Rational(cand.cutset.size()) < t * Rational(c)) {
            verdict.violation_found = true;
            verdict.violation = CutsetCandidate{cand.cutset, c, Rational(cand.cutset.size(), c)};
            break;
        }
    }
    return verdict;
}

}  // namespace toughham
