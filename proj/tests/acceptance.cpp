#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "instances.hpp"
#include "oracles.hpp"
#include "toughham/cli.hpp"
#include "toughham/constructor.hpp"
#include "toughham/generators.hpp"
#include "toughham/graph_io.hpp"
#include "toughham/hamiltonicity.hpp"
#include "toughham/pattern.hpp"
#include "toughham/structure.hpp"
#include "toughham/toughness.hpp"

using namespace toughham;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const Outcome& o) {
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << name << "): " << o.detail << std::endl;
}

std::string fmt(double s) {
    std::ostringstream out;
    out.precision(2);
    out << std::fixed << s << "s";
    return out.str();
}

Outcome pattern_equivalence() {
    auto start = Clock::now();
    long graphs = 0, disagreements = 0;
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : enumerate_small(n)) {
            ++graphs;
            auto v = check_p2p3_free(g);
            bool bad = v.free != oracle::p2p3_free(g);
            if (!v.free && !witness_matches(g, p2_union_p3(), v.witness->vertices)) bad = true;
            disagreements += bad ? 1 : 0;
        }
    }
    double t = seconds_since(start);
    Outcome o;
    o.pass = disagreements == 0 && t < 60.0;
    o.detail = std::to_string(graphs) + " connected graphs n<=7, " + std::to_string(disagreements) +
               " disagreements, " + fmt(t);
    return o;
}

Outcome toughness_equivalence() {
    auto start = Clock::now();
    long graphs = 0, disagreements = 0;
    for (int n = 1; n <= 8; ++n) {
        for (const Graph& g : enumerate_small(n)) {
            ++graphs;
            auto expected = oracle::toughness(g);
            auto c = toughness(g);
            bool ok = expected ? (!c.infinite && c.tau == *expected) : c.infinite;
            if (ok && c.witness && !c.infinite)
                ok = Rational(c.witness->size(), component_count(g, g.vertices() - *c.witness)) == c.tau;
            disagreements += ok ? 0 : 1;
        }
    }
    long closed = 0, closed_bad = 0;
    auto expect = [&](const Graph& g, const Rational& tau) {
        ++closed;
        auto c = toughness(g);
        if (c.infinite || c.tau != tau) ++closed_bad;
    };
    for (int n = 4; n <= 10; ++n) expect(cycle_graph(n), Rational(1));
    for (int m = 1; m <= 5; ++m)
        for (int n = std::max(m, 2); m + n <= 10; ++n) expect(complete_bipartite(m, n), Rational(m, n));
    expect(complete_bipartite(1, 3), Rational(1, 3));
    for (int m = 1; m <= 10; ++m)
        for (int s = 2; m + s <= 12; ++s) expect(complete_split(m, s), Rational(m, s));
    Outcome o;
    o.pass = disagreements == 0 && closed_bad == 0;
    o.detail = std::to_string(graphs) + " connected graphs n<=8 with " + std::to_string(disagreements) +
               " disagreements; " + std::to_string(closed - closed_bad) + "/" + std::to_string(closed) +
               " closed forms reproduced, " + fmt(seconds_since(start));
    return o;
}

Outcome structure_sweeps() {
    auto start = Clock::now();
    long graphs = 0, cutsets = 0, shape = 0, attach_checked = 0, attach = 0, connect_checked = 0, connect = 0;
    for (int n = 1; n <= 8; ++n) {
        for (const Graph& g : enumerate_small(n, EnumFilter::p2p3_free)) {
            ++graphs;
            for (std::uint32_t mask = 1; mask + 1 < (1U << n); ++mask) {
                VertexSet s;
                for (int v = 0; v < n; ++v)
                    if (mask >> v & 1U) s.insert(v);
                if (component_count(g, g.vertices() - s) < 2) continue;
                ++cutsets;
                if (check_component_shapes(g, s).status == VerdictStatus::violation) ++shape;
                auto c = check_clique_connections(g, s);
                if (c.status != VerdictStatus::precondition) ++connect_checked;
                if (c.status == VerdictStatus::violation) ++connect;
                s.for_each([&](int x) {
                    auto a = check_single_attachment(g, s, x);
                    if (a.status != VerdictStatus::precondition) ++attach_checked;
                    if (a.status == VerdictStatus::violation) ++attach;
                });
            }
        }
    }
    double t = seconds_since(start);
    Outcome o;
    o.pass = shape + attach + connect == 0 && t < 1800.0 && attach_checked > 0 && connect_checked > 0;
    o.detail = std::to_string(graphs) + " free graphs, " + std::to_string(cutsets) + " cutsets; violations shape=" +
               std::to_string(shape) + " attach=" + std::to_string(attach) + "/" + std::to_string(attach_checked) +
               " connect=" + std::to_string(connect) + "/" + std::to_string(connect_checked) + ", " + fmt(t);
    return o;
}

/// A cycle through exactly the vertices of `u`, found by the exhaustive search
/// on G[u], or nullopt.
std::optional<OrientedCycle> cycle_on(const Graph& g, const VertexSet& u, int timeout_ms) {
    if (u.size() < 3) return std::nullopt;
    auto sub = induced_subgraph(g, u);
    HamiltonOptions opts;
    opts.timeout_ms = timeout_ms;
    auto r = hamiltonian_cycle(sub.graph, opts);
    if (!r.cycle) return std::nullopt;
    return OrientedCycle(sub.to_host(r.cycle->order()));
}

VertexSet random_subset(const VertexSet& from, int size, std::mt19937_64& rng) {
    std::vector<int> pool = from.to_vector();
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(static_cast<std::size_t>(std::min<int>(size, static_cast<int>(pool.size()))));
    return VertexSet::from(pool);
}

struct ExtensionTally {
    long instances = 0;
    long failures = 0;
    long invalid = 0;
    long rotations = 0;
};

/// Single-vertex insertion: t = tau(G) >= 1 computed exactly, deg(x, C) > n / (t + 1).
ExtensionTally vertex_extension_instances(long target) {
    ExtensionTally tally;
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> density(0.45, 0.9);
    long attempts = 0;
    while (tally.instances < target && attempts < 200 * target) {
        ++attempts;
        const int n = 6 + static_cast<int>(rng() % 7);
        Graph g = oracle::random_graph(n, density(rng), rng);
        auto cert = toughness(g);
        if (cert.infinite || cert.disconnected || cert.tau < Rational(1)) continue;
        const Rational t = cert.tau;
        for (int round = 0; round < 6 && tally.instances < target; ++round) {
            const int x = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            VertexSet rest = g.vertices();
            rest.erase(x);
            const int size = 3 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 3));
            auto c = cycle_on(g, random_subset(rest, size, rng), 1000);
            if (!c) continue;
            if (!(Rational(degree_into(g, x, c->vertices())) * (t + Rational(1)) > Rational(n))) continue;
            ++tally.instances;
            auto r = extend_with_vertex(g, *c, x);
            if (!r.ok()) {
                ++tally.failures;
                continue;
            }
            if (r.rule == ExtensionRule::rotate) ++tally.rotations;
            if (!validate_cycle(g, *r.cycle, c->vertices() | VertexSet{x}) || r.cycle->size() != c->size() + 1)
                ++tally.invalid;
        }
    }
    return tally;
}

/// A random member of a family whose toughness is at least 15 by construction:
/// complete-split(m, s) with m >= 15 s (toughness m/s) or two-cliques-join(a, b, k)
/// with k >= 30 (toughness k/2), relabeled at random.
Graph tough_family_member(std::mt19937_64& rng) {
    Graph g;
    if (rng() % 2 == 0) {
        const int s = 2 + static_cast<int>(rng() % 3);
        const int m = 15 * s + static_cast<int>(rng() % 20);
        g = complete_split(m, s);
    } else {
        const int k = 30 + static_cast<int>(rng() % 31);
        const int a = 1 + static_cast<int>(rng() % 30);
        const int b = 1 + static_cast<int>(rng() % 30);
        g = two_cliques_join(a, b, k);
    }
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return oracle::relabel(g, perm);
}

/// Path insertion on 15-tough free graphs with both ends seeing more than 9n/32
/// cycle vertices. Paths have two or three vertices.
ExtensionTally path_extension_instances(long target) {
    ExtensionTally tally;
    std::mt19937_64 rng(4048);
    long attempts = 0;
    while (tally.instances < target && attempts < 200 * target) {
        ++attempts;
        Graph g = tough_family_member(rng);
        const int n = g.order();
        const int size = n / 3 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 3 - n / 3));
        auto c = cycle_on(g, random_subset(g.vertices(), size, rng), 1000);
        if (!c) continue;
        const VertexSet outside = g.vertices() - c->vertices();
        for (int round = 0; round < 8 && tally.instances < target; ++round) {
            std::vector<int> path{outside.to_vector()[rng() % static_cast<std::uint64_t>(outside.size())]};
            const int length = 2 + static_cast<int>(rng() % 2);
            VertexSet used{path[0]};
            while (static_cast<int>(path.size()) < length) {
                VertexSet next = (g.neighbors(path.back()) & outside) - used;
                if (next.empty()) break;
                std::vector<int> options = next.to_vector();
                int y = options[rng() % options.size()];
                path.push_back(y);
                used.insert(y);
            }
            if (static_cast<int>(path.size()) < 2) continue;
            const Rational bound = Rational(9 * n, 32);
            if (!(Rational(degree_into(g, path.front(), c->vertices())) > bound)) continue;
            if (!(Rational(degree_into(g, path.back(), c->vertices())) > bound)) continue;
            ++tally.instances;
            auto r = extend_with_path(g, *c, PathSeg{path});
            if (!r.ok()) {
                ++tally.failures;
                continue;
            }
            if (r.rule == ExtensionRule::rotate) ++tally.rotations;
            if (!validate_cycle(g, *r.cycle, c->vertices() | used) ||
                r.cycle->size() != c->size() + static_cast<int>(path.size()))
                ++tally.invalid;
        }
    }
    return tally;
}

Outcome extension_primitives() {
    auto start = Clock::now();
    // the toughness contracts of the path families, checked exactly at small scale
    long contract_bad = 0;
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int k = 1; a + b + k <= 14; ++k)
                if (toughness(two_cliques_join(a, b, k)).tau != Rational(k, 2)) ++contract_bad;
    auto vertex = vertex_extension_instances(1500);
    auto path = path_extension_instances(1500);
    Outcome o;
    o.pass = contract_bad == 0 && vertex.instances >= 1000 && path.instances >= 1000 && vertex.failures == 0 &&
             path.failures == 0 && vertex.invalid == 0 && path.invalid == 0;
    o.detail = "vertex: " + std::to_string(vertex.instances) + " instances, " + std::to_string(vertex.failures) +
               " failures, " + std::to_string(vertex.rotations) + " rotations, " + std::to_string(vertex.invalid) +
               " invalid; path: " + std::to_string(path.instances) + " instances, " + std::to_string(path.failures) +
               " failures, " + std::to_string(path.rotations) + " rotations, " + std::to_string(path.invalid) +
               " invalid; family contract mismatches " + std::to_string(contract_bad) + ", " +
               fmt(seconds_since(start));
    return o;
}

Outcome end_to_end() {
    std::vector<std::pair<std::string, Graph>> cases{{"two-cliques-join(16,16,60)", two_cliques_join(16, 16, 60)}};
    for (const auto& v : instances::construction_variants()) cases.emplace_back(v.name(), instances::build(v));
    int ok = 0;
    double slowest = 0.0;
    std::string first_problem;
    for (const auto& [name, g] : cases) {
        std::string problem;
        if (!is_p2p3_free(g)) problem = "not free";
        if (problem.empty() && toughness_lower_bound_check(g, Rational(15), 32, 1).violation_found)
            problem = "below toughness 15";
        auto start = Clock::now();
        auto r = hamiltonian_driver(g);
        double t = seconds_since(start);
        slowest = std::max(slowest, t);
        if (problem.empty() && r.verdict != DriverVerdict::hamiltonian) problem = "verdict " + to_string(r.verdict);
        if (problem.empty() && !validate_cycle(g, *r.cycle, g.vertices())) problem = "invalid cycle";
        if (problem.empty() && !r.trace.all_checks_hold()) problem = "a trace check fails";
        if (problem.empty() && !r.trace.has_rule("claim-hcycle-assembly")) problem = "no cutset assembly step";
        if (problem.empty() && !replay_trace(g, parse_trace(serialize_trace(r.trace))).ok) problem = "replay rejected";
        if (problem.empty() && t >= 10.0) problem = "too slow";
        if (problem.empty())
            ++ok;
        else if (first_problem.empty())
            first_problem = name + ": " + problem;
    }
    Outcome o;
    o.pass = ok == static_cast<int>(cases.size()) && cases.size() >= 21;
    o.detail = std::to_string(ok) + "/" + std::to_string(cases.size()) +
               " instances verified (cycle, replay, checks, assembly step), slowest " + fmt(slowest);
    if (!first_problem.empty()) o.detail += "; first problem " + first_problem;
    return o;
}

Outcome non_hamiltonian_controls() {
    bool petersen_none = hamiltonian_cycle(petersen()).status == HamiltonStatus::none;
    bool k23_none = hamiltonian_cycle(complete_bipartite(2, 3)).status == HamiltonStatus::none;
    auto tau = toughness(petersen());
    Outcome o;
    o.pass = petersen_none && k23_none && !tau.infinite && tau.tau == Rational(4, 3);
    o.detail = std::string("Petersen ") + (petersen_none ? "none" : "cycle") + ", K_{2,3} " +
               (k23_none ? "none" : "cycle") + ", tau(Petersen)=" + (tau.infinite ? "inf" : tau.tau.to_string());
    return o;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string part; std::getline(in, part, sep);) out.push_back(part);
    return out;
}

struct CliRun {
    int code;
    std::string out;
};

CliRun cli(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = cli_main(args, in, out, err);
    return {code, out.str()};
}

Outcome threshold_sweep() {
    auto r = cli({"sweep-threshold", "--max-n", "8", "--tau", "3/2"});
    long qualifying = 0, counterexamples = 0;
    auto lines = split(r.out, '\n');
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto f = split(lines[i], '\t');
        if (f.size() < 4) continue;
        qualifying += std::stol(f[2]);
        counterexamples += std::stol(f[3]);
    }
    Outcome o;
    o.pass = r.code == 0 && counterexamples == 0 && lines.size() == 7;
    o.detail = "exit " + std::to_string(r.code) + ", " + std::to_string(qualifying) +
               " free graphs n<=8 with tau>=3/2, " + std::to_string(counterexamples) + " without a hamiltonian cycle";
    return o;
}

/// Drops the trailing ms column of every line when the header ends with it.
std::string without_timings(const std::string& text) {
    auto lines = split(text, '\n');
    if (lines.empty() || split(lines[0], '\t').back() != "ms") return text;
    std::string out;
    for (const auto& line : lines) {
        auto cut = line.rfind('\t');
        out += (cut == std::string::npos ? line : line.substr(0, cut)) + '\n';
    }
    return out;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome determinism() {
    auto dir = std::filesystem::temp_directory_path() / "toughham_acceptance";
    std::filesystem::create_directories(dir);
    const auto graphs = dir / "inputs.g6";
    const auto big = dir / "big.g6";
    const auto trace = dir / "big.trace";
    {
        std::ofstream out(graphs);
        for (const Graph& g : {cycle_graph(7), petersen(), complete_split(4, 2), random_free(10, 0.5, 3),
                               complete_graph(5), complete_bipartite(3, 4)})
            out << encode_graph6(g) << '\n';
        std::ofstream(big) << encode_graph6(instances::build({{16, 16}, 60, 2, 0, false, 11})) << '\n'
                           << encode_graph6(instances::build({{2, 60}, 30})) << '\n';
    }
    const std::vector<std::vector<std::string>> commands{
        {"check-free", graphs.string()},
        {"toughness", graphs.string()},
        {"hamilton", graphs.string()},
        {"construct", graphs.string(), "--seed", "5"},
        {"construct", big.string(), "--seed", "5", "--trace", trace.string()},
        {"replay", big.string(), trace.string() + ".0"},
        {"verify-lemmas", "--max-n", "6"},
        {"sweep-threshold", "--max-n", "7", "--tau", "1"},
        {"gen", "random-free", "--n", "12", "--p", "0.4", "--seed", "9", "--count", "5"},
        {"gen", "split", "--m", "6", "--s", "6", "--p", "0.5", "--seed", "2", "--count", "3"},
        {"enum", "--n", "6", "--filter", "p2p3-free"},
    };
    int identical = 0;
    std::string first_difference;
    for (const auto& args : commands) {
        auto a = cli(args);
        const bool traced = args[0] == "construct" && args.size() > 4;
        std::string trace_a = traced ? read_file(trace.string() + ".0") + read_file(trace.string() + ".1") : "";
        auto b = cli(args);
        std::string trace_b = traced ? read_file(trace.string() + ".0") + read_file(trace.string() + ".1") : "";
        if (a.code == b.code && without_timings(a.out) == without_timings(b.out) && trace_a == trace_b)
            ++identical;
        else if (first_difference.empty())
            first_difference = args[0];
    }
    Outcome o;
    o.pass = identical == static_cast<int>(commands.size());
    o.detail = std::to_string(identical) + "/" + std::to_string(commands.size()) +
               " subcommand runs byte-identical across two runs (ms column removed)";
    if (!first_difference.empty()) o.detail += "; first difference in " + first_difference;
    return o;
}

}  // namespace

int main() {
    report(1, "pattern oracle equivalence", pattern_equivalence());
    report(2, "toughness oracle equivalence", toughness_equivalence());
    report(3, "structural sweeps", structure_sweeps());
    report(4, "extension primitives", extension_primitives());
    report(5, "end-to-end construction", end_to_end());
    report(6, "non-hamiltonian controls", non_hamiltonian_controls());
    report(7, "threshold sweep", threshold_sweep());
    report(8, "determinism", determinism());
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
    return failures == 0 ? 0 : 1;
}
