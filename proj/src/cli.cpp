#include "toughham/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "toughham/constructor.hpp"
#include "toughham/generators.hpp"
#include "toughham/graph_io.hpp"
#include "toughham/hamiltonicity.hpp"
#include "toughham/pattern.hpp"
#include "toughham/structure.hpp"
#include "toughham/toughness.hpp"

namespace toughham {

namespace {

using Clock = std::chrono::steady_clock;

std::string elapsed_ms(Clock::time_point start) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    return std::to_string(ms);
}

std::string join(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) line += '\t';
        line += fields[i];
    }
    return line + '\n';
}

std::string join_vertices(const std::vector<int>& vs) {
    if (vs.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
    return out;
}

/// Tabs and newlines would break the record format.
std::string clean(std::string text) {
    std::replace(text.begin(), text.end(), '\t', ' ');
    std::replace(text.begin(), text.end(), '\n', ' ');
    return text.empty() ? "-" : text;
}

/// Applies fn to every index on a small thread pool; results keep input order.
std::vector<std::string> parallel_map(std::size_t count, const std::function<std::string(std::size_t)>& fn) {
    std::vector<std::string> results(count);
    std::atomic<std::size_t> next{0};
    const unsigned workers = std::max(1U, std::min<unsigned>(std::thread::hardware_concurrency(), 8U));
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) results[i] = fn(i);
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers && w < count; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return results;
}

std::vector<GraphRecord> load_inputs(const std::vector<std::string>& files, std::istream& in) {
    if (files.empty()) return read_graphs(in, "stdin");
    std::vector<GraphRecord> all;
    for (const auto& path : files) {
        std::ifstream file(path);
        if (!file) {
            GraphRecord r;
            r.id = path + ":0";
            r.error = "cannot open file";
            all.push_back(std::move(r));
            continue;
        }
        auto records = read_graphs(file, path);
        all.insert(all.end(), std::make_move_iterator(records.begin()), std::make_move_iterator(records.end()));
    }
    return all;
}

struct Settings {
    std::vector<std::string> files;
    int max_n = 8;
    std::string tau = "3/2";
    std::optional<std::uint64_t> seed;
    std::string trace_path;
    int timeout_ms = 10000;
    bool force = false;
    int count = 1;
    std::string filter = "none";
    int n = 0;
    int m = 0;
    int s = 0;
    int a = 0;
    int b = 0;
    int k = 0;
    double p = 0.5;
    std::string family;
};

/// "<n>  error  <message>  -  ..." padded to `width` middle columns.
std::string error_row(const std::string& n, const std::string& message, std::size_t width) {
    std::vector<std::string> fields{n, "error", clean(message)};
    while (fields.size() < width) fields.emplace_back("-");
    fields.resize(width);
    std::string line = join(fields);
    line.pop_back();
    return line;
}

/// Runs `row` per record; malformed records and exceptions become error rows.
/// Returns 1 if any record failed or row() flagged it.
int per_record(const std::vector<GraphRecord>& records, std::ostream& out, const std::vector<std::string>& header,
               const std::function<std::string(const GraphRecord&, std::size_t, bool&)>& row) {
    const std::size_t width = header.size() - 2;
    std::vector<char> flagged(records.size(), 0);
    auto lines = parallel_map(records.size(), [&](std::size_t i) {
        const auto& r = records[i];
        auto start = Clock::now();
        bool bad = !r.ok();
        std::string body;
        if (bad) {
            body = error_row("-", r.error, width);
        } else {
            try {
                body = row(r, i, bad);
            } catch (const std::exception& e) {
                bad = true;
                body = error_row(std::to_string(r.graph.order()), e.what(), width);
            }
        }
        flagged[i] = bad ? 1 : 0;
        return r.id + '\t' + body + '\t' + elapsed_ms(start) + '\n';
    });
    out << join(header);
    for (const auto& line : lines) out << line;
    return std::any_of(flagged.begin(), flagged.end(), [](char f) { return f != 0; }) ? 1 : 0;
}

int run_check_free(const Settings& st, std::istream& in, std::ostream& out) {
    return per_record(load_inputs(st.files, in), out, {"id", "n", "verdict", "witness", "ms"}, [](const GraphRecord& r, std::size_t, bool&) {
        auto v = check_p2p3_free(r.graph);
        std::string witness = v.witness ? v.witness->pattern + ":" + join_vertices(v.witness->vertices) : "-";
        return std::to_string(r.graph.order()) + '\t' + (v.free ? "free" : "contains") + '\t' + witness;
    });
}

int run_toughness(const Settings& st, std::istream& in, std::ostream& out) {
    ToughnessOptions opts;
    opts.force = st.force;
    return per_record(load_inputs(st.files, in), out, {"id", "n", "tau", "witness", "components", "note", "ms"},
                      [&](const GraphRecord& r, std::size_t, bool&) {
                          auto cert = toughness(r.graph, opts);
                          std::string tau = cert.infinite ? "tau=inf" : "tau=" + cert.tau.to_string();
                          std::string witness = cert.witness ? "witness=" + cert.witness->to_string() : "-";
                          return std::to_string(r.graph.order()) + '\t' + tau + '\t' + witness + '\t' +
                                 (cert.infinite ? "-" : std::to_string(cert.components)) + '\t' +
                                 (cert.disconnected ? "disconnected" : "-");
                      });
}

int run_hamilton(const Settings& st, std::istream& in, std::ostream& out) {
    HamiltonOptions ho;
    ho.timeout_ms = st.timeout_ms;
    return per_record(load_inputs(st.files, in), out, {"id", "n", "status", "cycle", "ms"}, [&](const GraphRecord& r, std::size_t, bool& bad) {
        auto res = hamiltonian_cycle(r.graph, ho);
        if (res.cycle && !validate_cycle(r.graph, *res.cycle, r.graph.vertices())) bad = true;
        return std::to_string(r.graph.order()) + '\t' + to_string(res.status) + '\t' +
               (res.cycle ? join_vertices(res.cycle->order()) : "-");
    });
}

int run_construct(const Settings& st, std::istream& in, std::ostream& out) {
    ConstructOptions opts;
    opts.seed = *st.seed;
    opts.timeout_ms = st.timeout_ms;
    std::atomic<bool> write_failed{false};
    const auto records = load_inputs(st.files, in);
    const bool many = records.size() > 1;
    int status = per_record(
        records, out, {"id", "n", "verdict", "route", "steps", "detail", "trace", "ms"},
        [&](const GraphRecord& r, std::size_t i, bool& bad) {
            DriverResult res = hamiltonian_driver(r.graph, opts);
            std::string detail = "-";
            if (res.witness) detail = res.witness->pattern + ":" + join_vertices(res.witness->vertices);
            if (res.failure) detail = clean(res.failure->step + ": " + res.failure->detail);
            std::string path = "-";
            if (!st.trace_path.empty() && res.cycle) {
                path = many ? st.trace_path + "." + std::to_string(i) : st.trace_path;
                std::ofstream file(path);
                file << serialize_trace(res.trace);
                if (!file) write_failed = true;
            }
            bad = res.verdict == DriverVerdict::construction_failed;
            return std::to_string(r.graph.order()) + '\t' + to_string(res.verdict) + '\t' +
                   (res.route.empty() ? "-" : res.route) + '\t' + std::to_string(res.trace.steps.size()) + '\t' +
                   detail + '\t' + path;
        });
    return write_failed ? 1 : status;
}

int run_replay(const Settings& st, std::istream& in, std::ostream& out, std::ostream& err) {
    if (st.files.size() != 2) {
        err << "replay needs a graph file and a trace file\n";
        return 2;
    }
    auto start = Clock::now();
    auto records = load_inputs({st.files[0]}, in);
    out << join({"id", "verdict", "failed_step", "reason", "ms"});
    if (records.size() != 1 || !records[0].ok()) {
        std::string why = records.empty() ? "no graph" : records.size() > 1 ? "expected one graph" : records[0].error;
        out << join({st.files[0], "error", "-", clean(why), elapsed_ms(start)});
        return 1;
    }
    std::ifstream file(st.files[1]);
    if (!file) {
        out << join({records[0].id, "error", "-", "cannot open trace", elapsed_ms(start)});
        return 1;
    }
    std::stringstream text;
    text << file.rdbuf();
    try {
        auto trace = parse_trace(text.str());
        auto res = replay_trace(records[0].graph, trace);
        out << join({records[0].id, res.ok ? "ok" : "rejected", res.ok ? "-" : std::to_string(res.failed_step),
                     res.ok ? "-" : clean(res.reason), elapsed_ms(start)});
        return res.ok ? 0 : 1;
    } catch (const std::exception& e) {
        out << join({records[0].id, "error", "-", clean(e.what()), elapsed_ms(start)});
        return 1;
    }
}

struct StructureCounts {
    long cutsets = 0;
    long shape = 0;
    long attach_checked = 0;
    long attach = 0;
    long connect_checked = 0;
    long connect = 0;
};

StructureCounts sweep_structure(const Graph& g) {
    StructureCounts c;
    const int n = g.order();
    const VertexSet all = g.vertices();
    for (std::uint32_t mask = 1; mask + 1 < (1U << n); ++mask) {
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if (mask & (1U << v)) s.insert(v);
        if (component_count(g, all - s) < 2) continue;
        ++c.cutsets;
        if (check_component_shapes(g, s).status == VerdictStatus::violation) ++c.shape;
        auto v5 = check_clique_connections(g, s);
        if (v5.status != VerdictStatus::precondition) ++c.connect_checked;
        if (v5.status == VerdictStatus::violation) ++c.connect;
        s.for_each([&](int x) {
            auto v4 = check_single_attachment(g, s, x);
            if (v4.status != VerdictStatus::precondition) ++c.attach_checked;
            if (v4.status == VerdictStatus::violation) ++c.attach;
        });
    }
    return c;
}

int run_verify_lemmas(const Settings& st, std::ostream& out, std::ostream& err) {
    if (st.max_n < 1 || st.max_n > 9) {
        err << "--max-n must lie in 1..9\n";
        return 2;
    }
    out << join({"n", "graphs", "cutsets", "shape_violations", "attach_checked", "attach_violations",
                 "connect_checked", "connect_violations", "ms"});
    bool violations = false;
    for (int n = 1; n <= st.max_n; ++n) {
        auto start = Clock::now();
        auto graphs = enumerate_small(n, EnumFilter::p2p3_free);
        std::vector<StructureCounts> counts(graphs.size());
        parallel_map(graphs.size(), [&](std::size_t i) {
            counts[i] = sweep_structure(graphs[i]);
            return std::string();
        });
        StructureCounts total;
        for (const auto& c : counts) {
            total.cutsets += c.cutsets;
            total.shape += c.shape;
            total.attach_checked += c.attach_checked;
            total.attach += c.attach;
            total.connect_checked += c.connect_checked;
            total.connect += c.connect;
        }
        violations = violations || total.shape + total.attach + total.connect > 0;
        out << join({std::to_string(n), std::to_string(graphs.size()), std::to_string(total.cutsets),
                     std::to_string(total.shape), std::to_string(total.attach_checked), std::to_string(total.attach),
                     std::to_string(total.connect_checked), std::to_string(total.connect), elapsed_ms(start)});
    }
    return violations ? 1 : 0;
}

int run_sweep(const Settings& st, std::ostream& out, std::ostream& err) {
    if (st.max_n < 3 || st.max_n > 9) {
        err << "--max-n must lie in 3..9\n";
        return 2;
    }
    Rational t;
    try {
        t = Rational::parse(st.tau);
    } catch (const std::exception& e) {
        err << "--tau: " << e.what() << '\n';
        return 2;
    }
    if (t < Rational(0)) {
        err << "--tau must be non-negative\n";
        return 2;
    }
    out << join({"n", "graphs", "qualifying", "counterexamples", "examples", "ms"});
    bool found = false;
    for (int n = 3; n <= st.max_n; ++n) {
        auto start = Clock::now();
        auto graphs = enumerate_small(n, EnumFilter::p2p3_free);
        auto verdicts = parallel_map(graphs.size(), [&](std::size_t i) -> std::string {
            const Graph& g = graphs[i];
            auto cert = toughness(g);
            if (!cert.infinite && cert.tau < t) return "";
            auto res = hamiltonian_cycle_dp(g);
            return res.status == HamiltonStatus::found ? "q" : "x" + encode_graph6(g);
        });
        long qualifying = 0;
        std::vector<std::string> examples;
        for (const auto& v : verdicts) {
            if (v.empty()) continue;
            ++qualifying;
            if (v[0] == 'x') examples.push_back(v.substr(1));
        }
        found = found || !examples.empty();
        std::string listed = "-";
        if (!examples.empty()) {
            listed.clear();
            for (std::size_t i = 0; i < examples.size(); ++i) listed += (i ? "," : "") + examples[i];
        }
        out << join({std::to_string(n), std::to_string(graphs.size()), std::to_string(qualifying),
                     std::to_string(examples.size()), listed, elapsed_ms(start)});
    }
    return found ? 1 : 0;
}

int run_gen(const Settings& st, std::ostream& out, std::ostream& err) {
    Family family;
    try {
        family = parse_family(st.family);
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return 2;
    }
    const bool random = family == Family::split || family == Family::random_free;
    if (random && !st.seed) {
        err << "gen " << st.family << " requires --seed\n";
        return 2;
    }
    if (st.count < 1) {
        err << "--count must be positive\n";
        return 2;
    }
    FamilySpec spec;
    spec.family = family;
    spec.n = st.n;
    spec.m = st.m;
    spec.s = st.s;
    spec.a = st.a;
    spec.b = st.b;
    spec.k = st.k;
    spec.p = st.p;
    try {
        for (int i = 0; i < st.count; ++i) {
            spec.seed = st.seed.value_or(0) + static_cast<std::uint64_t>(i);
            out << encode_graph6(generate(spec)) << '\n';
            if (!random) break;
        }
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return 2;
    }
    return 0;
}

int run_enum(const Settings& st, std::ostream& out, std::ostream& err) {
    try {
        for (const auto& g : enumerate_small(st.n, parse_filter(st.filter))) out << encode_graph6(g) << '\n';
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Toughness and hamiltonicity toolkit for (P2 ∪ P3)-free graphs", "toughham"};
    app.require_subcommand(1, 1);
    Settings st;
    std::uint64_t seed = 0;

    auto inputs = [&](CLI::App* sub) { sub->add_option("files", st.files, "graph6 or edge-list files (default: stdin)"); };

    auto* check_free = app.add_subcommand("check-free", "test each graph for an induced P2 ∪ P3");
    inputs(check_free);
    auto* tough = app.add_subcommand("toughness", "exact toughness with a minimizing cutset");
    inputs(tough);
    tough->add_flag("--force", st.force, "lift the exact-search size guard");
    auto* hamilton = app.add_subcommand("hamilton", "exhaustive hamiltonian cycle search");
    inputs(hamilton);
    hamilton->add_option("--timeout-ms", st.timeout_ms)->check(CLI::PositiveNumber);
    auto* construct = app.add_subcommand("construct", "proof-following cycle construction with a trace");
    inputs(construct);
    construct->add_option("--trace", st.trace_path, "write the trace of each success here");
    construct->add_option("--timeout-ms", st.timeout_ms)->check(CLI::PositiveNumber);
    auto* construct_seed = construct->add_option("--seed", seed, "seed for the randomized cutset search")->required();
    auto* replay = app.add_subcommand("replay", "re-execute a trace: replay GRAPH TRACE");
    replay->add_option("files", st.files)->required();
    auto* lemmas = app.add_subcommand("verify-lemmas", "exhaustive structural lemma checks");
    lemmas->add_option("--max-n", st.max_n);
    auto* sweep = app.add_subcommand("sweep-threshold", "search small free graphs for tough non-hamiltonian ones");
    sweep->add_option("--max-n", st.max_n);
    sweep->add_option("--tau", st.tau, "toughness threshold p/q");
    auto* gen = app.add_subcommand("gen", "emit graph6 for a family");
    gen->add_option("family", st.family, "complete | cycle | complete-split | split | two-cliques-join | random-free")
        ->required();
    for (auto [flag, target] : {std::pair{"--n", &st.n}, {"--m", &st.m}, {"--s", &st.s}, {"--a", &st.a},
                                {"--b", &st.b}, {"--k", &st.k}, {"--count", &st.count}})
        gen->add_option(flag, *target);
    gen->add_option("--p", st.p);
    auto* gen_seed = gen->add_option("--seed", seed);
    auto* enumerate = app.add_subcommand("enum", "connected graphs up to isomorphism as graph6");
    enumerate->add_option("--n", st.n)->required();
    enumerate->add_option("--filter", st.filter, "none | p2p3-free | 2k2-free");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    if (construct_seed->count() > 0 || gen_seed->count() > 0) st.seed = seed;

    if (check_free->parsed()) return run_check_free(st, in, out);
    if (tough->parsed()) return run_toughness(st, in, out);
    if (hamilton->parsed()) return run_hamilton(st, in, out);
    if (construct->parsed()) return run_construct(st, in, out);
    if (replay->parsed()) return run_replay(st, in, out, err);
    if (lemmas->parsed()) return run_verify_lemmas(st, out, err);
    if (sweep->parsed()) return run_sweep(st, out, err);
    if (gen->parsed()) return run_gen(st, out, err);
    if (enumerate->parsed()) return run_enum(st, out, err);
    return 2;
}

}  // namespace toughham
