#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "densek/densek.hpp"

using densek::Graph;
using json = nlohmann::ordered_json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;
constexpr int exit_capacity = 3;
constexpr int exit_internal = 4;

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw densek::InputError("cannot open graph file '" + path + "'");
    return densek::parse_edge_list(in);
}

unsigned worker_count() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("DENSEK_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || cap < 1)
            throw densek::InputError("DENSEK_THREADS must be a positive integer");
        n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return n;
}

// Single writer for stdout records.
void emit(const json& record) {
    std::cout << record.dump() << '\n';
    std::cout.flush();
}

json subgraph_fields(const densek::SubgraphResult& r) {
    return {{"vertices", r.vertices}, {"edge_count", r.edge_count}, {"average_degree", r.average_degree}};
}

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct SolveArgs {
    std::string algo = "all";
    std::size_t k = 0;
    std::uint64_t seed = 0;
    std::size_t reps = 0;
    std::string graph;
    bool no_timing = false;
};

int cmd_solve(const SolveArgs& a) {
    Graph g = load_graph(a.graph);
    densek::AlgorithmSet set;
    if (a.algo == "all") {
        for (auto x : densek::all_algos) set.insert(x);
    } else if (auto x = densek::parse_algo(a.algo)) {
        set.insert(*x);
    } else {
        throw densek::InputError("unknown algorithm '" + a.algo + "'");
    }
    densek::CombinedParams params;
    params.fkp.seed = a.seed;
    params.a6.seed = a.seed;
    params.a6.reps = a.reps;
    const std::size_t reps = a.reps == 0 ? 16 * static_cast<std::size_t>(g.n()) : a.reps;

    Stopwatch clock;
    auto out = densek::combined_dks(g, a.k, params, set);
    json param_block = {{"seed", a.seed}, {"reps", reps}};
    for (const auto& e : out.entries) {
        json rec = {{"problem", "dks"},
                    {"algorithm", densek::to_string(e.algo)},
                    {"branch", e.preprocessed ? "reduced" : "input"},
                    {"k", a.k}};
        rec.update(subgraph_fields(e.result));
        rec["params"] = param_block;
        emit(rec);
    }
    json best = {{"problem", "dks"},
                 {"algorithm", "best"},
                 {"winner", densek::to_string(out.winner)},
                 {"branch", out.preprocessed ? "reduced" : "input"},
                 {"k", a.k}};
    best.update(subgraph_fields(out.result));
    best["params"] = param_block;
    if (!a.no_timing) best["wall_time_s"] = clock.seconds();
    emit(best);
    return exit_ok;
}

struct ExactArgs {
    std::string problem = "dks";
    std::size_t k = 0;
    int cap = densek::default_enumeration_cap;
    std::string graph;
    bool no_timing = false;
};

int cmd_exact(const ExactArgs& a) {
    Graph g = load_graph(a.graph);
    densek::ProblemKind kind;
    if (a.problem == "dks") kind = densek::ProblemKind::exactly_k;
    else if (a.problem == "dalks") kind = densek::ProblemKind::at_least_k;
    else if (a.problem == "damks") kind = densek::ProblemKind::at_most_k;
    else throw densek::InputError("unknown problem '" + a.problem + "'");
    Stopwatch clock;
    auto r = densek::exact_solve(g, a.k, kind, a.cap);
    json rec = {{"problem", a.problem}, {"algorithm", "exact"}, {"k", a.k}};
    rec.update(subgraph_fields(r));
    rec["params"] = {{"cap", a.cap}};
    if (!a.no_timing) rec["wall_time_s"] = clock.seconds();
    emit(rec);
    return exit_ok;
}

struct AnalyzeArgs {
    double delta = 0.001;
    std::string set = "fkp5";
    std::string csv;
};

int cmd_analyze(const AnalyzeArgs& a) {
    auto set = densek::AlgorithmSet::parse(a.set);
    auto r = densek::grid_max_min(a.delta, set, worker_count());
    json algos = json::array();
    for (auto x : set.members()) algos.push_back(densek::to_string(x));
    emit({{"delta", a.delta},
          {"algorithms", algos},
          {"max_exponent", r.max_exponent},
          {"argmax", {{"g", r.argmax.g}, {"K", r.argmax.K}, {"d", r.argmax.d}}},
          {"error_bound", densek::error_bound(a.delta)},
          {"evaluations", r.evaluations}});
    if (!a.csv.empty()) {
        std::ofstream out(a.csv);
        if (!out) throw densek::InputError("cannot write '" + a.csv + "'");
        out << "g,K,d,min_exponent\n";
        densek::for_each_grid_point(a.delta, 0, densek::grid_steps(a.delta) + 1,
                                    [&](const densek::ExponentPoint& p) {
                                        auto v = densek::combined_exponent(set, p);
                                        out << p.g << ',' << p.K << ',' << p.d << ',';
                                        if (v) out << *v;
                                        out << '\n';
                                    });
    }
    return exit_ok;
}

void write_graph(const Graph& g, const std::string& path, const std::string& preamble = {}) {
    if (path.empty() || path == "-") {
        std::cout << preamble << densek::serialize_edge_list(g);
        return;
    }
    std::ofstream out(path);
    if (!out) throw densek::InputError("cannot write '" + path + "'");
    out << preamble << densek::serialize_edge_list(g);
}

struct ReduceArgs {
    std::size_t k = 0;
    std::string graph;
    std::string output;
};

int cmd_reduce(const ReduceArgs& a) {
    Graph g = load_graph(a.graph);
    if (a.k < 1 || a.k > static_cast<std::size_t>(g.n())) throw densek::InputError("k out of range");
    auto [gp, kp] = densek::dalks_gadget(g, a.k);
    if (a.output.empty() || a.output == "-") {
        write_graph(gp, "", "# k' " + std::to_string(kp) + "\n");
    } else {
        write_graph(gp, a.output);
        emit({{"k_prime", kp}, {"n", gp.n()}, {"m", gp.m()}, {"output", a.output}});
    }
    return exit_ok;
}

struct GenArgs {
    std::string model = "gnp";
    int n = 0;
    double p = 0.5;
    std::uint64_t seed = 0;
    std::string output;
};

int cmd_gen(const GenArgs& a) {
    if (a.model != "gnp") throw densek::InputError("unknown model '" + a.model + "'");
    if (a.n < 1) throw densek::InputError("n must be positive");
    if (!(a.p >= 0.0 && a.p <= 1.0)) throw densek::InputError("p must lie in [0, 1]");
    write_graph(densek::gnp_graph(a.n, a.p, a.seed), a.output);
    return exit_ok;
}

struct VerifyArgs {
    std::string graph;
    std::string records = "-";
};

int cmd_verify(const VerifyArgs& a) {
    Graph g = load_graph(a.graph);
    std::ifstream file;
    std::istream* in = &std::cin;
    if (a.records != "-") {
        file.open(a.records);
        if (!file) throw densek::InputError("cannot open records '" + a.records + "'");
        in = &file;
    }
    std::size_t checked = 0, bad = 0, line_no = 0;
    std::string line;
    while (std::getline(*in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json rec;
        try {
            rec = json::parse(line);
        } catch (const json::parse_error& e) {
            throw densek::ParseError(line_no, e.what());
        }
        if (!rec.contains("vertices")) continue;
        auto vs = rec["vertices"].get<densek::VertexSet>();
        auto r = densek::induced_stats(g, vs);
        ++checked;
        const bool ok = rec.value("edge_count", std::int64_t{-1}) == r.edge_count &&
                        rec.value("average_degree", -1.0) == r.average_degree;
        if (!ok) {
            ++bad;
            std::cerr << "record " << line_no << ": claims " << rec.value("edge_count", std::int64_t{-1})
                      << " edges / avg " << rec.value("average_degree", -1.0) << ", graph gives "
                      << r.edge_count << " / " << r.average_degree << '\n';
        }
    }
    emit({{"checked", checked}, {"mismatches", bad}});
    return bad == 0 ? exit_ok : exit_mismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Densest k-subgraph toolkit"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "run approximation algorithms");
    s->add_option("--algo", solve.algo, "a1..a6 or all")->capture_default_str();
    s->add_option("-k", solve.k, "subgraph size")->required();
    s->add_option("--seed", solve.seed)->capture_default_str();
    s->add_option("--reps", solve.reps, "rounding draws per LP (0 = 16n)")->capture_default_str();
    s->add_flag("--no-timing", solve.no_timing, "omit wall_time_s");
    s->add_option("graph", solve.graph)->required();

    ExactArgs exact;
    auto* e = app.add_subcommand("exact", "exhaustive optimum");
    e->add_option("--problem", exact.problem, "dks, dalks or damks")->capture_default_str();
    e->add_option("-k", exact.k)->required();
    e->add_option("--cap", exact.cap, "largest n to enumerate")
        ->capture_default_str()
        ->check(CLI::Range(1, densek::max_enumeration_cap));
    e->add_flag("--no-timing", exact.no_timing);
    e->add_option("graph", exact.graph)->required();

    AnalyzeArgs analyze;
    auto* an = app.add_subcommand("analyze", "ratio-exponent grid search");
    an->add_option("--delta", analyze.delta)->capture_default_str();
    an->add_option("--set", analyze.set, "fkp5, a6combo or custom:a1,a2,...")->capture_default_str();
    an->add_option("--csv", analyze.csv, "dump per-point minima");

    ReduceArgs reduce;
    auto* r = app.add_subcommand("reduce", "at-least-k hardness gadget");
    r->add_option("-k", reduce.k)->required();
    r->add_option("-o,--output", reduce.output);
    r->add_option("graph", reduce.graph)->required();

    GenArgs gen;
    auto* gn = app.add_subcommand("gen", "random graph");
    gn->add_option("--model", gen.model)->capture_default_str();
    gn->add_option("-n", gen.n)->required();
    gn->add_option("-p", gen.p)->capture_default_str();
    gn->add_option("--seed", gen.seed)->capture_default_str();
    gn->add_option("-o,--output", gen.output);

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "re-check records against a graph");
    v->add_option("graph", verify.graph)->required();
    v->add_option("records", verify.records, "JSON lines file, - for stdin")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& err) {
        return app.exit(err);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return exit_usage;
    }

    try {
        if (*s) return cmd_solve(solve);
        if (*e) return cmd_exact(exact);
        if (*an) return cmd_analyze(analyze);
        if (*r) return cmd_reduce(reduce);
        if (*gn) return cmd_gen(gen);
        if (*v) return cmd_verify(verify);
    } catch (const densek::CapacityError& err) {
        std::cerr << "densek: " << err.what() << '\n';
        return exit_capacity;
    } catch (const std::invalid_argument& err) {
        std::cerr << "densek: " << err.what() << '\n';
        return exit_usage;
    } catch (const std::exception& err) {
        std::cerr << "densek: internal error: " << err.what() << '\n';
        return exit_internal;
    }
    return exit_usage;
}
