// Command-line front end: solve, op, verify, conjecture, sharpness.
//
// Exit codes: 0 success, 1 operational error, 2 mathematical finding.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "domchrom/error.hpp"
#include "domchrom/graph6.hpp"
#include "domchrom/input.hpp"
#include "domchrom/ops.hpp"
#include "domchrom/report.hpp"
#include "domchrom/solver.hpp"
#include "domchrom/suite.hpp"

using namespace domchrom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFinding = 2;

struct GraphArgs {
    std::vector<std::string> graph6;
    std::vector<std::string> families;
    std::string graphs_file;
    std::size_t index = 0;

    void add_to(CLI::App* cmd, bool many) {
        auto* g = cmd->add_option("--graph", graph6, "graph6 literal");
        auto* f = cmd->add_option("--family", families, "family spec kind:n[^1/k], kind in path|cycle|complete|star|wheel");
        auto* file = cmd->add_option("--graphs-file", graphs_file, "graph6 file, one graph per line");
        if (!many) {
            g->expected(1);
            f->expected(1);
            cmd->add_option("--index", index, "record index in --graphs-file (0-based)")->needs(file);
        }
    }

    bool given() const { return !graph6.empty() || !families.empty() || !graphs_file.empty(); }

    std::vector<Graph> explicit_graphs() const {
        std::vector<Graph> out;
        for (const auto& s : graph6) out.push_back(parse_graph6(s));
        for (const auto& s : families) out.push_back(parse_family_spec(s));
        return out;
    }

    Graph single() const {
        const int sources = static_cast<int>(graph6.size() + families.size()) + (graphs_file.empty() ? 0 : 1);
        if (sources != 1) throw ArgumentError("give exactly one of --graph, --family, --graphs-file");
        if (!graphs_file.empty()) return read_graph6_record(graphs_file, index);
        return explicit_graphs().front();
    }
};

struct Output {
    std::string path;
    std::string format = "json";

    void add_to(CLI::App* cmd, std::vector<std::string> formats) {
        cmd->add_option("--out", path, "write the report here instead of stdout");
        cmd->add_option("--format", format, "output format")->check(CLI::IsMember(formats));
    }

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            std::cout.flush();
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw IoError("cannot open " + path + " for writing");
        out << text;
        if (!out) throw IoError("failed writing " + path);
    }

    void write(const Json& j) const { write(j.dump(2) + "\n"); }
};

std::pair<int, int> parse_range(const std::string& text, const std::string& flag) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        std::size_t used_lo = 0;
        std::size_t used_hi = 0;
        const int lo = std::stoi(text.substr(0, dots), &used_lo);
        const int hi = std::stoi(text.substr(dots + 2), &used_hi);
        if (used_lo != dots || used_hi != text.size() - dots - 2) throw std::invalid_argument("trailing");
        if (lo > hi) throw std::invalid_argument("empty");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw ArgumentError(flag + " expects a..b with a <= b, got '" + text + "'");
    }
}

Edge parse_edge(const std::string& text) {
    const auto comma = text.find(',');
    try {
        if (comma == std::string::npos) throw std::invalid_argument("no comma");
        std::size_t used_u = 0;
        std::size_t used_v = 0;
        const int u = std::stoi(text.substr(0, comma), &used_u);
        const int v = std::stoi(text.substr(comma + 1), &used_v);
        if (used_u != comma || used_v != text.size() - comma - 1) throw std::invalid_argument("trailing");
        return Edge(u, v);
    } catch (const std::logic_error&) {
        throw ArgumentError("--edge expects u,v, got '" + text + "'");
    }
}

int default_jobs() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

template <class Result>
std::string plain_solve(const Graph& g, const Result& r, const char* quantity) {
    const Json j = solve_json(g, r);
    std::string out = std::string(quantity) + " = " + std::to_string(r.value) + "\n";
    out += "graph: " + write_graph6(g) + "\n";
    out += "certificate: " + j["certificate"].dump() + "\n";
    out += "nodes: " + std::to_string(r.stats.nodes) + ", decisions: " + std::to_string(r.stats.decisions) + "\n";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact dominated chromatic number solver and bound verifier"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "compute chi, chidom or chidt with a certificate");
    std::string which;
    GraphArgs solve_in;
    Output solve_out;
    int max_vertices = SolverOptions{}.max_vertices;
    solve->add_option("which", which, "chi | chidom | chidt")->required()->check(CLI::IsMember({"chi", "chidom", "chidt"}));
    solve_in.add_to(solve, false);
    solve_out.add_to(solve, {"json", "plain"});
    solve->add_option("--max-vertices", max_vertices, "refuse larger instances")->check(CLI::Range(1, Graph::kMaxVertices));

    // op
    auto* op = app.add_subcommand("op", "apply a graph operation and print the result");
    std::string op_kind;
    GraphArgs op_in;
    Output op_out;
    std::string op_edge;
    std::optional<int> op_vertex;
    std::optional<int> op_k;
    op->add_option("kind", op_kind, "delete_edge | delete_vertex | contract_edge | contract_vertex | odot_vertex | subdivide")
        ->required();
    op_in.add_to(op, false);
    op_out.add_to(op, {"json", "plain"});
    op->add_option("--edge", op_edge, "edge u,v");
    op->add_option("--vertex", op_vertex, "vertex id");
    op->add_option("--k", op_k, "subdivision parameter");

    // verify
    auto* verify = app.add_subcommand("verify", "run theorem checks over graphs and families");
    SuiteConfig cfg;
    cfg.workers = default_jobs();
    GraphArgs verify_in;
    Output verify_out;
    std::vector<std::string> theorem_names;
    std::string k_range;
    std::optional<int> k_single;
    std::string formula_range;
    std::string record_mode = record_mode_name(cfg.records);
    verify_in.add_to(verify, true);
    verify_out.add_to(verify, {"json", "csv", "plain"});
    verify->add_option("--theorem", theorem_names, "theorem ids (repeatable or comma separated); default all")->delimiter(',');
    verify->add_option("--nmin", cfg.n_min, "smallest enumerated order");
    verify->add_option("--nmax", cfg.n_max, "largest enumerated order (also the odot ratio range)");
    verify->add_option("--k", k_single, "single subdivision k");
    verify->add_option("--k-range", k_range, "subdivision k range a..b");
    verify->add_option("--range", formula_range, "path/cycle formula range a..b");
    verify->add_option("--wheel-max", cfg.wheel_max, "largest rim for the wheel gap check");
    verify->add_option("--cap-vertices", cfg.verifier.cap_vertices, "largest subdivided graph to solve");
    verify->add_option("--oracle-budget", cfg.verifier.oracle_budget, "largest order the oracle re-checks")
        ->check(CLI::Range(0, kOracleHardCap));
    verify->add_option("--jobs", cfg.workers, "worker threads")->envname("DOMCHROM_JOBS")->check(CLI::PositiveNumber);
    verify->add_option("--records", record_mode, "all | findings | none")->check(CLI::IsMember({"all", "findings", "none"}));

    // conjecture
    auto* conj = app.add_subcommand("conjecture", "search for chidom(G/e) < chidom(G) - 1");
    int conj_nmax = 6;
    int conj_jobs = default_jobs();
    Output conj_out;
    conj->add_option("--nmax", conj_nmax, "largest order scanned");
    conj->add_option("--jobs", conj_jobs, "worker threads")->envname("DOMCHROM_JOBS")->check(CLI::PositiveNumber);
    conj_out.add_to(conj, {"json", "plain"});

    // sharpness
    auto* sharp = app.add_subcommand("sharpness", "find graphs meeting a bound with equality");
    std::string sharp_theorem;
    std::string sharp_side;
    int sharp_nmax = 5;
    long sharp_max = 0;
    Output sharp_out;
    sharp->add_option("theorem", sharp_theorem, "theorem id")->required();
    sharp->add_option("bound", sharp_side, "lower | upper")->required();
    sharp->add_option("--nmax", sharp_nmax, "largest order scanned");
    sharp->add_option("--max-witnesses", sharp_max, "stop after this many witnesses (0 = all)");
    sharp_out.add_to(sharp, {"json", "plain"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (*solve) {
            const Graph g = solve_in.single();
            const SolverOptions opts{max_vertices};
            const bool plain = solve_out.format == "plain";
            if (which == "chi") {
                const auto r = chromatic_number(g, opts);
                plain ? solve_out.write(plain_solve(g, r, "chi")) : solve_out.write(solve_json(g, r));
            } else if (which == "chidom") {
                const auto r = dominated_chromatic_number(g, opts);
                plain ? solve_out.write(plain_solve(g, r, "chidom")) : solve_out.write(solve_json(g, r));
            } else {
                const auto r = total_dominator_chromatic_number(g, opts);
                plain ? solve_out.write(plain_solve(g, r, "chidt")) : solve_out.write(solve_json(g, r));
            }
            return kExitOk;
        }

        if (*op) {
            const Graph g = op_in.single();
            OperationDescriptor desc;
            desc.kind = parse_op_kind(op_kind);
            if (!op_edge.empty()) desc.edge = parse_edge(op_edge);
            desc.vertex = op_vertex;
            desc.k = op_k;
            const OpResult result = apply(g, desc);
            const std::string g6 = result.graph.order() > 0 ? write_graph6(result.graph) : "";
            if (op_out.format == "plain") {
                std::string text = g6 + "\n";
                for (std::size_t v = 0; v < result.renumbering.size(); ++v) {
                    text += std::to_string(v) + " -> " + std::to_string(result.renumbering[v]) + "\n";
                }
                op_out.write(text);
            } else {
                op_out.write(Json{{"tool", {{"name", kToolName}, {"version", kToolVersion}}},
                                  {"input", write_graph6(g)},
                                  {"operation", to_json(desc)},
                                  {"graph", g6},
                                  {"order", result.graph.order()},
                                  {"size", result.graph.size()},
                                  {"renumbering", result.renumbering}});
            }
            return kExitOk;
        }

        if (*verify) {
            for (const auto& name : theorem_names) cfg.theorems.push_back(parse_theorem(name));
            cfg.graphs = verify_in.explicit_graphs();
            if (!verify_in.graphs_file.empty()) cfg.corpus = verify_in.graphs_file;
            if (k_single) cfg.k_min = cfg.k_max = *k_single;
            if (!k_range.empty()) std::tie(cfg.k_min, cfg.k_max) = parse_range(k_range, "--k-range");
            if (!formula_range.empty()) std::tie(cfg.formula_lo, cfg.formula_hi) = parse_range(formula_range, "--range");
            cfg.records = parse_record_mode(record_mode);
            if (cfg.k_min < 2) throw ArgumentError("subdivision k must be >= 2");

            const SuiteReport report = run_suite(cfg);
            if (verify_out.format == "csv") {
                verify_out.write(suite_summary_csv(report));
            } else if (verify_out.format == "plain") {
                verify_out.write(suite_report_plain(report));
            } else {
                verify_out.write(suite_report_json(report));
            }
            if (report.has_violations()) {
                std::cerr << "domchrom: " << report.totals.violations << " bound violation(s) found\n";
                return kExitFinding;
            }
            return kExitOk;
        }

        if (*conj) {
            const ConjectureReport report = search_conjecture(conj_nmax, conj_jobs);
            conj_out.format == "plain" ? conj_out.write(conjecture_report_plain(report))
                                       : conj_out.write(conjecture_report_json(report));
            if (!report.counterexamples.empty()) {
                std::cerr << "domchrom: " << report.counterexamples.size() << " counterexample(s) found\n";
                return kExitFinding;
            }
            return kExitOk;
        }

        if (*sharp) {
            const SharpnessReport report =
                find_sharpness_witnesses(parse_theorem(sharp_theorem), parse_bound_side(sharp_side), sharp_nmax, sharp_max);
            sharp_out.format == "plain" ? sharp_out.write(sharpness_report_plain(report))
                                        : sharp_out.write(sharpness_report_json(report));
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "domchrom: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
