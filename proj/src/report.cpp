#include "domchrom/report.hpp"

#include <sstream>

#include "domchrom/graph6.hpp"

namespace domchrom {

namespace {

Json tool_json() { return {{"name", kToolName}, {"version", kToolVersion}}; }

Json stats_json(const SearchStats& s) { return {{"nodes", s.nodes}, {"decisions", s.decisions}}; }

template <class Result>
Json solve_common(const Graph& g, const Result& r, const char* quantity) {
    return {{"tool", tool_json()},
            {"graph", write_graph6(g)},
            {"order", g.order()},
            {"size", g.size()},
            {"quantity", quantity},
            {"value", r.value},
            {"certificate", to_json(r.certificate)},
            {"stats", stats_json(r.stats)},
            {"timing", {{"elapsed_ms", r.stats.elapsed_ms}}}};
}

Json records_json(const std::vector<VerificationRecord>& records) {
    Json out = Json::array();
    for (const auto& rec : records) out.push_back(to_json(rec));
    return out;
}

std::string describe(const VerificationRecord& rec) {
    std::ostringstream os;
    os << theorem_name(rec.theorem) << ' ' << rec.graph;
    if (rec.operation) os << ' ' << to_json(*rec.operation).dump();
    if (rec.skipped) {
        os << " skipped(" << skip_reason_name(*rec.skipped) << ')';
    }
    for (const auto& [name, value] : rec.quantities) os << ' ' << name << '=' << value;
    for (const auto& b : rec.bounds) {
        os << ' ' << b.name << ':' << b.lhs << "<=" << b.rhs << (b.holds ? "" : "(VIOLATED)");
    }
    return os.str();
}

}  // namespace

Json to_json(const OperationDescriptor& op) {
    Json j = {{"kind", op_kind_name(op.kind)}};
    if (op.edge) j["edge"] = {op.edge->u, op.edge->v};
    if (op.vertex) j["vertex"] = *op.vertex;
    if (op.k) j["k"] = *op.k;
    return j;
}

Json to_json(const Coloring& c) { return {{"k", c.k}, {"colors", c.colors}}; }

Json to_json(const DominatedColoringCertificate& cert) {
    Json j = to_json(cert.coloring);
    j["dominators"] = cert.dominators;
    return j;
}

Json to_json(const TotalDominatorCertificate& cert) {
    Json j = to_json(cert.coloring);
    j["witnesses"] = cert.witnesses;
    return j;
}

Json to_json(const VerificationRecord& rec) {
    Json j = {{"theorem", theorem_name(rec.theorem)},
              {"graph", rec.graph},
              {"operation", rec.operation ? to_json(*rec.operation) : Json(nullptr)},
              {"quantities", rec.quantities},
              {"violated", rec.violated()},
              {"tight", rec.tight_bounds()}};
    Json bounds = Json::array();
    for (const auto& b : rec.bounds) bounds.push_back({{"name", b.name}, {"lhs", b.lhs}, {"rhs", b.rhs}, {"holds", b.holds}});
    j["bounds"] = std::move(bounds);
    j["skipped"] = rec.skipped ? Json(skip_reason_name(*rec.skipped)) : Json(nullptr);
    if (rec.oracle_confirmed) j["oracle_confirmed"] = *rec.oracle_confirmed;
    if (!rec.certificates.empty()) {
        Json certs = Json::object();
        for (const auto& [role, cert] : rec.certificates) certs[role] = to_json(cert);
        j["certificates"] = std::move(certs);
    }
    return j;
}

Json to_json(const TheoremSummary& s) {
    return {{"checked", s.checked},
            {"violations", s.violations},
            {"tight", s.tight},
            {"skipped", s.skipped},
            {"skip_reasons", s.skip_reasons}};
}

Json to_json(const SuiteConfig& config) {
    Json theorems = Json::array();
    for (TheoremId id : config.theorems.empty() ? all_theorems() : config.theorems) theorems.push_back(theorem_name(id));
    std::string input = "enumeration";
    if (!config.graphs.empty()) {
        input = "graphs";
    } else if (config.corpus) {
        input = "corpus";
    }
    Json graphs = Json::array();
    for (const auto& g : config.graphs) graphs.push_back(write_graph6(g));
    Json bases = Json::array();
    const auto& base_list = !config.subdivision_bases.empty() ? config.subdivision_bases
                            : !config.graphs.empty()          ? config.graphs
                                                              : default_subdivision_bases();
    for (const auto& g : base_list) bases.push_back(write_graph6(g));
    return {{"theorems", theorems},
            {"input", input},
            {"n_min", config.n_min},
            {"n_max", config.n_max},
            {"corpus", config.corpus ? Json(config.corpus->string()) : Json(nullptr)},
            {"graphs", graphs},
            {"subdivision_bases", bases},
            {"k_min", config.k_min},
            {"k_max", config.k_max},
            {"formula_range", {config.formula_lo, config.formula_hi}},
            {"wheel_max", config.wheel_max},
            {"records", record_mode_name(config.records)},
            {"cap_vertices", config.verifier.cap_vertices},
            {"oracle_budget", config.verifier.oracle_budget},
            {"solver_max_vertices", config.verifier.solver.max_vertices}};
}

Json suite_report_json(const SuiteReport& report) {
    Json per = Json::object();
    for (const auto& [id, s] : report.per_theorem) per[theorem_name(id)] = to_json(s);
    return {{"tool", tool_json()},
            {"config", to_json(report.config)},
            {"records", records_json(report.records)},
            {"summary", to_json(report.totals)},
            {"per_theorem", per},
            {"graphs_scanned", report.graphs_scanned},
            {"timing", {{"elapsed_ms", report.elapsed_ms}, {"workers", report.config.workers}}}};
}

Json conjecture_report_json(const ConjectureReport& report) {
    Json per_n = Json::object();
    for (const auto& [n, count] : report.scanned_per_n) per_n[std::to_string(n)] = count;
    return {{"tool", tool_json()},
            {"n_max", report.n_max},
            {"scanned_per_n", per_n},
            {"graphs_scanned", report.graphs_scanned},
            {"pairs_checked", report.pairs_checked},
            {"pairs_skipped", report.pairs_skipped},
            {"tight", report.tight},
            {"counterexamples", records_json(report.counterexamples)},
            {"timing", {{"elapsed_ms", report.elapsed_ms}}}};
}

Json sharpness_report_json(const SharpnessReport& report) {
    return {{"tool", tool_json()},
            {"theorem", theorem_name(report.theorem)},
            {"bound", bound_side_name(report.side)},
            {"n_max", report.n_max},
            {"graphs_scanned", report.graphs_scanned},
            {"witness_count", report.witnesses.size()},
            {"witnesses", records_json(report.witnesses)},
            {"timing", {{"elapsed_ms", report.elapsed_ms}}}};
}

Json solve_json(const Graph& g, const ChromaticResult& r) { return solve_common(g, r, "chi"); }
Json solve_json(const Graph& g, const DominatedResult& r) { return solve_common(g, r, "chidom"); }
Json solve_json(const Graph& g, const TotalDominatorResult& r) { return solve_common(g, r, "chidt"); }

Json report_body(Json report) {
    report.erase("timing");
    return report;
}

std::string suite_summary_csv(const SuiteReport& report) {
    std::ostringstream os;
    os << "theorem,checked,violations,tight,skipped\n";
    auto row = [&](const std::string& name, const TheoremSummary& s) {
        os << name << ',' << s.checked << ',' << s.violations << ',' << s.tight << ',' << s.skipped << '\n';
    };
    for (const auto& [id, s] : report.per_theorem) row(theorem_name(id), s);
    row("total", report.totals);
    return os.str();
}

std::string suite_report_plain(const SuiteReport& report) {
    std::ostringstream os;
    os << "graphs scanned: " << report.graphs_scanned << '\n';
    for (const auto& [id, s] : report.per_theorem) {
        os << theorem_name(id) << ": checked " << s.checked << ", violations " << s.violations << ", tight " << s.tight
           << ", skipped " << s.skipped << '\n';
    }
    const auto& t = report.totals;
    os << "total: checked " << t.checked << ", violations " << t.violations << ", tight " << t.tight << ", skipped "
       << t.skipped << '\n';
    for (const auto& rec : report.records) os << "  " << describe(rec) << '\n';
    return os.str();
}

std::string conjecture_report_plain(const ConjectureReport& report) {
    std::ostringstream os;
    os << "graphs scanned: " << report.graphs_scanned << " (n <= " << report.n_max << ")\n";
    os << "edge contractions checked: " << report.pairs_checked << ", skipped " << report.pairs_skipped << ", tight "
       << report.tight << '\n';
    os << "counterexamples: " << report.counterexamples.size() << '\n';
    for (const auto& rec : report.counterexamples) os << "  " << describe(rec) << '\n';
    return os.str();
}

std::string sharpness_report_plain(const SharpnessReport& report) {
    std::ostringstream os;
    os << theorem_name(report.theorem) << ' ' << bound_side_name(report.side) << " bound, n <= " << report.n_max << ": "
       << report.witnesses.size() << " witnesses among " << report.graphs_scanned << " graphs\n";
    for (const auto& rec : report.witnesses) os << "  " << describe(rec) << '\n';
    return os.str();
}

}  // namespace domchrom
