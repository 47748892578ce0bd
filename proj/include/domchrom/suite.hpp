#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "domchrom/graph.hpp"
#include "domchrom/verify.hpp"

namespace domchrom {

enum class RecordMode {
    all,       // every record, skips included
    findings,  // violations and formula-domain discrepancies
    none,
};

std::string record_mode_name(RecordMode mode);
RecordMode parse_record_mode(const std::string& name);

struct SuiteConfig {
    /// Labeled connected graphs on n_min..n_max vertices feed the per-graph theorems.
    int n_min = 1;
    int n_max = 6;
    /// Empty means every theorem.
    std::vector<TheoremId> theorems;
    /// graph6 corpus replacing the enumeration.
    std::optional<std::filesystem::path> corpus;
    /// Explicit graphs replacing both the enumeration and the default subdivision bases.
    std::vector<Graph> graphs;
    /// Subdivision bases; empty selects P_3, K_3, K_{1,3}, C_4, K_4 and K_{1,2}.
    std::vector<Graph> subdivision_bases;
    int k_min = 2;
    int k_max = 5;
    int formula_lo = 3;
    int formula_hi = 12;
    int wheel_max = 16;
    int workers = 1;
    RecordMode records = RecordMode::findings;
    VerifierOptions verifier;
};

struct TheoremSummary {
    long checked = 0;
    long violations = 0;
    long tight = 0;
    long skipped = 0;
    std::map<std::string, long> skip_reasons;

    void add(const VerificationRecord& rec);
    void merge(const TheoremSummary& other);
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<VerificationRecord> records;  // sorted with record_less
    std::map<TheoremId, TheoremSummary> per_theorem;
    TheoremSummary totals;
    long graphs_scanned = 0;
    double elapsed_ms = 0.0;

    bool has_violations() const { return totals.violations > 0; }
};

std::vector<Graph> default_subdivision_bases();

/// Runs the configured theorem checks. Output is independent of config.workers.
/// Throws IoError when the corpus cannot be read.
SuiteReport run_suite(const SuiteConfig& config);

struct ConjectureReport {
    int n_max = 0;
    std::map<int, long> scanned_per_n;
    long graphs_scanned = 0;
    long pairs_checked = 0;
    long pairs_skipped = 0;
    long tight = 0;
    /// Oracle-confirmed instances with chi_dom(G/e) < chi_dom(G) - 1.
    std::vector<VerificationRecord> counterexamples;
    double elapsed_ms = 0.0;
};

/// Scans every labeled connected graph on 1..n_max vertices (3 <= n_max <= 7)
/// for counterexamples to chi_dom(G) - 1 <= chi_dom(G/e).
ConjectureReport search_conjecture(int n_max, int workers = 1, const VerifierOptions& opts = {});

enum class BoundSide { lower, upper };

std::string bound_side_name(BoundSide side);
BoundSide parse_bound_side(const std::string& name);

struct SharpnessReport {
    TheoremId theorem = TheoremId::edge_deletion;
    BoundSide side = BoundSide::lower;
    int n_max = 0;
    long graphs_scanned = 0;
    /// Records meeting the bound with equality, by increasing order, then enumeration order.
    std::vector<VerificationRecord> witnesses;
    double elapsed_ms = 0.0;
};

/// Searches labeled connected graphs with 1..n_max vertices for instances
/// meeting the requested bound with equality. max_witnesses = 0 means no
/// limit; otherwise the scan stops once that many are found. Throws
/// ArgumentError for theorems without that bound.
SharpnessReport find_sharpness_witnesses(TheoremId theorem, BoundSide side, int n_max, long max_witnesses = 0,
                                         const VerifierOptions& opts = {});

}  // namespace domchrom
