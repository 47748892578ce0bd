#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "domchrom/coloring.hpp"
#include "domchrom/graph.hpp"
#include "domchrom/ops.hpp"
#include "domchrom/solver.hpp"

namespace domchrom {

enum class TheoremId {
    edge_deletion,
    vertex_deletion,
    wheel_equality,
    wheel_gap,
    edge_contraction,
    contraction_conjecture,
    corollary_edge,
    vertex_contraction,
    corollary_vertex,
    odot,
    odot_ratio,
    subdivision_frac,
    subdivision_dfrac,
    path_cycle_formula,
};

std::string theorem_name(TheoremId id);
TheoremId parse_theorem(const std::string& name);
const std::vector<TheoremId>& all_theorems();

enum class SkipReason {
    bridge,
    cut_vertex,
    isolated_vertex_result,
    degenerate_size,
    budget,
    disconnected,
    formula_domain,
};

std::string skip_reason_name(SkipReason reason);

/// One inequality lhs <= rhs. Strict inequalities are stored as lhs + 1 <= rhs.
struct BoundCheck {
    std::string name;
    long lhs = 0;
    long rhs = 0;
    bool holds = true;

    static BoundCheck of(std::string name, long lhs, long rhs) { return {std::move(name), lhs, rhs, lhs <= rhs}; }
    bool tight() const { return lhs == rhs; }
};

struct VerificationRecord {
    TheoremId theorem = TheoremId::edge_deletion;
    std::string graph;  // graph6
    std::optional<OperationDescriptor> operation;
    std::map<std::string, long> quantities;
    std::vector<BoundCheck> bounds;
    std::optional<SkipReason> skipped;
    /// Set only on violated records: true when every chi_dom value in the
    /// record was reproduced by the enumeration oracle, false when some graph
    /// was beyond the oracle budget.
    std::optional<bool> oracle_confirmed;
    /// Dominated coloring certificates attached to violated records, keyed by role ("G", "result").
    std::map<std::string, DominatedColoringCertificate> certificates;

    bool violated() const;
    bool tight() const;
    std::vector<std::string> tight_bounds() const;
    const BoundCheck* bound(const std::string& name) const;
};

/// Deterministic record order: graph6, then operation (none first), then theorem.
bool record_less(const VerificationRecord& a, const VerificationRecord& b);

struct VerifierOptions {
    SolverOptions solver;
    int oracle_budget = kOracleDefaultBudget;
    /// Largest G^{1/k} the subdivision checks will solve.
    int cap_vertices = 20;
};

/// Runs theorem instances on single graphs.
///
/// Holds a memo of chi_dom values for small graphs, so one instance should be
/// owned by each worker thread.
class Verifier {
public:
    explicit Verifier(VerifierOptions opts = {}) : opts_(opts) {}

    const VerifierOptions& options() const { return opts_; }

    int chidom(const Graph& g);

    // Per-graph checks. Disconnected inputs yield one skip record.

    std::vector<VerificationRecord> check_edge_deletion(const Graph& g);
    std::vector<VerificationRecord> check_vertex_deletion(const Graph& g);
    std::optional<VerificationRecord> check_wheel_equality(const Graph& g);
    /// Emits an edge_contraction record and a contraction_conjecture record per edge.
    std::vector<VerificationRecord> check_edge_contraction(const Graph& g);
    std::vector<VerificationRecord> check_vertex_contraction(const Graph& g);
    std::vector<VerificationRecord> check_odot(const Graph& g);
    /// corollary_edge records per non-bridge edge, corollary_vertex records per non-cut vertex.
    std::vector<VerificationRecord> check_corollaries(const Graph& g);
    /// subdivision_frac and subdivision_dfrac records for G^{1/k}.
    std::vector<VerificationRecord> check_subdivision(const Graph& g, int k);

    /// Every per-graph check that belongs to `theorem`. Empty for family-range theorems.
    std::vector<VerificationRecord> check(TheoremId theorem, const Graph& g);

    // Family-range checks.

    std::vector<VerificationRecord> check_wheel_gap(int n_max);
    std::vector<VerificationRecord> check_odot_ratio(int n_max);
    std::vector<VerificationRecord> check_path_cycle_formula(int n_lo, int n_hi);

private:
    void confirm(VerificationRecord& rec, const std::vector<std::pair<std::string, Graph>>& graphs);

    VerifierOptions opts_;
    std::unordered_map<std::uint64_t, int> memo_;
};

/// Theorems whose instances come from single input graphs (as opposed to family ranges).
bool is_per_graph(TheoremId id);
bool is_subdivision(TheoremId id);

}  // namespace domchrom
