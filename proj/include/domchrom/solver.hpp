#pragma once

#include <cstdint>

#include "domchrom/coloring.hpp"
#include "domchrom/graph.hpp"

namespace domchrom {

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t decisions = 0;
    double elapsed_ms = 0.0;
};

template <class Certificate>
struct SolveResult {
    int value = 0;
    Certificate certificate;
    SearchStats stats;
};

using ChromaticResult = SolveResult<Coloring>;
using DominatedResult = SolveResult<DominatedColoringCertificate>;
using TotalDominatorResult = SolveResult<TotalDominatorCertificate>;

struct SolverOptions {
    /// Instances above this order are refused with BudgetError.
    int max_vertices = 40;
};

/// Exact chi(G) by iterative deepening on k with a clique lower bound.
ChromaticResult chromatic_number(const Graph& g, const SolverOptions& opts = {});

/// Exact dominated chromatic number.
///
/// Vertices are branched in descending-degree order (ties by id) and a vertex
/// may open at most one new color. Each class keeps the set of vertices whose
/// open neighborhood still contains it; a branch dies as soon as that set is
/// empty, since adding vertices can only shrink it. Throws DomainError on an
/// isolated vertex and ArgumentError on the empty graph.
DominatedResult dominated_chromatic_number(const Graph& g, const SolverOptions& opts = {});

/// Exact total dominator chromatic number (no isolated vertices allowed).
TotalDominatorResult total_dominator_chromatic_number(const Graph& g, const SolverOptions& opts = {});

/// Size of a greedily grown clique (max over start vertices); a lower bound on chi.
int greedy_clique_bound(const Graph& g);

inline constexpr int kOracleDefaultBudget = 8;
inline constexpr int kOracleHardCap = 11;

/// Reference value for chi_dom by exhaustive enumeration of canonical
/// assignments, k = 1, 2, ... Shares nothing with the search kernel except
/// is_dominated_coloring. Refuses graphs larger than max_vertices (itself at
/// most kOracleHardCap) with BudgetError.
int oracle_dominated_chromatic(const Graph& g, int max_vertices = kOracleDefaultBudget);

}  // namespace domchrom
