#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "domchrom/graph.hpp"

namespace domchrom {

struct StructureReport {
    bool connected = false;
    std::vector<Edge> bridges;         // sorted
    std::vector<Vertex> cut_vertices;  // sorted
    std::vector<int> degrees;
    int max_degree = 0;

    bool is_bridge(const Edge& e) const;
    bool is_cut_vertex(Vertex v) const;
};

/// Connectivity plus bridges and articulation points from one lowpoint DFS per component.
StructureReport structure(const Graph& g);

bool is_connected(const Graph& g);
int component_count(const Graph& g);

// ---------------------------------------------------------------------------
// Labeled enumeration

/// Largest order accepted by the labeled enumerator (2^21 edge subsets).
inline constexpr int kMaxEnumerationOrder = 7;

/// Vertex pairs of K_n in lexicographic order; bit i of an edge mask selects pair i.
std::vector<Edge> enumeration_pairs(int n);

/// Graph on n vertices whose edge set is selected by mask over enumeration_pairs(n).
Graph graph_from_edge_mask(int n, std::uint64_t mask);

/// Stream over the connected labeled graphs on n vertices, ascending edge mask.
///
/// The half-open mask range [first, last) lets parallel callers partition the
/// work; the default covers every subset exactly once.
class ConnectedGraphEnumerator {
public:
    explicit ConnectedGraphEnumerator(int n);
    ConnectedGraphEnumerator(int n, std::uint64_t first, std::uint64_t last);

    std::optional<Graph> next();

    /// Mask of the graph most recently returned by next().
    std::uint64_t current_mask() const noexcept { return mask_ - 1; }
    std::uint64_t mask_count() const noexcept { return std::uint64_t{1} << pairs_.size(); }
    int order() const noexcept { return n_; }

private:
    int n_;
    std::vector<Edge> pairs_;
    std::uint64_t mask_;
    std::uint64_t last_;
};

ConnectedGraphEnumerator enumerate_connected_graphs(int n);

}  // namespace domchrom
