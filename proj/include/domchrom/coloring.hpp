#pragma once

#include <optional>
#include <span>
#include <vector>

#include "domchrom/graph.hpp"

namespace domchrom {

/// Vertex coloring with colors 1..k, every color used.
///
/// Instances built through canonicalize() are additionally in first-occurrence
/// form: scanning vertices 0,1,2,... colors appear as 1,2,3,...
struct Coloring {
    std::vector<int> colors;
    int k = 0;

    int color_of(Vertex v) const { return colors.at(static_cast<std::size_t>(v)); }

    /// Members of color class c (1-based).
    VertexSet color_class(int c) const;

    bool is_canonical() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Relabels colors in order of first occurrence. Throws ArgumentError on
/// colors < 1.
Coloring canonicalize(std::span<const int> colors);

struct DominatedColoringCertificate {
    Coloring coloring;
    /// dominators[i] has color class i+1 inside its open neighborhood.
    std::vector<Vertex> dominators;
};

struct TotalDominatorCertificate {
    Coloring coloring;
    /// witnesses[v] is a color whose whole class lies in N(v).
    std::vector<int> witnesses;
};

// The checkers below throw ArgumentError when the assignment is not total
// (wrong length or a color < 1).

bool is_proper(const Graph& g, const Coloring& c);

/// Smallest-id dominator for each class, or nullopt if c is not a dominated coloring.
std::optional<std::vector<Vertex>> find_dominators(const Graph& g, const Coloring& c);
bool is_dominated_coloring(const Graph& g, const Coloring& c);

/// Smallest witnessing color per vertex, or nullopt if c is not a TD-coloring.
/// Throws DomainError when g has an isolated vertex.
std::optional<std::vector<int>> find_td_witnesses(const Graph& g, const Coloring& c);
bool is_total_dominator_coloring(const Graph& g, const Coloring& c);

/// Checks a certificate exactly as given (the stored witnesses, not recomputed ones).
bool verify_certificate(const Graph& g, const Coloring& c);
bool verify_certificate(const Graph& g, const DominatedColoringCertificate& cert);
bool verify_certificate(const Graph& g, const TotalDominatorCertificate& cert);

}  // namespace domchrom
