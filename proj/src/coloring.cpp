#include "domchrom/coloring.hpp"

#include <algorithm>

#include "domchrom/error.hpp"

namespace domchrom {

VertexSet Coloring::color_class(int c) const {
    VertexSet members = 0;
    for (std::size_t v = 0; v < colors.size(); ++v) {
        if (colors[v] == c) members |= singleton(static_cast<Vertex>(v));
    }
    return members;
}

bool Coloring::is_canonical() const {
    int next = 1;
    for (int c : colors) {
        if (c > next || c < 1) return false;
        if (c == next) ++next;
    }
    return next - 1 == k;
}

Coloring canonicalize(std::span<const int> colors) {
    std::vector<int> relabel;
    Coloring out;
    out.colors.reserve(colors.size());
    for (int c : colors) {
        if (c < 1) throw ArgumentError("color " + std::to_string(c) + " is not a positive integer");
        if (static_cast<std::size_t>(c) >= relabel.size()) relabel.resize(static_cast<std::size_t>(c) + 1, 0);
        if (relabel[c] == 0) relabel[c] = ++out.k;
        out.colors.push_back(relabel[c]);
    }
    return out;
}

namespace {

void require_total(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != g.order()) {
        throw ArgumentError("coloring covers " + std::to_string(c.colors.size()) + " of " +
                            std::to_string(g.order()) + " vertices");
    }
    for (int col : c.colors) {
        if (col < 1 || col > c.k) {
            throw ArgumentError("color " + std::to_string(col) + " outside 1.." + std::to_string(c.k));
        }
    }
}

std::vector<VertexSet> classes_of(const Coloring& c) {
    std::vector<VertexSet> classes(static_cast<std::size_t>(c.k), 0);
    for (std::size_t v = 0; v < c.colors.size(); ++v) classes[c.colors[v] - 1] |= singleton(static_cast<Vertex>(v));
    return classes;
}

bool proper_unchecked(const Graph& g, const Coloring& c) {
    for (const Edge& e : g.edges()) {
        if (c.colors[e.u] == c.colors[e.v]) return false;
    }
    return true;
}

}  // namespace

bool is_proper(const Graph& g, const Coloring& c) {
    require_total(g, c);
    return proper_unchecked(g, c);
}

std::optional<std::vector<Vertex>> find_dominators(const Graph& g, const Coloring& c) {
    require_total(g, c);
    if (!proper_unchecked(g, c)) return std::nullopt;
    std::vector<Vertex> dominators;
    for (VertexSet cls : classes_of(c)) {
        if (cls == 0) return std::nullopt;
        Vertex found = -1;
        for (Vertex w = 0; w < g.order() && found < 0; ++w) {
            if ((cls & ~g.neighbors(w)) == 0) found = w;
        }
        if (found < 0) return std::nullopt;
        dominators.push_back(found);
    }
    return dominators;
}

bool is_dominated_coloring(const Graph& g, const Coloring& c) { return find_dominators(g, c).has_value(); }

std::optional<std::vector<int>> find_td_witnesses(const Graph& g, const Coloring& c) {
    require_total(g, c);
    if (g.has_isolated_vertex()) throw DomainError("total dominator coloring undefined: graph has an isolated vertex");
    if (!proper_unchecked(g, c)) return std::nullopt;
    const auto classes = classes_of(c);
    std::vector<int> witnesses;
    for (Vertex v = 0; v < g.order(); ++v) {
        int found = 0;
        for (std::size_t i = 0; i < classes.size() && found == 0; ++i) {
            if (classes[i] != 0 && (classes[i] & ~g.neighbors(v)) == 0) found = static_cast<int>(i) + 1;
        }
        if (found == 0) return std::nullopt;
        witnesses.push_back(found);
    }
    return witnesses;
}

bool is_total_dominator_coloring(const Graph& g, const Coloring& c) { return find_td_witnesses(g, c).has_value(); }

bool verify_certificate(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != g.order()) return false;
    if (!std::ranges::all_of(c.colors, [&](int col) { return col >= 1 && col <= c.k; })) return false;
    const auto classes = classes_of(c);
    if (std::ranges::any_of(classes, [](VertexSet s) { return s == 0; })) return false;
    return proper_unchecked(g, c);
}

bool verify_certificate(const Graph& g, const DominatedColoringCertificate& cert) {
    if (!verify_certificate(g, cert.coloring)) return false;
    if (static_cast<int>(cert.dominators.size()) != cert.coloring.k) return false;
    const auto classes = classes_of(cert.coloring);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const Vertex w = cert.dominators[i];
        if (w < 0 || w >= g.order() || (classes[i] & ~g.neighbors(w)) != 0) return false;
    }
    return true;
}

bool verify_certificate(const Graph& g, const TotalDominatorCertificate& cert) {
    if (!verify_certificate(g, cert.coloring)) return false;
    if (static_cast<int>(cert.witnesses.size()) != g.order()) return false;
    const auto classes = classes_of(cert.coloring);
    for (Vertex v = 0; v < g.order(); ++v) {
        const int w = cert.witnesses[v];
        if (w < 1 || w > cert.coloring.k || (classes[w - 1] & ~g.neighbors(v)) != 0) return false;
    }
    return true;
}

}  // namespace domchrom
