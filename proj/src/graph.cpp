#include "domchrom/graph.hpp"

#include <algorithm>

#include "domchrom/error.hpp"

namespace domchrom {

Graph::Graph(int n) {
    if (n < 0 || n > kMaxVertices) {
        throw ParameterError("graph order " + std::to_string(n) + " outside 0.." +
                             std::to_string(kMaxVertices));
    }
    rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
}

Graph::Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

int Graph::size() const noexcept {
    int twice = 0;
    for (VertexSet row : rows_) twice += count(row);
    return twice / 2;
}

int Graph::max_degree() const noexcept {
    int best = 0;
    for (VertexSet row : rows_) best = std::max(best, count(row));
    return best;
}

bool Graph::has_isolated_vertex() const noexcept {
    return std::ranges::any_of(rows_, [](VertexSet row) { return row == 0; });
}

bool Graph::is_complete() const noexcept {
    const int n = order();
    return size() == n * (n - 1) / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u) {
        for_each_vertex(rows_[u] & ~first_n(u + 1), [&](Vertex v) { out.emplace_back(u, v); });
    }
    return out;
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= order()) {
        throw ArgumentError("vertex " + std::to_string(v) + " not in graph of order " +
                            std::to_string(order()));
    }
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
    rows_[u] |= singleton(v);
    rows_[v] |= singleton(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    rows_[u] &= ~singleton(v);
    rows_[v] &= ~singleton(u);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (static_cast<int>(perm.size()) != g.order()) {
        throw ArgumentError("relabeling has wrong length");
    }
    Graph out(g.order());
    for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
    return out;
}

std::string to_string(const Edge& e) {
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

// ---------------------------------------------------------------------------

namespace {

void require(bool ok, const FamilySpec& spec, const char* range) {
    if (!ok) {
        throw ParameterError(family_name(spec.kind) + ":" + std::to_string(spec.n) +
                             " out of range (" + range + ")");
    }
}

}  // namespace

Graph make_family(const FamilySpec& spec) {
    const int n = spec.n;
    switch (spec.kind) {
        case Family::path: {
            require(n >= 1 && n <= Graph::kMaxVertices, spec, "n >= 1");
            Graph g(n);
            for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
            return g;
        }
        case Family::cycle: {
            require(n >= 3 && n <= Graph::kMaxVertices, spec, "n >= 3");
            Graph g(n);
            for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
            return g;
        }
        case Family::complete: {
            require(n >= 1 && n <= Graph::kMaxVertices, spec, "n >= 1");
            Graph g(n);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
            return g;
        }
        case Family::star: {
            require(n >= 1 && n < Graph::kMaxVertices, spec, "n >= 1");
            Graph g(n + 1);
            for (Vertex v = 1; v <= n; ++v) g.add_edge(0, v);
            return g;
        }
        case Family::wheel: {
            require(n >= 3 && n < Graph::kMaxVertices, spec, "n >= 3");
            Graph g(n + 1);
            for (Vertex v = 0; v < n; ++v) {
                g.add_edge(v, (v + 1) % n);
                g.add_edge(v, n);
            }
            return g;
        }
    }
    throw ParameterError("unknown family");
}

Graph make_star_on(int n) {
    if (n < 2) throw ParameterError("star on " + std::to_string(n) + " vertices (need n >= 2)");
    return make_family({Family::star, n - 1});
}

std::string family_name(Family kind) {
    switch (kind) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::star: return "star";
        case Family::wheel: return "wheel";
    }
    return "?";
}

Family parse_family_kind(const std::string& name) {
    for (Family f : {Family::path, Family::cycle, Family::complete, Family::star, Family::wheel}) {
        if (family_name(f) == name) return f;
    }
    throw ParameterError("unknown graph family '" + name + "'");
}

}  // namespace domchrom
