#include "domchrom/structure.hpp"

#include <algorithm>

#include "domchrom/error.hpp"

namespace domchrom {

bool StructureReport::is_bridge(const Edge& e) const {
    return std::ranges::binary_search(bridges, e);
}

bool StructureReport::is_cut_vertex(Vertex v) const {
    return std::ranges::binary_search(cut_vertices, v);
}

namespace {

VertexSet reach(const Graph& g, Vertex start) {
    VertexSet seen = singleton(start);
    VertexSet frontier = seen;
    while (frontier != 0) {
        VertexSet next = 0;
        for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v); });
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

struct Lowpoint {
    const Graph& g;
    std::vector<int> disc;
    std::vector<int> low;
    std::vector<Edge>& bridges;
    std::vector<bool>& cut;
    int clock = 0;

    void dfs(Vertex v, Vertex parent) {
        disc[v] = low[v] = clock++;
        int children = 0;
        for_each_vertex(g.neighbors(v), [&](Vertex w) {
            if (disc[w] < 0) {
                ++children;
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] > disc[v]) bridges.emplace_back(v, w);
                if (parent >= 0 && low[w] >= disc[v]) cut[v] = true;
            } else if (w != parent) {
                low[v] = std::min(low[v], disc[w]);
            }
        });
        if (parent < 0 && children > 1) cut[v] = true;
    }
};

}  // namespace

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    return reach(g, 0) == g.vertices();
}

int component_count(const Graph& g) {
    int components = 0;
    VertexSet left = g.vertices();
    while (left != 0) {
        left &= ~reach(g, std::countr_zero(left));
        ++components;
    }
    return components;
}

StructureReport structure(const Graph& g) {
    const int n = g.order();
    StructureReport report;
    report.connected = is_connected(g);
    report.degrees.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) report.degrees[v] = g.degree(v);
    report.max_degree = g.max_degree();

    std::vector<bool> cut(static_cast<std::size_t>(n), false);
    Lowpoint lp{g, std::vector<int>(n, -1), std::vector<int>(n, 0), report.bridges, cut};
    for (Vertex v = 0; v < n; ++v) {
        if (lp.disc[v] < 0) lp.dfs(v, -1);
    }
    std::ranges::sort(report.bridges);
    for (Vertex v = 0; v < n; ++v) {
        if (cut[v]) report.cut_vertices.push_back(v);
    }
    return report;
}

// ---------------------------------------------------------------------------

std::vector<Edge> enumeration_pairs(int n) {
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    Graph g(n);
    const auto pairs = enumeration_pairs(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((mask >> i) & 1U) g.add_edge(pairs[i].u, pairs[i].v);
    }
    return g;
}

ConnectedGraphEnumerator::ConnectedGraphEnumerator(int n)
    : ConnectedGraphEnumerator(n, 0, ~std::uint64_t{0}) {}

ConnectedGraphEnumerator::ConnectedGraphEnumerator(int n, std::uint64_t first, std::uint64_t last)
    : n_(n), mask_(first), last_(last) {
    if (n < 1 || n > kMaxEnumerationOrder) {
        throw BudgetError("labeled enumeration supports 1 <= n <= " +
                          std::to_string(kMaxEnumerationOrder) + ", got " + std::to_string(n));
    }
    pairs_ = enumeration_pairs(n);
    last_ = std::min(last_, mask_count());
}

std::optional<Graph> ConnectedGraphEnumerator::next() {
    // Connectivity test works on raw rows so rejected subsets cost no allocation.
    std::vector<VertexSet> rows(static_cast<std::size_t>(n_));
    const VertexSet all = first_n(n_);
    while (mask_ < last_) {
        const std::uint64_t mask = mask_++;
        std::ranges::fill(rows, 0);
        for (std::size_t i = 0; i < pairs_.size(); ++i) {
            if ((mask >> i) & 1U) {
                rows[pairs_[i].u] |= singleton(pairs_[i].v);
                rows[pairs_[i].v] |= singleton(pairs_[i].u);
            }
        }
        VertexSet seen = 1;
        VertexSet frontier = 1;
        while (frontier != 0) {
            VertexSet next = 0;
            for_each_vertex(frontier, [&](Vertex v) { next |= rows[v]; });
            frontier = next & ~seen;
            seen |= next;
        }
        if (seen != all) continue;
        Graph g(n_);
        for_each_vertex(mask, [&](Vertex i) { g.add_edge(pairs_[i].u, pairs_[i].v); });
        return g;
    }
    return std::nullopt;
}

ConnectedGraphEnumerator enumerate_connected_graphs(int n) { return ConnectedGraphEnumerator(n); }

}  // namespace domchrom
