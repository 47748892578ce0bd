#include "domchrom/ops.hpp"

#include <numeric>
#include <tuple>

#include "domchrom/error.hpp"

namespace domchrom {

namespace {

void require_vertex(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.order()) {
        throw ArgumentError("vertex " + std::to_string(v) + " not in graph of order " +
                            std::to_string(g.order()));
    }
}

void require_edge(const Graph& g, Edge e) {
    require_vertex(g, e.u);
    require_vertex(g, e.v);
    if (!g.adjacent(e.u, e.v)) throw ArgumentError("edge " + to_string(e) + " not in graph");
}

// Map that drops `gone` and shifts later vertices down by one.
std::vector<Vertex> drop_one(int n, Vertex gone) {
    std::vector<Vertex> map(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) map[v] = v < gone ? v : (v == gone ? -1 : v - 1);
    return map;
}

Graph induced_without(const Graph& g, Vertex gone, const std::vector<Vertex>& map) {
    Graph out(g.order() - 1);
    for (const Edge& e : g.edges()) {
        if (e.u != gone && e.v != gone) out.add_edge(map[e.u], map[e.v]);
    }
    return out;
}

}  // namespace

Graph delete_edge(const Graph& g, Edge e) {
    require_edge(g, e);
    Graph out = g;
    out.remove_edge(e.u, e.v);
    return out;
}

OpResult delete_vertex(const Graph& g, Vertex v) {
    require_vertex(g, v);
    if (g.order() < 2) throw ArgumentError("cannot delete the last remaining vertex");
    auto map = drop_one(g.order(), v);
    Graph out = induced_without(g, v, map);
    return {std::move(out), std::move(map)};
}

OpResult contract_edge(const Graph& g, Edge e) {
    require_edge(g, e);
    auto map = drop_one(g.order(), e.v);
    Graph out = induced_without(g, e.v, map);
    const Vertex merged = map[e.u];
    for_each_vertex(g.neighbors(e.v) & ~singleton(e.u), [&](Vertex w) { out.add_edge(merged, map[w]); });
    map[e.v] = merged;
    return {std::move(out), std::move(map)};
}

OpResult contract_vertex(const Graph& g, Vertex v) {
    require_vertex(g, v);
    if (g.order() < 2) throw ArgumentError("cannot contract the last remaining vertex");
    auto map = drop_one(g.order(), v);
    Graph out = induced_without(g, v, map);
    const VertexSet nbrs = g.neighbors(v);
    for_each_vertex(nbrs, [&](Vertex a) {
        for_each_vertex(nbrs & ~first_n(a + 1), [&](Vertex b) { out.add_edge(map[a], map[b]); });
    });
    return {std::move(out), std::move(map)};
}

Graph odot_vertex(const Graph& g, Vertex v) {
    require_vertex(g, v);
    Graph out = g;
    const VertexSet nbrs = g.neighbors(v);
    for_each_vertex(nbrs, [&](Vertex a) {
        for_each_vertex(g.neighbors(a) & nbrs, [&](Vertex b) { out.remove_edge(a, b); });
    });
    return out;
}

Vertex SubdivisionLabeling::vertex_on(Edge e, int l) const {
    if (l < 0 || l > k) throw ArgumentError("position " + std::to_string(l) + " outside 0.." + std::to_string(k));
    if (l == 0) return original_vertex_map.at(e.u);
    if (l == k) return original_vertex_map.at(e.v);
    const auto it = internal_vertex_map.find(e);
    if (it == internal_vertex_map.end()) throw ArgumentError("no superedge " + to_string(e));
    return it->second[static_cast<std::size_t>(l - 1)];
}

Subdivision subdivide(const Graph& g, int k) {
    if (k < 1) throw ArgumentError("subdivision parameter k must be >= 1, got " + std::to_string(k));
    const int n = g.order();
    const auto edges = g.edges();
    const long total = n + static_cast<long>(k - 1) * static_cast<long>(edges.size());
    if (total > Graph::kMaxVertices) {
        throw BudgetError("subdivision would have " + std::to_string(total) + " vertices");
    }

    Subdivision out{Graph(static_cast<int>(total)), {}};
    auto& lab = out.labeling;
    lab.k = k;
    lab.original_vertex_map.resize(static_cast<std::size_t>(n));
    std::iota(lab.original_vertex_map.begin(), lab.original_vertex_map.end(), 0);

    Vertex next = n;
    for (const Edge& e : edges) {
        std::vector<Vertex>& inner = lab.internal_vertex_map[e];
        for (int l = 1; l < k; ++l) inner.push_back(next++);
        Vertex prev = e.u;
        for (Vertex x : inner) {
            out.graph.add_edge(prev, x);
            prev = x;
        }
        out.graph.add_edge(prev, e.v);
    }
    return out;
}

// ---------------------------------------------------------------------------

OperationDescriptor OperationDescriptor::on_edge(OpKind kind, Edge e) {
    OperationDescriptor d;
    d.kind = kind;
    d.edge = e;
    return d;
}

OperationDescriptor OperationDescriptor::on_vertex(OpKind kind, Vertex v) {
    OperationDescriptor d;
    d.kind = kind;
    d.vertex = v;
    return d;
}

OperationDescriptor OperationDescriptor::subdivision(int k) {
    OperationDescriptor d;
    d.kind = OpKind::subdivide;
    d.k = k;
    return d;
}

std::string op_kind_name(OpKind kind) {
    switch (kind) {
        case OpKind::delete_edge: return "delete_edge";
        case OpKind::delete_vertex: return "delete_vertex";
        case OpKind::contract_edge: return "contract_edge";
        case OpKind::contract_vertex: return "contract_vertex";
        case OpKind::odot_vertex: return "odot_vertex";
        case OpKind::subdivide: return "subdivide";
    }
    return "?";
}

OpKind parse_op_kind(const std::string& name) {
    for (OpKind k : {OpKind::delete_edge, OpKind::delete_vertex, OpKind::contract_edge,
                     OpKind::contract_vertex, OpKind::odot_vertex, OpKind::subdivide}) {
        if (op_kind_name(k) == name) return k;
    }
    if (name == "odot") return OpKind::odot_vertex;
    throw ArgumentError("unknown operation '" + name + "'");
}

bool takes_edge(OpKind kind) { return kind == OpKind::delete_edge || kind == OpKind::contract_edge; }

bool takes_vertex(OpKind kind) {
    return kind == OpKind::delete_vertex || kind == OpKind::contract_vertex || kind == OpKind::odot_vertex;
}

bool operator<(const OperationDescriptor& a, const OperationDescriptor& b) {
    return std::tie(a.kind, a.edge, a.vertex, a.k) < std::tie(b.kind, b.edge, b.vertex, b.k);
}

void validate(const OperationDescriptor& op, const Graph& g) {
    const std::string name = op_kind_name(op.kind);
    if (takes_edge(op.kind)) {
        if (!op.edge || op.vertex || op.k) throw ArgumentError(name + " takes exactly one edge argument");
        require_edge(g, *op.edge);
    } else if (takes_vertex(op.kind)) {
        if (!op.vertex || op.edge || op.k) throw ArgumentError(name + " takes exactly one vertex argument");
        require_vertex(g, *op.vertex);
    } else {
        if (!op.k || op.edge || op.vertex) throw ArgumentError("subdivide takes exactly one k argument");
        if (*op.k < 1) throw ArgumentError("subdivision parameter k must be >= 1");
    }
}

OpResult apply(const Graph& g, const OperationDescriptor& op) {
    validate(op, g);
    auto identity = [&] {
        std::vector<Vertex> map(static_cast<std::size_t>(g.order()));
        std::iota(map.begin(), map.end(), 0);
        return map;
    };
    switch (op.kind) {
        case OpKind::delete_edge: return {delete_edge(g, *op.edge), identity()};
        case OpKind::delete_vertex: return delete_vertex(g, *op.vertex);
        case OpKind::contract_edge: return contract_edge(g, *op.edge);
        case OpKind::contract_vertex: return contract_vertex(g, *op.vertex);
        case OpKind::odot_vertex: return {odot_vertex(g, *op.vertex), identity()};
        case OpKind::subdivide: {
            auto sub = subdivide(g, *op.k);
            return {std::move(sub.graph), std::move(sub.labeling.original_vertex_map)};
        }
    }
    throw ArgumentError("unknown operation");
}

}  // namespace domchrom
