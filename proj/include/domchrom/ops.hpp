#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "domchrom/graph.hpp"

namespace domchrom {

/// Result of an operation that renumbers vertices.
///
/// renumbering[v] is the id of original vertex v in the result, or -1 when v
/// was deleted. Surviving vertices keep their relative order.
struct OpResult {
    Graph graph;
    std::vector<Vertex> renumbering;
};

/// G - e. Throws ArgumentError when e is not an edge of g.
Graph delete_edge(const Graph& g, Edge e);

/// G - v. Requires order >= 2.
OpResult delete_vertex(const Graph& g, Vertex v);

/// G / e: u and v merge into the slot of the smaller endpoint; the result stays simple.
OpResult contract_edge(const Graph& g, Edge e);

/// G / v: v is deleted and its open neighborhood becomes a clique.
OpResult contract_vertex(const Graph& g, Vertex v);

/// G (.) v: every edge joining two neighbors of v is removed; v keeps its edges.
Graph odot_vertex(const Graph& g, Vertex v);

/// Ids of the vertices of a k-subdivision.
///
/// Original vertices come first in their old order, then the internal vertices
/// of each superedge {i,j} (i < j, lexicographic), by distance l = 1..k-1 from i.
struct SubdivisionLabeling {
    int k = 1;
    std::vector<Vertex> original_vertex_map;
    std::map<Edge, std::vector<Vertex>> internal_vertex_map;

    /// Id of x_l on superedge e, where l = 0 and l = k name the endpoints.
    Vertex vertex_on(Edge e, int l) const;
};

struct Subdivision {
    Graph graph;
    SubdivisionLabeling labeling;
};

/// Replaces every edge by a path of length k (k >= 1); k = 1 returns g unchanged.
Subdivision subdivide(const Graph& g, int k);

// ---------------------------------------------------------------------------

enum class OpKind { delete_edge, delete_vertex, contract_edge, contract_vertex, odot_vertex, subdivide };

struct OperationDescriptor {
    OpKind kind = OpKind::delete_edge;
    std::optional<Edge> edge;
    std::optional<Vertex> vertex;
    std::optional<int> k;

    static OperationDescriptor on_edge(OpKind kind, Edge e);
    static OperationDescriptor on_vertex(OpKind kind, Vertex v);
    static OperationDescriptor subdivision(int k);

    friend bool operator==(const OperationDescriptor&, const OperationDescriptor&) = default;
};

std::string op_kind_name(OpKind kind);
OpKind parse_op_kind(const std::string& name);
bool takes_edge(OpKind kind);
bool takes_vertex(OpKind kind);

/// Total order used to sort verification records deterministically.
bool operator<(const OperationDescriptor& a, const OperationDescriptor& b);

/// Throws ArgumentError unless the descriptor's arguments match its kind and exist in g.
void validate(const OperationDescriptor& op, const Graph& g);

/// Runs the described operation. Non-renumbering operations report the identity map.
OpResult apply(const Graph& g, const OperationDescriptor& op);

}  // namespace domchrom
