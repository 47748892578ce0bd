#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace domchrom {

using Vertex = int;

/// Set of vertices of one graph, bit i <=> vertex i.
using VertexSet = std::uint64_t;

inline constexpr VertexSet singleton(Vertex v) { return VertexSet{1} << v; }

inline constexpr VertexSet first_n(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline constexpr int count(VertexSet s) { return std::popcount(s); }

inline constexpr bool contains(VertexSet s, Vertex v) { return (s >> v) & 1U; }

/// Calls fn(v) for each member of s in increasing order.
template <class Fn>
constexpr void for_each_vertex(VertexSet s, Fn&& fn) {
    while (s != 0) {
        fn(static_cast<Vertex>(std::countr_zero(s)));
        s &= s - 1;
    }
}

/// Unordered vertex pair, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    constexpr Edge() = default;
    constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1 stored as adjacency row masks.
///
/// Rows are kept symmetric and irreflexive by every mutator, so any value of
/// this type satisfies the simple-graph invariants.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

    int order() const noexcept { return static_cast<int>(rows_.size()); }
    int size() const noexcept;

    bool adjacent(Vertex u, Vertex v) const { return contains(rows_.at(u), v); }
    VertexSet neighbors(Vertex v) const { return rows_.at(v); }
    int degree(Vertex v) const { return count(rows_.at(v)); }
    VertexSet vertices() const noexcept { return first_n(order()); }

    int max_degree() const noexcept;
    bool has_isolated_vertex() const noexcept;
    bool is_complete() const noexcept;

    /// Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    // Idempotent; self-loops are rejected.
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(Vertex v) const;

    std::vector<VertexSet> rows_;
};

/// Applies a vertex relabeling: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

std::string to_string(const Edge& e);

// ---------------------------------------------------------------------------
// Named families

enum class Family { path, cycle, complete, star, wheel };

/// Size conventions: path/cycle/complete count vertices, star is K_{1,n}
/// (n leaves, n+1 vertices), wheel has n rim vertices plus a hub (vertex n).
struct FamilySpec {
    Family kind = Family::path;
    int n = 1;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

Graph make_family(const FamilySpec& spec);

/// Star with n vertices in total (center 0 plus n-1 leaves).
Graph make_star_on(int n);

std::string family_name(Family kind);
Family parse_family_kind(const std::string& name);

}  // namespace domchrom
