#pragma once

// Test-only reference implementations. Everything here is deliberately naive
// and shares no code with the search kernel.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "domchrom/graph.hpp"

namespace domchrom::testing {

using AdjMatrix = std::vector<std::vector<bool>>;

inline AdjMatrix matrix_of(const Graph& g) {
    const int n = g.order();
    AdjMatrix m(n, std::vector<bool>(n, false));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) m[u][v] = g.adjacent(u, v);
    return m;
}

// Calls visit(colors) for every map V -> {0..k-1} (plain product, no symmetry breaking).
inline bool for_each_assignment(int n, int k, const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> colors(n, 0);
    while (true) {
        if (visit(colors)) return true;
        int i = 0;
        while (i < n && ++colors[i] == k) colors[i++] = 0;
        if (i == n) return false;
    }
}

inline bool proper(const AdjMatrix& m, const std::vector<int>& c) {
    const int n = static_cast<int>(m.size());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (m[u][v] && c[u] == c[v]) return false;
    return true;
}

// Brute-force chi, chi_dom and chi_d^t straight from the definitions.
inline int brute_chi(const Graph& g) {
    const auto m = matrix_of(g);
    for (int k = 1;; ++k) {
        if (for_each_assignment(g.order(), k, [&](const std::vector<int>& c) { return proper(m, c); })) return k;
    }
}

inline bool class_inside_nbhd(const AdjMatrix& m, const std::vector<int>& c, int color, int w) {
    bool nonempty = false;
    for (std::size_t x = 0; x < c.size(); ++x) {
        if (c[x] != color) continue;
        nonempty = true;
        if (!m[w][x]) return false;
    }
    return nonempty;
}

inline int brute_chidom(const Graph& g) {
    const auto m = matrix_of(g);
    const int n = g.order();
    for (int k = 1;; ++k) {
        const bool found = for_each_assignment(n, k, [&](const std::vector<int>& c) {
            if (!proper(m, c)) return false;
            for (int col = 0; col < k; ++col) {
                if (std::count(c.begin(), c.end(), col) == 0) continue;
                bool dominated = false;
                for (int w = 0; w < n && !dominated; ++w) dominated = class_inside_nbhd(m, c, col, w);
                if (!dominated) return false;
            }
            return true;
        });
        if (found) return k;
    }
}

inline int brute_chidt(const Graph& g) {
    const auto m = matrix_of(g);
    const int n = g.order();
    for (int k = 1;; ++k) {
        const bool found = for_each_assignment(n, k, [&](const std::vector<int>& c) {
            if (!proper(m, c)) return false;
            for (int v = 0; v < n; ++v) {
                bool ok = false;
                for (int col = 0; col < k && !ok; ++col) ok = class_inside_nbhd(m, c, col, v);
                if (!ok) return false;
            }
            return true;
        });
        if (found) return k;
    }
}

inline std::set<std::pair<int, int>> edge_set(const Graph& g) {
    std::set<std::pair<int, int>> out;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v)) out.emplace(u, v);
    return out;
}

// Brute-force isomorphism test over all permutations (small graphs only).
inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<int> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < a.order() && ok; ++u)
            for (int v = u + 1; v < a.order() && ok; ++v) ok = a.adjacent(u, v) == b.adjacent(perm[u], perm[v]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace domchrom::testing
