#include "domchrom/solver.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "domchrom/error.hpp"

namespace domchrom {

namespace {

// Partial coloring shared by all search variants. Colors are 0-based here.
struct State {
    const Graph& g;
    int k;
    std::array<VertexSet, Graph::kMaxVertices> members{};
    // Union of the neighborhoods of each class: vertices that can no longer join it.
    std::array<VertexSet, Graph::kMaxVertices> touch{};
    int used = 0;
    VertexSet uncolored;
    std::vector<int> color;

    State(const Graph& graph, int colors)
        : g(graph), k(colors), uncolored(graph.vertices()), color(static_cast<std::size_t>(graph.order()), -1) {}

    int unopened() const { return k - used; }
};

struct ProperRules {
    bool allows(const State& s, Vertex v, int c) const { return (s.members[c] & s.g.neighbors(v)) == 0; }
    void push(State&, Vertex, int) {}
    void pop(State&, Vertex, int) {}

    bool viable(const State& s) const {
        if (s.unopened() > 0) return true;
        VertexSet ok = 0;
        for (int c = 0; c < s.used; ++c) ok |= s.uncolored & ~s.touch[c];
        return ok == s.uncolored;
    }

    bool accept(const State&) const { return true; }
};

class DominatedRules {
public:
    explicit DominatedRules(const Graph& g) { cand_.fill(g.vertices()); }

    bool allows(const State& s, Vertex v, int c) const {
        const VertexSet nv = s.g.neighbors(v);
        return (s.members[c] & nv) == 0 && (cand_[c] & nv) != 0;
    }

    void push(State& s, Vertex v, int c) {
        saved_.push_back(cand_[c]);
        cand_[c] &= s.g.neighbors(v);
    }

    void pop(State&, Vertex, int c) {
        cand_[c] = saved_.back();
        saved_.pop_back();
    }

    bool viable(const State& s) const {
        const VertexSet left = s.uncolored;
        if (left == 0) return true;

        // Every uncolored vertex needs a class it may still join, and the
        // classes together must be able to absorb all of them.
        VertexSet reachable = 0;
        int capacity = 0;
        for (int c = 0; c < s.used; ++c) {
            const VertexSet free = left & ~s.touch[c];
            if (free == 0) continue;
            int best = 0;
            for_each_vertex(cand_[c], [&](Vertex w) {
                const VertexSet joinable = free & s.g.neighbors(w);
                reachable |= joinable;
                best = std::max(best, count(joinable));
            });
            capacity += best;
        }
        const int open = s.unopened();
        if (open == 0 && reachable != left) return false;
        if (open > 0) {
            int best_new = 0;
            for (Vertex w = 0; w < s.g.order(); ++w) best_new = std::max(best_new, count(left & s.g.neighbors(w)));
            capacity += open * best_new;
        }
        return capacity >= count(left);
    }

    bool accept(const State&) const { return true; }

private:
    std::array<VertexSet, Graph::kMaxVertices> cand_{};
    std::vector<VertexSet> saved_;
};

struct TotalDominatorRules {
    bool allows(const State& s, Vertex v, int c) const { return (s.members[c] & s.g.neighbors(v)) == 0; }
    void push(State&, Vertex, int) {}
    void pop(State&, Vertex, int) {}

    bool viable(const State& s) const {
        if (!ProperRules{}.viable(s)) return false;
        const bool can_open = s.unopened() > 0;
        for (Vertex v = 0; v < s.g.order(); ++v) {
            const VertexSet nv = s.g.neighbors(v);
            bool ok = can_open && (nv & s.uncolored) != 0;
            for (int c = 0; c < s.used && !ok; ++c) ok = (s.members[c] & ~nv) == 0;
            if (!ok) return false;
        }
        return true;
    }

    bool accept(const State& s) const {
        for (Vertex v = 0; v < s.g.order(); ++v) {
            bool ok = false;
            for (int c = 0; c < s.used && !ok; ++c) ok = (s.members[c] & ~s.g.neighbors(v)) == 0;
            if (!ok) return false;
        }
        return true;
    }
};

template <class Rules>
class Backtracker {
public:
    Backtracker(const Graph& g, int k, const std::vector<Vertex>& order, Rules& rules, SearchStats& stats)
        : state_(g, k), order_(order), rules_(rules), stats_(stats) {}

    bool run() { return step(0); }

    /// 1-based colors of the solution found by run().
    std::vector<int> colors() const {
        std::vector<int> out = state_.color;
        for (int& c : out) ++c;
        return out;
    }

private:
    bool step(std::size_t depth) {
        ++stats_.nodes;
        if (depth == order_.size()) return rules_.accept(state_);
        const Vertex v = order_[depth];
        const int limit = std::min(state_.used + 1, state_.k);
        for (int c = 0; c < limit; ++c) {
            if (!rules_.allows(state_, v, c)) continue;
            ++stats_.decisions;
            const int used_before = state_.used;
            const VertexSet touch_before = state_.touch[c];
            state_.members[c] |= singleton(v);
            state_.touch[c] |= state_.g.neighbors(v);
            state_.uncolored &= ~singleton(v);
            state_.color[v] = c;
            state_.used = std::max(state_.used, c + 1);
            rules_.push(state_, v, c);

            if (rules_.viable(state_) && step(depth + 1)) return true;

            rules_.pop(state_, v, c);
            state_.used = used_before;
            state_.color[v] = -1;
            state_.uncolored |= singleton(v);
            state_.touch[c] = touch_before;
            state_.members[c] &= ~singleton(v);
        }
        return false;
    }

    State state_;
    const std::vector<Vertex>& order_;
    Rules& rules_;
    SearchStats& stats_;
};

std::vector<Vertex> branching_order(const Graph& g) {
    std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
    std::iota(order.begin(), order.end(), 0);
    std::ranges::stable_sort(order, [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    return order;
}

void check_budget(const Graph& g, const SolverOptions& opts) {
    if (g.order() == 0) throw ArgumentError("graph has no vertices");
    if (g.order() > opts.max_vertices) {
        throw BudgetError("graph of order " + std::to_string(g.order()) + " exceeds solver budget " +
                          std::to_string(opts.max_vertices));
    }
}

void check_isolates(const Graph& g, const char* what) {
    if (g.has_isolated_vertex()) {
        throw DomainError(std::string(what) + " undefined: graph has an isolated vertex");
    }
}

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Iterative deepening: the first k in [lower, upper] admitting a coloring
// under Rules. make_rules() builds fresh rule state per k.
template <class MakeRules>
std::pair<int, std::vector<int>> deepen(const Graph& g, int lower, int upper, MakeRules make_rules, SearchStats& stats) {
    const auto order = branching_order(g);
    for (int k = lower; k <= upper; ++k) {
        auto rules = make_rules();
        Backtracker bt(g, k, order, rules, stats);
        if (bt.run()) return {k, bt.colors()};
    }
    throw std::logic_error("search exhausted every color count up to the trivial upper bound");
}

}  // namespace

int greedy_clique_bound(const Graph& g) {
    int best = g.order() > 0 ? 1 : 0;
    for (Vertex start = 0; start < g.order(); ++start) {
        int size = 1;
        VertexSet cand = g.neighbors(start);
        while (cand != 0) {
            Vertex pick = -1;
            int pick_deg = -1;
            for_each_vertex(cand, [&](Vertex w) {
                const int d = count(g.neighbors(w) & cand);
                if (d > pick_deg) {
                    pick = w;
                    pick_deg = d;
                }
            });
            ++size;
            cand &= g.neighbors(pick);
        }
        best = std::max(best, size);
    }
    return best;
}

ChromaticResult chromatic_number(const Graph& g, const SolverOptions& opts) {
    check_budget(g, opts);
    const auto start = Clock::now();
    ChromaticResult result;
    auto [k, colors] = deepen(g, greedy_clique_bound(g), g.order(), [] { return ProperRules{}; }, result.stats);
    result.certificate = canonicalize(colors);
    result.value = result.certificate.k;
    if (result.value != k) throw std::logic_error("chromatic search returned fewer colors than its bound");
    result.stats.elapsed_ms = millis_since(start);
    return result;
}

DominatedResult dominated_chromatic_number(const Graph& g, const SolverOptions& opts) {
    check_budget(g, opts);
    check_isolates(g, "dominated chromatic number");
    const auto start = Clock::now();
    const int n = g.order();
    const int delta = g.max_degree();
    const int lower = std::max(greedy_clique_bound(g), (n + delta - 1) / delta);

    DominatedResult result;
    auto [k, colors] = deepen(g, lower, n, [&] { return DominatedRules(g); }, result.stats);
    Coloring coloring = canonicalize(colors);
    auto dominators = find_dominators(g, coloring);
    if (!dominators || coloring.k != k) throw std::logic_error("dominated search produced an invalid coloring");
    result.value = coloring.k;
    result.certificate = {std::move(coloring), std::move(*dominators)};
    result.stats.elapsed_ms = millis_since(start);
    return result;
}

TotalDominatorResult total_dominator_chromatic_number(const Graph& g, const SolverOptions& opts) {
    check_budget(g, opts);
    check_isolates(g, "total dominator chromatic number");
    const auto start = Clock::now();
    const int lower = std::max(greedy_clique_bound(g), 2);

    TotalDominatorResult result;
    auto [k, colors] = deepen(g, lower, g.order(), [] { return TotalDominatorRules{}; }, result.stats);
    Coloring coloring = canonicalize(colors);
    auto witnesses = find_td_witnesses(g, coloring);
    if (!witnesses || coloring.k != k) throw std::logic_error("TD search produced an invalid coloring");
    result.value = coloring.k;
    result.certificate = {std::move(coloring), std::move(*witnesses)};
    result.stats.elapsed_ms = millis_since(start);
    return result;
}

// ---------------------------------------------------------------------------

namespace {

// Visits every restricted-growth string over n positions with at most k
// distinct values; stops early when visit returns true.
template <class Visit>
bool restricted_growth(std::vector<int>& colors, std::size_t pos, int max_used, int k, Visit& visit) {
    if (pos == colors.size()) return visit(max_used);
    for (int c = 1; c <= std::min(max_used + 1, k); ++c) {
        colors[pos] = c;
        if (restricted_growth(colors, pos + 1, std::max(max_used, c), k, visit)) return true;
    }
    return false;
}

}  // namespace

int oracle_dominated_chromatic(const Graph& g, int max_vertices) {
    if (max_vertices > kOracleHardCap) {
        throw BudgetError("oracle budget " + std::to_string(max_vertices) + " above hard cap " +
                          std::to_string(kOracleHardCap));
    }
    if (g.order() == 0) throw ArgumentError("graph has no vertices");
    if (g.order() > max_vertices) {
        throw BudgetError("oracle refuses graph of order " + std::to_string(g.order()) + " (budget " +
                          std::to_string(max_vertices) + ")");
    }
    check_isolates(g, "dominated chromatic number");

    const int n = g.order();
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    for (int k = 1; k <= n; ++k) {
        auto visit = [&](int used) { return is_dominated_coloring(g, Coloring{colors, used}); };
        if (restricted_growth(colors, 0, 0, k, visit)) return k;
    }
    throw std::logic_error("no dominated coloring found up to n colors");
}

}  // namespace domchrom
