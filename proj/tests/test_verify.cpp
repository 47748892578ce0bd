#include <doctest.h>

#include <algorithm>

#include "domchrom/error.hpp"
#include "domchrom/formulas.hpp"
#include "domchrom/graph6.hpp"
#include "domchrom/verify.hpp"

using namespace domchrom;

namespace {

Graph path(int n) { return make_family({Family::path, n}); }
Graph cycle(int n) { return make_family({Family::cycle, n}); }
Graph complete(int n) { return make_family({Family::complete, n}); }
Graph star(int leaves) { return make_family({Family::star, leaves}); }
Graph wheel(int rim) { return make_family({Family::wheel, rim}); }

long q(const VerificationRecord& r, const std::string& name) { return r.quantities.at(name); }

bool is_tight(const VerificationRecord& r, const std::string& bound) {
    const BoundCheck* b = r.bound(bound);
    REQUIRE(b != nullptr);
    return b->tight();
}

// Every bound's holds flag must match its stored sides.
void check_consistent(const std::vector<VerificationRecord>& recs) {
    for (const auto& r : recs) {
        for (const auto& b : r.bounds) CHECK(b.holds == (b.lhs <= b.rhs));
        if (r.skipped) CHECK(r.bounds.empty());
    }
}

std::vector<VerificationRecord> of_theorem(std::vector<VerificationRecord> recs, TheoremId id) {
    std::erase_if(recs, [&](const VerificationRecord& r) { return r.theorem != id; });
    return recs;
}

}  // namespace

TEST_CASE("theorem names round-trip") {
    CHECK(all_theorems().size() == 14);
    for (TheoremId id : all_theorems()) CHECK(parse_theorem(theorem_name(id)) == id);
    CHECK(theorem_name(TheoremId::subdivision_dfrac) == "subdivision_dfrac");
    CHECK_THROWS_AS(parse_theorem("thm_9"), ArgumentError);
}

TEST_CASE("edge deletion") {
    Verifier v;
    auto k3 = v.check_edge_deletion(complete(3));
    REQUIRE(k3.size() == 3);
    for (const auto& r : k3) {
        CHECK(q(r, "chidom_G") == 3);
        CHECK(q(r, "chidom_result") == 2);
        CHECK(is_tight(r, "lower"));
        CHECK_FALSE(r.violated());
    }
    for (const auto& r : v.check_edge_deletion(cycle(4))) {
        CHECK(q(r, "chidom_result") == 2);
        CHECK_FALSE(r.tight());
    }
    for (const auto& r : v.check_edge_deletion(cycle(5))) CHECK(q(r, "chidom_result") == 3);

    // Every edge of a path is a bridge.
    const auto p4 = v.check_edge_deletion(path(4));
    REQUIRE(p4.size() == 3);
    for (const auto& r : p4) CHECK(r.skipped == SkipReason::bridge);

    const auto disc = v.check_edge_deletion(Graph(4, {{0, 1}, {2, 3}}));
    REQUIRE(disc.size() == 1);
    CHECK(disc[0].skipped == SkipReason::disconnected);
    check_consistent(k3);
}

TEST_CASE("vertex deletion") {
    Verifier v;
    for (const auto& r : v.check_vertex_deletion(complete(4))) {
        CHECK(q(r, "chidom_G") == 4);
        CHECK(q(r, "chidom_result") == 3);
        CHECK(is_tight(r, "lower"));
    }
    const auto w5 = v.check_vertex_deletion(wheel(5));
    const auto hub = std::ranges::find_if(w5, [](const auto& r) { return r.operation->vertex == 5; });
    REQUIRE(hub != w5.end());
    CHECK(q(*hub, "chidom_G") == 4);
    CHECK(q(*hub, "chidom_result") == 3);
    CHECK(q(*hub, "deg_v") == 5);
    for (const auto& r : v.check_vertex_deletion(cycle(4))) CHECK(q(r, "chidom_result") == 2);

    const auto p3 = v.check_vertex_deletion(path(3));
    REQUIRE(p3.size() == 3);
    CHECK_FALSE(p3[0].skipped);
    CHECK(p3[1].skipped == SkipReason::cut_vertex);
    const auto k2 = v.check_vertex_deletion(complete(2));
    for (const auto& r : k2) CHECK(r.skipped == SkipReason::degenerate_size);
}

TEST_CASE("wheel equality") {
    Verifier v;
    const auto w6 = v.check_wheel_equality(wheel(6));
    REQUIRE(w6);
    CHECK(q(*w6, "chidom_G") == 3);
    CHECK(q(*w6, "chidt_G") == 3);
    CHECK(q(*w6, "chi_G") == 3);
    CHECK_FALSE(w6->violated());
    const auto k5 = v.check_wheel_equality(complete(5));
    REQUIRE(k5);
    CHECK(q(*k5, "chidom_G") == 5);
    const auto p3 = v.check_wheel_equality(path(3));
    REQUIRE(p3);
    CHECK(q(*p3, "chi_G") == 2);
    CHECK_FALSE(v.check_wheel_equality(path(4)));
    CHECK_FALSE(v.check_wheel_equality(cycle(5)));
}

TEST_CASE("wheel gap") {
    Verifier v;
    const auto recs = v.check_wheel_gap(16);
    REQUIRE(recs.size() == 13);
    std::map<long, long> gap;
    for (const auto& r : recs) gap[q(r, "n")] = q(r, "gap");
    CHECK(gap[8] == 1);
    CHECK(gap[12] == 3);
    CHECK(gap[16] == 5);
    for (const auto& r : recs) {
        CHECK_FALSE(r.violated());
        CHECK(r.operation->vertex == q(r, "n"));
    }
    CHECK_THROWS_AS(v.check_wheel_gap(3), ArgumentError);
}

TEST_CASE("edge contraction and the conjecture bound") {
    Verifier v;
    const auto c4 = v.check_edge_contraction(cycle(4));
    REQUIRE(c4.size() == 8);
    for (const auto& r : of_theorem(c4, TheoremId::edge_contraction)) {
        CHECK(q(r, "chidom_result") == 3);
        CHECK(is_tight(r, "upper"));
    }
    for (const auto& r : of_theorem(v.check_edge_contraction(complete(4)), TheoremId::contraction_conjecture)) {
        CHECK(q(r, "chidom_result") == 3);
        CHECK(is_tight(r, "lower"));
    }
    for (const auto& r : v.check_edge_contraction(cycle(8))) CHECK(q(r, "chidom_result") == 4);

    const auto k2 = v.check_edge_contraction(complete(2));
    REQUIRE(k2.size() == 2);
    for (const auto& r : k2) CHECK(r.skipped == SkipReason::degenerate_size);
}

TEST_CASE("vertex contraction") {
    Verifier v;
    for (const auto& r : v.check_vertex_contraction(cycle(4))) {
        CHECK(q(r, "chidom_result") == 3);
        CHECK(is_tight(r, "upper"));
    }
    for (const auto& r : v.check_vertex_contraction(cycle(5))) {
        CHECK(q(r, "chidom_result") == 2);
        CHECK(is_tight(r, "lower"));
    }
    const auto s = v.check_vertex_contraction(star(3));
    CHECK(q(s[0], "chidom_G") == 2);
    CHECK(q(s[0], "chidom_result") == 3);
    CHECK(q(s[0], "deg_v") == 3);
    CHECK(s[0].bound("upper")->rhs == 4);
}

TEST_CASE("odot") {
    Verifier v;
    for (const auto& r : v.check_odot(complete(5))) {
        CHECK(q(r, "chidom_result") == 2);
        CHECK(is_tight(r, "lower"));
        CHECK(q(r, "ratio_num") == 5);
    }
    for (const auto& r : v.check_odot(cycle(5))) CHECK(q(r, "chidom_result") == 3);
    const auto k4 = v.check_odot(complete(4));
    CHECK(q(k4[0], "ratio_num") == 4);
    CHECK(q(k4[0], "ratio_den") == 2);
    CHECK_FALSE(v.check_odot(cycle(5))[0].quantities.contains("ratio_num"));

    const auto ratio = v.check_odot_ratio(8);
    REQUIRE(ratio.size() == 6);
    for (const auto& r : ratio) {
        CHECK(q(r, "ratio_den") == 2);
        CHECK_FALSE(r.violated());
    }
}

TEST_CASE("corollaries") {
    Verifier v;
    for (const auto& r : of_theorem(v.check_corollaries(cycle(4)), TheoremId::corollary_edge)) {
        CHECK(q(r, "chidom_delete") == 2);
        CHECK(q(r, "chidom_contract") == 3);
        CHECK(r.bound("lower")->lhs == 2);
        CHECK(r.bound("upper")->rhs == 8);
    }
    for (const auto& r : of_theorem(v.check_corollaries(cycle(5)), TheoremId::corollary_vertex)) {
        CHECK(q(r, "chidom_delete") == 2);
        CHECK(q(r, "chidom_contract") == 2);
        CHECK(r.bound("lower")->lhs == 2);
        CHECK(is_tight(r, "upper"));
    }
    for (const auto& r : of_theorem(v.check_corollaries(complete(3)), TheoremId::corollary_edge)) {
        CHECK(q(r, "chidom_contract") == 2);
        CHECK(r.bound("lower")->lhs == 1);
        CHECK(r.bound("upper")->rhs == 7);
    }
    // Path edges are bridges; only the vertex corollary has non-skipped instances.
    for (const auto& r : of_theorem(v.check_corollaries(path(4)), TheoremId::corollary_edge)) CHECK(r.skipped == SkipReason::bridge);
}

TEST_CASE("subdivision checks") {
    Verifier v;
    auto k3 = v.check_subdivision(complete(3), 2);
    REQUIRE(k3.size() == 2);
    CHECK(q(k3[0], "chidom_result") == 4);
    CHECK(k3[0].bound("lower")->lhs == 2);
    CHECK(k3[0].bound("upper")->rhs == 6);
    CHECK(k3[1].skipped == SkipReason::formula_domain);

    const auto remark5 = v.check_subdivision(star(3), 3);
    CHECK(q(remark5[0], "chidom_result") == 6);
    CHECK(is_tight(remark5[0], "upper"));
    CHECK(remark5[0].bound("upper")->rhs == 2 * formula_path(3) + formula_path(4));

    // K_{1,3}^{1/5}: 16 vertices, beyond the oracle, so the finding is solver-only.
    const auto remark6 = v.check_subdivision(star(3), 5);
    const auto& dfrac = remark6[1];
    CHECK(dfrac.bound("lower")->lhs == 7);
    CHECK(dfrac.bound("upper")->rhs == 7);
    CHECK(q(dfrac, "chidom_result") == 8);
    CHECK(dfrac.violated());
    REQUIRE(dfrac.oracle_confirmed);
    CHECK_FALSE(*dfrac.oracle_confirmed);
    REQUIRE(dfrac.certificates.contains("chidom_result"));
    const Graph sub = subdivide(star(3), 5).graph;
    CHECK(verify_certificate(sub, dfrac.certificates.at("chidom_result")));
    CHECK(dfrac.certificates.at("chidom_result").coloring.k == 8);

    // P_11 = K_{1,2}^{1/5}.
    const auto p11 = v.check_subdivision(star(2), 5)[1];
    CHECK(q(p11, "chidom_result") == formula_path(11));
    CHECK(p11.bound("upper")->rhs == 5);
    CHECK(p11.violated());

    // P_7 = K_{1,2}^{1/3} falls below the lower bound; small enough for the oracle.
    const auto p7 = v.check_subdivision(star(2), 3)[1];
    CHECK(q(p7, "chidom_result") == 4);
    CHECK(p7.bound("lower")->lhs == 5);
    REQUIRE(p7.oracle_confirmed);
    CHECK(*p7.oracle_confirmed);

    const auto big = v.check_subdivision(complete(4), 5);
    for (const auto& r : big) {
        CHECK(r.skipped == SkipReason::budget);
        CHECK(q(r, "n_sub") == 28);
    }
    CHECK_THROWS_AS(v.check_subdivision(path(3), 1), ArgumentError);
}

TEST_CASE("path and cycle formula records") {
    Verifier v;
    const auto recs = v.check_path_cycle_formula(3, 12);
    REQUIRE(recs.size() == 20);
    int skipped = 0;
    for (const auto& r : recs) {
        if (r.skipped) {
            ++skipped;
            CHECK(r.skipped == SkipReason::formula_domain);
            CHECK(q(r, "solver") == 3);
            CHECK(q(r, "formula") == 2);
            continue;
        }
        CHECK_FALSE(r.violated());
        CHECK(q(r, "solver") == q(r, "formula"));
    }
    CHECK(skipped == 1);
}

TEST_CASE("check dispatch and record order") {
    Verifier v;
    const Graph k4 = complete(4);
    CHECK(v.check(TheoremId::edge_contraction, k4).size() == 6);
    CHECK(v.check(TheoremId::contraction_conjecture, k4).size() == 6);
    CHECK(v.check(TheoremId::corollary_vertex, k4).size() == 4);
    CHECK(v.check(TheoremId::wheel_gap, k4).empty());
    CHECK(v.check(TheoremId::wheel_equality, path(4)).empty());

    auto recs = v.check_edge_deletion(k4);
    auto more = v.check_vertex_deletion(path(3));
    recs.insert(recs.end(), more.begin(), more.end());
    std::ranges::sort(recs, record_less);
    CHECK(std::ranges::is_sorted(recs, record_less));
    CHECK(recs.front().graph <= recs.back().graph);
}

TEST_CASE("memoized values match fresh solves") {
    Verifier v;
    for (int n = 4; n <= 9; ++n) {
        CHECK(v.chidom(cycle(n)) == formula_cycle(n));
        CHECK(v.chidom(cycle(n)) == formula_cycle(n));
    }
}
