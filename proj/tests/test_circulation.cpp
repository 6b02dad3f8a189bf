#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "stabef/circulation.hpp"
#include "stabef/embedding.hpp"
#include "stabef/linalg.hpp"
#include "stabef/lp.hpp"
#include "stabef/parity.hpp"
#include "util.hpp"

using namespace stabef;
using testutil::make_complete;
using testutil::make_cycle;
using testutil::make_path;

namespace {

LpResult run(const ExtForm& f, const std::vector<std::pair<std::string, Rational>>& obj,
             Sense sense) {
    return lp_solve(lp_from_extform(f, obj, sense));
}

std::vector<std::pair<std::string, Rational>> ones(const std::string& stem, uint32_t k) {
    std::vector<std::pair<std::string, Rational>> obj;
    for (uint32_t i = 0; i < k; ++i) obj.push_back({stem + std::to_string(i), 1});
    return obj;
}

std::vector<std::pair<std::string, Rational>> point(const std::string& stem,
                                                    const std::vector<int>& vals) {
    std::vector<std::pair<std::string, Rational>> fixed;
    for (uint32_t i = 0; i < vals.size(); ++i)
        fixed.push_back({stem + std::to_string(i), vals[i]});
    return fixed;
}

}  // namespace

TEST_CASE("directed 3-cycle with one odd arc") {
    Digraph d{3, {{0, 1}, {1, 2}, {2, 0}}};
    ExtForm f = parity_circulation_ef({d, {0}});
    auto total = run(f, ones("y", 3), Sense::Min);
    REQUIRE(total.status == LpStatus::Optimal);
    CHECK(total.value == 3);  // the unique vertex is the cycle vector
    for (uint32_t a = 0; a < 3; ++a) {
        auto r = run(f, {{"y" + std::to_string(a), 1}}, Sense::Min);
        REQUIRE(r.status == LpStatus::Optimal);
        CHECK(r.value == 1);
    }
    CHECK(run(f, ones("y", 3), Sense::Max).status == LpStatus::Unbounded);
    // recession cone is spanned by the cycle vector: y0 - y1 is constant
    auto lo = run(f, {{"y0", 1}, {"y1", -1}}, Sense::Min);
    auto hi = run(f, {{"y0", 1}, {"y1", -1}}, Sense::Max);
    REQUIRE(lo.status == LpStatus::Optimal);
    REQUIRE(hi.status == LpStatus::Optimal);
    CHECK(lo.value == 0);
    CHECK(hi.value == 0);
    CHECK(feasible_lift(f, point("y", {1, 1, 1})).has_value());
    CHECK(feasible_lift(f, point("y", {2, 2, 2})).has_value());
    CHECK_FALSE(feasible_lift(f, point("y", {1, 1, 0})).has_value());  // not a circulation
    CHECK_FALSE(feasible_lift(f, point("y", {0, 0, 0})).has_value());  // even crossing
}

TEST_CASE("directed 3-cycle with two odd arcs is empty") {
    Digraph d{3, {{0, 1}, {1, 2}, {2, 0}}};
    ExtForm f = parity_circulation_ef({d, {0, 1}});
    CHECK(run(f, ones("y", 3), Sense::Min).status == LpStatus::Infeasible);
    CHECK_FALSE(feasible_lift(f, point("y", {1, 1, 1})).has_value());
}

TEST_CASE("single loop") {
    Digraph d{1, {{0, 0}}};
    SUBCASE("odd loop gives y >= 1") {
        ExtForm f = parity_circulation_ef({d, {0}});
        auto r = run(f, {{"y0", 1}}, Sense::Min);
        REQUIRE(r.status == LpStatus::Optimal);
        CHECK(r.value == 1);
        CHECK(run(f, {{"y0", 1}}, Sense::Max).status == LpStatus::Unbounded);
        CHECK(feasible_lift(f, point("y", {3})).has_value());
        CHECK_FALSE(feasible_lift(f, point("y", {0})).has_value());
    }
    SUBCASE("no odd arcs means no odd circulation") {
        ExtForm f = parity_circulation_ef({d, {}});
        CHECK(run(f, {{"y0", 1}}, Sense::Min).status == LpStatus::Infeasible);
    }
}

TEST_CASE("degenerate and invalid parity instances") {
    ExtForm f = parity_circulation_ef({Digraph{2, {}}, {}});
    CHECK(run(f, {}, Sense::Min).status == LpStatus::Infeasible);
    CHECK_THROWS_AS(parity_circulation_ef({Digraph{1, {{0, 0}}}, {7}}), std::invalid_argument);
    CHECK_THROWS_AS(parity_circulation_ef({Digraph{1, {{0, 2}}}, {}}), std::invalid_argument);
}

TEST_CASE("projected slack polytope of the 5-ring") {
    Graph g = make_cycle(5);
    auto scheme = *find_even_face_embedding(SignedGraph::all_odd(g));
    ExtForm q = q_of_g_ef(g, scheme);
    auto total = run(q, ones("y", 5), Sense::Min);
    REQUIRE(total.status == LpStatus::Optimal);
    CHECK(total.value == 1);
    for (uint32_t e = 0; e < 5; ++e) {
        auto r = run(q, {{"y" + std::to_string(e), 1}}, Sense::Min);
        REQUIRE(r.status == LpStatus::Optimal);
        CHECK(r.value == 0);
    }
    CHECK(run(q, ones("y", 5), Sense::Max).status == LpStatus::Unbounded);
    for (uint32_t i = 0; i < 5; ++i) {
        std::vector<int> unit(5, 0);
        unit[i] = 1;
        CHECK(feasible_lift(q, point("y", unit)).has_value());
    }
    CHECK_FALSE(feasible_lift(q, point("y", {0, 0, 0, 0, 0})).has_value());
}

TEST_CASE("projected slack polytope of the 4-clique") {
    Graph g = make_complete(4);
    auto scheme = *find_even_face_embedding(SignedGraph::all_odd(g));
    ExtForm q = q_of_g_ef(g, scheme);
    // sigma images of the maximal stable sets (singletons) are feasible
    for (uint32_t v = 0; v < 4; ++v) {
        std::vector<int> img(6);
        for (uint32_t e = 0; e < 6; ++e)
            img[e] = (g.edge(e).u == v || g.edge(e).v == v) ? 0 : 1;
        CHECK(feasible_lift(q, point("y", img)).has_value());
    }
    auto total = run(q, ones("y", 6), Sense::Min);
    REQUIRE(total.status == LpStatus::Optimal);
    CHECK(total.value == 3);  // 6 - 3*alpha(K4)
}

TEST_CASE("stable set formulations match the oracle values") {
    SUBCASE("5-ring") {
        Graph g = make_cycle(5);
        auto scheme = *find_even_face_embedding(SignedGraph::all_odd(g));
        ExtForm s = stab_ef_projective(g, scheme);
        auto r = run(s, ones("x", 5), Sense::Max);
        REQUIRE(r.status == LpStatus::Optimal);
        CHECK(r.value == 2);
        auto w = run(s, {{"x0", 1}, {"x1", 1}, {"x2", 1}, {"x3", 1}, {"x4", 10}}, Sense::Max);
        REQUIRE(w.status == LpStatus::Optimal);
        CHECK(w.value == 11);
    }
    SUBCASE("4-clique") {
        Graph g = make_complete(4);
        auto scheme = *find_even_face_embedding(SignedGraph::all_odd(g));
        ExtForm s = stab_ef_projective(g, scheme);
        auto r = run(s, ones("x", 4), Sense::Max);
        REQUIRE(r.status == LpStatus::Optimal);
        CHECK(r.value == 1);
    }
    SUBCASE("bipartite bypass") {
        ExtForm s = stab_ef_projective(make_cycle(4), SignedRotationSystem{});
        auto r = run(s, ones("x", 4), Sense::Max);
        REQUIRE(r.status == LpStatus::Optimal);
        CHECK(r.value == 2);
        ExtForm p = stab_ef_projective(make_path(3), SignedRotationSystem{});
        auto rp = run(p, ones("x", 3), Sense::Max);
        REQUIRE(rp.status == LpStatus::Optimal);
        CHECK(rp.value == 2);
    }
}

TEST_CASE("sigma inversion") {
    Graph c5 = make_cycle(5);
    SUBCASE("integer slack vectors invert to their stable sets") {
        // x = (1,0,0,1,0) has slack only on edge 1-2
        auto x = sigma_invert(c5, {0, 1, 0, 0, 0});
        REQUIRE(x.has_value());
        CHECK(*x == std::vector<Rational>{1, 0, 0, 1, 0});
    }
    SUBCASE("odd rings invert everything (full-dimensional image)") {
        auto x = sigma_invert(c5, {1, 1, 0, 0, 0});
        REQUIRE(x.has_value());
        CHECK((*x)[0] == Rational(1, 2));
        // consistency: 1 - x_u - x_v reproduces y on every edge
        for (uint32_t e = 0; e < 5; ++e)
            CHECK((*x)[c5.edge(e).u] + (*x)[c5.edge(e).v] == Rational(1) - (e == 0 || e == 1 ? 1 : 0));
    }
    SUBCASE("vectors off the circulation subspace are rejected") {
        Graph k4 = make_complete(4);
        CHECK(sigma_invert(k4, {0, 0, 0, 1, 1, 1}) == std::vector<Rational>{1, 0, 0, 0});
        CHECK_FALSE(sigma_invert(k4, {1, 0, 0, 1, 1, 1}).has_value());
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(sigma_invert(make_cycle(4), {0, 0, 0, 0}), std::invalid_argument);
        CHECK_THROWS_AS(sigma_invert(c5, {0, 0}), std::invalid_argument);
    }
}

TEST_CASE("sigma image dimension equals the node count") {
    for (const Graph& g : {make_cycle(5), make_complete(4)}) {
        std::vector<std::vector<Rational>> inc(g.num_edges(),
                                               std::vector<Rational>(g.num_nodes(), 0));
        for (uint32_t e = 0; e < g.num_edges(); ++e) {
            inc[e][g.edge(e).u] = 1;
            inc[e][g.edge(e).v] = 1;
        }
        CHECK(rational_rank(inc) == g.num_nodes());
    }
}
