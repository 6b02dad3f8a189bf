#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stabef/embedding.hpp"
#include "stabef/extform.hpp"
#include "stabef/graph.hpp"
#include "stabef/parity.hpp"
#include "stabef/rational.hpp"

namespace stabef {

// Ground-truth brute force. Everything here enumerates stable sets (or
// integer points) exactly; nothing is sampled or approximate. Node caps
// throw BudgetError instead of degrading.

struct WeightedInstance {
    Graph graph;
    std::vector<Rational> node_weights;  // size |V|
    std::vector<Rational> edge_costs;    // size |E|, >= 0
};

// Throws invalid_argument on size mismatch or a negative edge cost.
void validate_weighted_instance(const WeightedInstance& wi);

// Exact maximum weight of a stable set, branch-and-bound over nodes of
// positive weight (a maximizer never needs the others).
Rational alpha(const Graph& g, const std::vector<Rational>& w, uint32_t node_cap = 24);

// min over stable sets S of c(sigma(S)); sigma(S) = edges with neither end
// in S. Requires c >= 0 (the minimum is attained at a maximal S, but the
// search covers all stable sets).
Rational beta(const Graph& g, const std::vector<Rational>& c, uint32_t node_cap = 24);

// Identity alpha(G, w) = c(E) - beta(G, c) with w(v) := c(delta(v)).
// alpha and beta run their own independent searches.
bool alpha_beta_check(const Graph& g, const std::vector<Rational>& c, uint32_t node_cap = 24);

// gamma(F) = min{ c(sigma(S) \ H) : S stable in g1p, sigma(S) cap H = F }.
// nullopt encodes +infinity (no stable set realizes F). g1p must be
// bipartite; h_edges are the gadget's edge ids inside g1p; F subset of
// h_edges. c is indexed by all edges of g1p; entries on h_edges are ignored.
std::optional<Rational> gamma(const Graph& g1p, const std::vector<uint32_t>& h_edges,
                              const std::vector<Rational>& c, const std::vector<uint32_t>& F,
                              uint32_t node_cap = 24);

// Same quantity through the exact LP
//   min{ sum_{e not in H} c(e) y_e : Mx + y = 1, y >= 0, y_H = chi^F, x >= 0 }
// over g1p. Agrees with gamma() whenever g1p is bipartite, including on the
// feasibility status (nullopt <=> infeasible LP).
std::optional<Rational> gamma_lp(const Graph& g1p, const std::vector<uint32_t>& h_edges,
                                 const std::vector<Rational>& c, const std::vector<uint32_t>& F);

// Lifts w to edge-induced weights: solves min{1^T y : y(delta(v)) >= w(v),
// y >= 0} exactly and returns w'(v) := y*(delta(v)). Postconditions
// (checked, logic_error on failure): w' >= w pointwise and
// alpha(g, w) == alpha(g, w'). Requires no isolated nodes.
std::vector<Rational> edge_induced_lift(const Graph& g, const std::vector<Rational>& w,
                                        uint32_t node_cap = 24);

// All inclusion-maximal stable sets, each sorted, in deterministic order.
std::vector<std::vector<uint32_t>> maximal_stable_sets(const Graph& g, uint32_t node_cap = 24);

// EF-vs-polytope verdict. `failure` is empty iff exact.
struct Verdict {
    bool exact = false;
    uint32_t trials_run = 0;
    std::string failure;  // "lp-mismatch" | "lp-unbounded" | "lp-infeasible" | "unliftable-stable-set"
    std::vector<Rational> objective;   // offending objective (lp-* failures)
    Rational lp_value;                 // form's optimum on lp-mismatch
    Rational oracle_value;             // alpha on lp-mismatch
    std::vector<uint32_t> stable_set;  // offending set (unliftable-stable-set)
};

// EXACT iff (a) for `trials` seeded random integer objectives in [-5,10]^V
// the LP optimum over `form` equals alpha(g, w), and (b) the characteristic
// vector of every maximal stable set admits a feasible lift into `form`.
// The seed is derived from the graph, so verdicts are reproducible per
// instance. Stops at the first counterexample. `form` must expose one
// original "x<v>" per node.
Verdict ef_equals_stab(const Graph& g, const ExtForm& form, uint32_t trials,
                       uint32_t node_cap = 24);

// Deleting a node commutes with taking integer points of {x : Mx <= 1}:
// the projection of the integer points in [-box, box]^V equals the integer
// point set of the reduced system in [-box, box]^(V - v0).
bool deletion_projection_check(const Graph& g, uint32_t v0, int box = 2);

struct LatticeReport {
    bool ok = false;
    uint32_t points = 0;   // lattice points on either side when ok
    std::string detail;    // first discrepancy otherwise
};

// Integer slack vectors vs. the dual circulation lattice, on an even-face
// embedded graph (plain parity). Checks, within 0 <= y <= box:
//   { sigma(x) : x integral, Mx <= 1 }
//     == { y integral : y conserved at every dual face, y(X) odd }
// for X a shortest odd cycle, and that every such y lifts feasibly into
// q_of_g_ef(g, scheme) and inverts to an integral x under sigma_invert.
LatticeReport slack_lattice_check(const Graph& g, const SignedRotationSystem& scheme,
                                  int box = 3);

}  // namespace stabef
