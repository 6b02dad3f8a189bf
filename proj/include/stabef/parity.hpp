#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabef/graph.hpp"

namespace stabef {

// Graph with a signature: sign[e] == true means e is odd (in Sigma).
// A cycle is Sigma-odd iff it uses an odd number of signed edges. Plain
// parity is the special case Sigma = E(G).
struct SignedGraph {
    Graph graph;
    std::vector<char> sign;  // one flag per edge id

    static SignedGraph all_odd(const Graph& g) {
        return {g, std::vector<char>(g.num_edges(), 1)};
    }
};

enum class OcpClass { Zero, One, AtLeastTwo };

struct OcpVerdict {
    OcpClass cls;
    // One: a single odd cycle (edge ids). AtLeastTwo: two node-disjoint odd
    // cycles. Zero: empty.
    std::vector<std::vector<uint32_t>> witnesses;
};

// Exceeding the node cap throws BudgetError (exhaustive subset search).
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Zero / One / AtLeastTwo disjoint Sigma-odd cycles, by exhaustive node-subset
// split with bipartiteness pruning.
OcpVerdict classify_ocp_signed(const SignedGraph& sg, uint32_t node_cap = 24);
OcpVerdict classify_ocp(const Graph& g, uint32_t node_cap = 24);

// Smallest node set X with G - X free of Sigma-odd cycles, searched up to
// size `cap`; lexicographically smallest among minimum-size sets. nullopt if
// every candidate up to the cap fails.
std::optional<std::vector<uint32_t>> odd_cycle_transversal_signed(const SignedGraph& sg,
                                                                  uint32_t cap);
std::optional<std::vector<uint32_t>> odd_cycle_transversal(const Graph& g, uint32_t cap);

// Balanced = no Sigma-odd cycle (checked by resigning along a spanning
// forest). On failure the witness is a Sigma-odd cycle, edge ids.
struct BalanceResult {
    bool balanced;
    std::vector<uint32_t> odd_cycle;
};
BalanceResult is_balanced(const SignedGraph& sg);

// Sigma-parity of an edge set: number of signed edges mod 2.
int sigma_parity(const SignedGraph& sg, const std::vector<uint32_t>& edge_ids);

// Edge ids of a shortest Sigma-odd cycle (a shortest odd closed walk is
// always simple). Deterministic: among the shortest candidates found by
// per-root parity search the lexicographically smallest sorted edge list
// wins. Empty when the graph is balanced.
std::vector<uint32_t> shortest_odd_cycle_signed(const SignedGraph& sg);
std::vector<uint32_t> shortest_odd_cycle(const Graph& g);

// Text format: like the plain graph format but every edge line carries a
// sign column, "e <u> <v> <+|->" with '-' marking Sigma membership.
SignedGraph read_signed_graph_text(std::istream& in);
SignedGraph read_signed_graph_file(const std::string& path);
std::string write_signed_graph_text(const SignedGraph& sg);

}  // namespace stabef
