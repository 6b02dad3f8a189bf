#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabef/embedding.hpp"
#include "stabef/graph.hpp"
#include "stabef/parity.hpp"

namespace stabef {

// Search exhaustion or a failed core embedding; the message carries the
// diagnostic trail. The pipeline catches it to re-search, everything else
// lets it surface.
class DecompositionError : public std::runtime_error {
public:
    explicit DecompositionError(const std::string& what) : std::runtime_error(what) {}
};

// One bipartite flap T_i. `edges` live in the host graph's id space.
// `link_paths` certify linkedness: for boundary b0 < b1 (< b2) the pairs come
// in lex order (b0,b1), (b0,b2), (b1,b2); each entry lists edge ids of a
// simple path inside the flap whose internal nodes avoid every boundary node.
struct Flap {
    std::vector<uint32_t> edges;     // sorted edge ids
    std::vector<uint32_t> boundary;  // sorted node ids, size 2 or 3
    std::vector<std::vector<uint32_t>> link_paths;

    uint32_t order() const { return static_cast<uint32_t>(boundary.size()); }
};

// H0 plus flaps partitioning E(G). h0_nodes is exactly the endpoint set of
// h0_edges; every flap boundary lies inside it, and two flaps may only meet
// inside it.
struct StarStructure {
    std::vector<uint32_t> h0_nodes;
    std::vector<uint32_t> h0_edges;
    std::vector<Flap> flaps;
};

// Independent validator: nullopt when sound, otherwise a human-readable
// defect. Checks the edge partition, h0_nodes consistency, per-flap
// bipartiteness, separation shape (both sides keep a private node and an
// edge), boundary recomputation, linkedness (via is_linked and again via the
// stored certificates), pairwise intersections, and boundary non-containment.
std::optional<std::string> star_structure_defect(const Graph& g, const StarStructure& s);

struct StarSearchOptions {
    uint32_t embed_cap = 40;           // edge cap per embedding attempt
    uint32_t validation_budget = 4096; // candidate flap sets tried
    uint32_t ocp_cap = 24;             // node cap for the ocp precondition check
    uint32_t skip = 0;                 // skip this many validated structures
    // Known even-face scheme of G itself (all-odd signature). When valid it
    // certifies the precondition without an exhaustive ocp check and short-
    // circuits the search with the trivial structure.
    const SignedRotationSystem* scheme_hint = nullptr;
};

// Star structure whose companion signed graph (see build_H_plus) even-face
// embeds in the projective plane with each boundary on one face. The trivial
// structure (H0 = G, no flaps) is returned when G itself embeds; otherwise
// flap candidates are peeled from linked separations of order 2 or 3,
// largest private part first, and candidate sets are validated deepest
// first. Preconditions (invalid_argument): G 2-connected, not bipartite, no
// two node-disjoint odd cycles. Throws DecompositionError when the budget is
// exhausted without a validated structure.
StarStructure find_star_structure(const Graph& g, const StarSearchOptions& opts = {});

// Clique on a flap boundary carrying the unique signing that keeps
// clique + flap balanced: a pair is signed exactly when its endpoints lie in
// different color classes of the flap (equivalently, every internal path
// between them is odd).
struct SignedClique {
    std::vector<uint32_t> nodes;                       // sorted boundary
    std::vector<std::pair<uint32_t, uint32_t>> pairs;  // u < v, lex order
    std::vector<char> sign;                            // 1 = signed pair
};

// `flap` keeps the host id space (see edge_subgraph). Throws
// invalid_argument when the flap is not bipartite or a boundary pair has no
// internal path.
SignedClique signed_clique(const Graph& flap, const std::vector<uint32_t>& boundary);

// H0 with every flap replaced by its signed clique, compacted to H0's node
// set: node i of the result is s.h0_nodes[i]. Edges come as h0_edges in
// order (all signed), then each flap's clique pairs in flap order -- new
// parallel edges where H0 already has one on the pair.
SignedGraph build_H_plus(const Graph& g, const StarStructure& s);

enum class GadgetKind { P3, P4, S222, S233 };

const char* gadget_kind_name(GadgetKind kind);

// Replacement graph for one flap: leaves are the boundary, internals fresh,
// leaf-to-leaf parities match the flap's color classes, so flap + gadget
// stays bipartite. Edges run leg by leg, leaf end first.
struct Gadget {
    GadgetKind kind;
    std::vector<uint32_t> leaves;     // for S233 the length-2 leg's leaf first
    std::vector<uint32_t> internals;  // fresh_base, fresh_base + 1, ...
    std::vector<Edge> edges;
};

// Boundary of size 2: same class -> P3, opposite -> P4. Size 3: all same ->
// S222, split 2-1 -> S233 with the length-2 leg at the singleton-class node.
// fresh_base must clear every existing node id.
Gadget select_gadget(const Graph& flap, const std::vector<uint32_t>& boundary,
                     uint32_t fresh_base);

// H0 plus all gadgets, compacted: node i < |h0_nodes| is s.h0_nodes[i], the
// rest are gadget internals in flap order (node_ids records both).
// gadget_edges[i] lists flap i's gadget edge ids in the core. The scheme is
// a validated even-face projective embedding of the core under the all-odd
// signature; when none exists the construction throws DecompositionError
// (the caller re-searches the star structure).
struct Core {
    Graph graph;
    std::vector<uint32_t> node_ids;
    std::vector<std::vector<uint32_t>> gadget_edges;
    SignedRotationSystem scheme;
};

Core build_core(const Graph& g, const StarStructure& s, const std::vector<Gadget>& gadgets,
                uint32_t embed_cap = 40);

// Edge-induced subgraph keeping the host node id space; edge e of the result
// is edge_ids[e] of g.
Graph edge_subgraph(const Graph& g, const std::vector<uint32_t>& edge_ids);

// Deterministic JSON (sorted keys, compact) for golden tests: h0 node/edge
// lists, per-flap boundary/edges/certificates, per-gadget kind, leaves and
// internals.
std::string decomposition_json(const StarStructure& s, const std::vector<Gadget>& gadgets);

}  // namespace stabef
