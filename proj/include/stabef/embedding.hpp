#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stabef/graph.hpp"
#include "stabef/parity.hpp"

namespace stabef {

// Combinatorial embedding of a multigraph: a cyclic order of edge-ends at
// every node plus a sign per edge. The signs are the embedding signature
// (they encode how local orientations flip across an edge) and are distinct
// from any graph signature Sigma. Edge-end 2e sits at edge e's endpoint u,
// edge-end 2e+1 at its endpoint v.
struct SignedRotationSystem {
    std::vector<std::vector<uint32_t>> rotation;  // per node: cyclic list of ends
    std::vector<int8_t> edge_sign;                // per edge: +1 or -1

    bool operator==(const SignedRotationSystem&) const = default;
};

inline uint32_t end_node(const Graph& g, uint32_t h) {
    const Edge& e = g.edge(h >> 1);
    return (h & 1) ? e.v : e.u;
}

// One face boundary walk. Step k traverses edge half[k]/2 away from
// end_node(half[k]); consecutive steps share the arrival node.
struct FaceWalk {
    std::vector<uint32_t> half;
    std::vector<int8_t> dir;
    size_t length() const { return half.size(); }
};

struct FaceSet {
    std::vector<FaceWalk> faces;
};

// Throws FormatError when the rotation system does not fit the graph (sizes,
// every edge-end exactly once at its own node, signs +1/-1).
void validate_rotation(const Graph& g, const SignedRotationSystem& srs);

// Complete face tracing; total boundary length is 2|E| (each edge-end side
// used exactly once). Deterministic face order.
FaceSet trace_faces(const Graph& g, const SignedRotationSystem& srs);

// |V| - |E| + |F|; the projective plane has characteristic 1.
int64_t euler_characteristic(const Graph& g, const FaceSet& faces);

// Sorted distinct nodes on a face boundary.
std::vector<uint32_t> face_nodes(const Graph& g, const FaceWalk& w);

// True iff the scheme embeds sg.graph in the projective plane with every
// face an open disk whose boundary subgraph is a simple cycle (traversed
// once, or twice when the face wraps a 1-sided cycle), every boundary walk
// Sigma-even, and the embedding signature switching-equivalent to Sigma --
// so a cycle is 1-sided exactly when it is Sigma-odd.
bool is_even_face_projective(const SignedGraph& sg, const SignedRotationSystem& srs);

// Sign product along the cycle: +1 = two-sided. `cycle` lists the edge ids
// of a simple cycle (order irrelevant); the product is switching-invariant.
bool two_sidedness(const Graph& g, const SignedRotationSystem& srs,
                   const std::vector<uint32_t>& cycle);

// Exhaustive backtracking search for a scheme passing is_even_face_projective.
// Edge signs are forced by Sigma (spanning-tree edges switched to +1, co-tree
// signs pinned by fundamental-cycle parity), so only rotations are
// enumerated, with partial faces pruned as soon as they close. Deterministic.
// Throws BudgetError when |E| exceeds the cap, invalid_argument when the
// graph is disconnected.
std::optional<SignedRotationSystem> find_even_face_embedding(const SignedGraph& sg,
                                                             uint32_t max_edges = 40);

// Same search with an extra acceptance test applied to complete candidates
// (e.g. "these nodes share a face"). The predicate must not depend on
// search order; it only filters otherwise valid schemes.
using SchemeFilter =
    std::function<bool(const Graph&, const SignedRotationSystem&, const FaceSet&)>;
std::optional<SignedRotationSystem> find_even_face_embedding_if(const SignedGraph& sg,
                                                                const SchemeFilter& accept,
                                                                uint32_t max_edges = 40);

// Dual graph carrying an alternating orientation: around every dual node the
// boundary walk alternately leaves and enters it. Arc ids equal primal edge
// ids (the edge/arc bijection). ring[f] lists (arc, +1 leaving / -1
// entering) in face-walk order.
struct OrientedDual {
    uint32_t num_faces = 0;
    std::vector<std::pair<uint32_t, uint32_t>> arcs;  // per edge: (tail, head) faces
    std::vector<std::vector<std::pair<uint32_t, int8_t>>> ring;
};

// Constructive: switch the embedding signature to all -1 (possible exactly
// when the scheme is even-face projective under plain parity), retrace, and
// read arc directions off the alternating walk bits. Requires a
// non-bipartite graph; throws logic_error when preconditions fail, and
// re-validates alternation and the Euler identity |V| = |E| - |F| + 1.
OrientedDual build_dual(const Graph& g, const SignedRotationSystem& srs);

// Text format, bit-exact round trip:
//   r <v> <edge>:<0|1> ...   one line per node, in node order
//   s <edge> <+|->           one line per edge, in edge order
std::string write_embedding_text(const SignedRotationSystem& srs);
SignedRotationSystem read_embedding_text(std::istream& in, const Graph& g);
SignedRotationSystem read_embedding_file(const std::string& path, const Graph& g);

}  // namespace stabef
