#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stabef/embedding.hpp"
#include "stabef/extform.hpp"
#include "stabef/graph.hpp"
#include "stabef/rational.hpp"

namespace stabef {

struct DiArc {
    uint32_t tail, head;
};

struct Digraph {
    uint32_t num_nodes = 0;
    std::vector<DiArc> arcs;
    bool is_loop(uint32_t a) const { return arcs[a].tail == arcs[a].head; }
};

struct ParityInstance {
    Digraph d;
    std::vector<uint32_t> odd_arcs;  // X: arcs whose total flow must be odd
};

// conv{ y in Z^A, y >= 0 : y a circulation of d, y(X) odd }. Construction:
// parity double cover (X-arcs cross levels, others stay), one unit-flow
// system per node from level 0 to level 1, Balas union in shared-recession-
// cone mode, then the image summing the two copies of each arc. Originals
// "y<arc>". Infeasible output is valid (no odd circulation exists). Size
// O(|nodes| * |arcs|). Loops off X vanish from conservation; loops on X
// become inter-level arcs.
ExtForm parity_circulation_ef(const ParityInstance& inst);

// sigma(P(G)) where sigma(x) = 1 - Mx: the parity circulation form of the
// alternating dual, X = dual image of a shortest odd cycle of G (arc ids
// equal edge ids, so originals are "y<edge>"). Preconditions as build_dual.
ExtForm q_of_g_ef(const Graph& g, const SignedRotationSystem& scheme);

// STAB(G) for connected inputs: bipartite graphs bypass to the TU edge
// system (scheme ignored); otherwise the sigma-preimage of q_of_g_ef
// intersected with the unit box. Originals "x<node>".
ExtForm stab_ef_projective(const Graph& g, const SignedRotationSystem& scheme);

// Inverts y = 1 - Mx: the alternating sum around a shortest odd cycle pins
// x at the cycle's smallest node (it equals 2x - 1 there), a spanning tree
// propagates the rest. nullopt when y is outside the image subspace of
// sigma. Throws invalid_argument unless g is connected and non-bipartite.
std::optional<std::vector<Rational>> sigma_invert(const Graph& g,
                                                  const std::vector<Rational>& y);

}  // namespace stabef
