#include "stabef/circulation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "stabef/parity.hpp"

namespace stabef {

namespace {

std::string zname(uint32_t a, int p) {
    return "z" + std::to_string(a) + "_" + std::to_string(p);
}

ExtForm infeasible_stub() {
    ExtForm f;
    f.add_var("stuck");
    f.num_original = 0;
    f.add_ineq({{"stuck", Rational(1)}}, Rational(-1));
    f.add_ineq({{"stuck", Rational(-1)}}, Rational(0));
    return f;
}

// Branch v: unit flow from (v,0) to (v,1) in the parity double cover.
ExtForm unit_flow_branch(const Digraph& d, const std::vector<char>& in_x, uint32_t v) {
    const uint32_t na = static_cast<uint32_t>(d.arcs.size());
    ExtForm b;
    for (uint32_t a = 0; a < na; ++a)
        for (int p = 0; p < 2; ++p) b.add_var(zname(a, p));
    b.num_original = 2 * na;
    std::vector<std::vector<std::pair<std::string, Rational>>> rows(2 * d.num_nodes);
    for (uint32_t a = 0; a < na; ++a)
        for (int p = 0; p < 2; ++p) {
            const uint32_t tc = 2 * d.arcs[a].tail + p;
            const uint32_t hc = 2 * d.arcs[a].head + (p ^ (in_x[a] ? 1 : 0));
            if (tc == hc) continue;  // cover loop: enters and leaves alike
            rows[tc].push_back({zname(a, p), Rational(1)});
            rows[hc].push_back({zname(a, p), Rational(-1)});
        }
    bool stranded = false;
    for (uint32_t c = 0; c < 2 * d.num_nodes; ++c) {
        Rational rhs = 0;
        if (c == 2 * v) rhs = 1;
        if (c == 2 * v + 1) rhs = -1;
        if (rows[c].empty()) {
            if (rhs != 0) stranded = true;  // nothing can carry the unit
            continue;
        }
        b.add_eq(rows[c], rhs);
    }
    for (uint32_t a = 0; a < na; ++a)
        for (int p = 0; p < 2; ++p) b.add_ineq({{zname(a, p), Rational(-1)}}, Rational(0));
    if (stranded) {
        // mark the branch empty without disturbing its recession cone
        b.add_var("stuck");
        b.add_ineq({{"stuck", Rational(1)}}, Rational(-1));
        b.add_ineq({{"stuck", Rational(-1)}}, Rational(0));
    }
    return b;
}

}  // namespace

ExtForm parity_circulation_ef(const ParityInstance& inst) {
    const Digraph& d = inst.d;
    const uint32_t na = static_cast<uint32_t>(d.arcs.size());
    for (uint32_t a : inst.odd_arcs)
        if (a >= na) throw std::invalid_argument("parity instance: arc id out of range");
    for (const DiArc& a : d.arcs)
        if (a.tail >= d.num_nodes || a.head >= d.num_nodes)
            throw std::invalid_argument("parity instance: arc endpoint out of range");
    if (na == 0) return infeasible_stub();  // the empty circulation is even
    std::vector<char> in_x(na, 0);
    for (uint32_t a : inst.odd_arcs) in_x[a] = 1;
    std::vector<ExtForm> branches;
    for (uint32_t v = 0; v < d.num_nodes; ++v)
        branches.push_back(unit_flow_branch(d, in_x, v));
    ExtForm u = balas_union(branches, UnionMode::SharedRecessionCone);
    AffineMap pi;
    for (uint32_t a = 0; a < na; ++a) {
        AffineExpr ex;
        ex.terms = {{zname(a, 0), Rational(1)}, {zname(a, 1), Rational(1)}};
        pi.push_back({"y" + std::to_string(a), ex});
    }
    return affine_image(u, pi);
}

ExtForm q_of_g_ef(const Graph& g, const SignedRotationSystem& scheme) {
    OrientedDual dual = build_dual(g, scheme);  // checks all preconditions
    std::vector<uint32_t> cyc = shortest_odd_cycle(g);
    if (cyc.empty()) throw std::logic_error("q_of_g_ef: no odd cycle in non-bipartite graph");
    Digraph d;
    d.num_nodes = dual.num_faces;
    for (const auto& [t, h] : dual.arcs) d.arcs.push_back({t, h});
    return parity_circulation_ef({d, cyc});
}

ExtForm stab_ef_projective(const Graph& g, const SignedRotationSystem& scheme) {
    if (bipartition(g).bipartite) return tu_stab_system(g);
    ExtForm q = q_of_g_ef(g, scheme);
    AffineMap sub;
    for (uint32_t e = 0; e < g.num_edges(); ++e) {
        AffineExpr ex;
        ex.terms = {{"x" + std::to_string(g.edge(e).u), Rational(-1)},
                    {"x" + std::to_string(g.edge(e).v), Rational(-1)}};
        ex.constant = 1;
        sub.push_back({"y" + std::to_string(e), ex});
    }
    ExtForm s = affine_preimage(q, sub, /*require_injective=*/true);
    return intersect_box(s, Rational(0), Rational(1));
}

std::optional<std::vector<Rational>> sigma_invert(const Graph& g,
                                                  const std::vector<Rational>& y) {
    const uint32_t n = g.num_nodes(), m = g.num_edges();
    if (y.size() != m) throw std::invalid_argument("sigma_invert: vector size mismatch");
    auto comp = components(g);
    for (uint32_t c : comp)
        if (c != 0) throw std::invalid_argument("sigma_invert: graph must be connected");
    if (bipartition(g).bipartite)
        throw std::invalid_argument("sigma_invert: not invertible on bipartite graphs");
    std::vector<uint32_t> cyc = shortest_odd_cycle(g);
    // walk the cycle from its smallest node; for odd length the alternating
    // signs are independent of direction
    std::map<uint32_t, std::vector<std::pair<uint32_t, uint32_t>>> ring;
    for (uint32_t e : cyc) {
        ring[g.edge(e).u].push_back({e, g.edge(e).v});
        ring[g.edge(e).v].push_back({e, g.edge(e).u});
    }
    const uint32_t v0 = ring.begin()->first;
    Rational alt = 0;
    {
        std::vector<char> used(m, 0);
        uint32_t at = v0;
        int sign = -1;  // the sum starts at (-1)^1
        for (size_t step = 0; step < cyc.size(); ++step) {
            auto& options = ring[at];
            uint32_t e = UINT32_MAX;
            for (const auto& [cand, other] : options)
                if (!used[cand] && (e == UINT32_MAX || cand < e)) e = cand;
            if (e == UINT32_MAX) throw std::logic_error("sigma_invert: cycle walk broke");
            used[e] = 1;
            alt += Rational(sign) * y[e];
            sign = -sign;
            at = g.other_end(e, at);
        }
        if (at != v0) throw std::logic_error("sigma_invert: cycle walk did not close");
    }
    std::vector<Rational> x(n);
    std::vector<char> have(n, 0);
    x[v0] = (alt + 1) / 2;  // alternating sum = 2 x_{v0} - 1
    have[v0] = 1;
    std::vector<uint32_t> stack{v0};
    while (!stack.empty()) {
        uint32_t v = stack.back();
        stack.pop_back();
        for (const auto& [e, w] : g.incident(v))
            if (!have[w]) {
                x[w] = Rational(1) - y[e] - x[v];
                have[w] = 1;
                stack.push_back(w);
            }
    }
    for (uint32_t e = 0; e < m; ++e)
        if (x[g.edge(e).u] + x[g.edge(e).v] + y[e] != 1) return std::nullopt;
    return x;
}

}  // namespace stabef
