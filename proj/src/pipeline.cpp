#include "stabef/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

#include "stabef/circulation.hpp"
#include "stabef/decomposition.hpp"
#include "stabef/lp.hpp"
#include "stabef/parity.hpp"

namespace stabef {

const char* branch_name(Branch b) {
    switch (b) {
        case Branch::Bipartite: return "bipartite";
        case Branch::Oct3: return "oct3";
        case Branch::ProjectiveCore: return "projective-core";
        case Branch::Composed: return "composed";
    }
    return "?";
}

namespace {

std::string xvar(uint32_t v) { return "x" + std::to_string(v); }

// Rewrites every original "x<id>" through `map`. A fresh object is built so
// the lazy name index cannot go stale.
ExtForm rename_node_vars(const ExtForm& f, const std::function<uint32_t(uint32_t)>& map) {
    ExtForm out;
    out.num_original = f.num_original;
    out.vars = f.vars;
    out.ineqs = f.ineqs;
    out.eqs = f.eqs;
    for (uint32_t i = 0; i < f.num_original; ++i)
        out.vars[i] = xvar(map(static_cast<uint32_t>(std::stoul(f.vars[i].substr(1)))));
    return out;
}

struct BlockOutcome {
    ExtForm form;  // originals "x<node>" in the block graph's id space
    Branch branch = Branch::Bipartite;
    uint32_t oct_size = 0;
    uint32_t flaps = 0;
    std::string structure_json;
    std::shared_ptr<const EmbeddedGraph> core;
};

// One biconnected block. `hint` must already be validated against gb.
BlockOutcome compile_block(const Graph& gb, const CompileOptions& opts,
                           const SignedRotationSystem* hint) {
    BlockOutcome out;
    if (bipartition(gb).bipartite) {
        out.form = tu_stab_system(gb);
        out.branch = Branch::Bipartite;
        return out;
    }
    if (!opts.force_projective) {
        if (auto x = odd_cycle_transversal(gb, 3)) {
            out.form = oct3_formulation(gb, *x);
            out.branch = Branch::Oct3;
            out.oct_size = static_cast<uint32_t>(x->size());
            return out;
        }
    }

    StarSearchOptions sopt;
    sopt.embed_cap = opts.embed_cap;
    sopt.validation_budget = opts.validation_budget;
    sopt.ocp_cap = opts.ocp_cap;
    sopt.scheme_hint = hint;
    const StarStructure s = find_star_structure(gb, sopt);

    std::vector<Gadget> gadgets;
    uint32_t fresh = gb.num_nodes();
    for (const Flap& fl : s.flaps) {
        gadgets.push_back(select_gadget(edge_subgraph(gb, fl.edges), fl.boundary, fresh));
        fresh += static_cast<uint32_t>(gadgets.back().internals.size());
    }

    Core core;
    if (s.flaps.empty() && hint != nullptr) {
        // The hint is a validated embedding of gb itself; no search needed.
        core.graph = gb;
        core.node_ids.resize(gb.num_nodes());
        for (uint32_t v = 0; v < gb.num_nodes(); ++v) core.node_ids[v] = v;
        core.scheme = *hint;
    } else {
        core = build_core(gb, s, gadgets, opts.embed_cap);
    }

    ExtForm ef = stab_ef_projective(core.graph, core.scheme);
    ef = rename_node_vars(ef, [&](uint32_t v) { return core.node_ids[v]; });

    // Fold the flaps back, reverse discovery order. Each step conjoins the
    // restricted system of T_i' = flap + gadget on the boundary and gadget
    // internals, then demotes the internals.
    for (size_t fi = s.flaps.size(); fi-- > 0;) {
        const Flap& fl = s.flaps[fi];
        const Gadget& gd = gadgets[fi];

        std::vector<uint32_t> tnodes;
        for (uint32_t e : fl.edges) {
            tnodes.push_back(gb.edge(e).u);
            tnodes.push_back(gb.edge(e).v);
        }
        tnodes.insert(tnodes.end(), gd.internals.begin(), gd.internals.end());
        std::sort(tnodes.begin(), tnodes.end());
        tnodes.erase(std::unique(tnodes.begin(), tnodes.end()), tnodes.end());
        std::map<uint32_t, uint32_t> tmap;
        for (uint32_t i = 0; i < tnodes.size(); ++i) tmap[tnodes[i]] = i;

        std::vector<Edge> tedges;
        for (uint32_t e : fl.edges)
            tedges.push_back({tmap.at(gb.edge(e).u), tmap.at(gb.edge(e).v)});
        std::vector<uint32_t> h_ids;
        for (const Edge& e : gd.edges) {
            h_ids.push_back(static_cast<uint32_t>(tedges.size()));
            tedges.push_back({tmap.at(e.u), tmap.at(e.v)});
        }
        const Graph tg = build_graph(static_cast<uint32_t>(tnodes.size()), tedges);

        ExtForm efbar = restricted_stab_bar(tg, h_ids);
        efbar = rename_node_vars(efbar, [&](uint32_t v) { return tnodes[v]; });

        std::vector<std::string> bnames, inames;
        for (uint32_t b : fl.boundary) bnames.push_back(xvar(b));
        for (uint32_t w : gd.internals) inames.push_back(xvar(w));
        ef = compose_separation(ef, efbar, bnames, inames);
    }

    out.form = std::move(ef);
    out.branch = s.flaps.empty() ? Branch::ProjectiveCore : Branch::Composed;
    out.flaps = static_cast<uint32_t>(s.flaps.size());
    out.structure_json = decomposition_json(s, gadgets);
    out.core = std::make_shared<EmbeddedGraph>(EmbeddedGraph{core.graph, core.scheme});
    return out;
}

}  // namespace

CompileResult compile(const Graph& g, const CompileOptions& opts) {
    CompileResult res;

    if (opts.scheme_hint != nullptr) {
        // A valid even-face scheme certifies the scope precondition (no two
        // node-disjoint odd cycles) and implies 2-connectivity, so the graph
        // is its own single block.
        validate_rotation(g, *opts.scheme_hint);
        if (!is_even_face_projective(SignedGraph::all_odd(g), *opts.scheme_hint))
            throw std::invalid_argument(
                "compile: scheme is not an even-face projective embedding of the input");
        BlockOutcome bo = compile_block(g, opts, opts.scheme_hint);
        BlockReport br;
        br.branch = bo.branch;
        br.nodes.resize(g.num_nodes());
        for (uint32_t v = 0; v < g.num_nodes(); ++v) br.nodes[v] = v;
        br.rows = static_cast<uint32_t>(bo.form.size());
        br.vars = static_cast<uint32_t>(bo.form.vars.size());
        br.oct_size = bo.oct_size;
        br.flaps = bo.flaps;
        br.structure_json = std::move(bo.structure_json);
        br.core = std::move(bo.core);
        res.branch = br.branch;
        res.blocks.push_back(std::move(br));
        res.form = std::move(bo.form);
        if (opts.prune) res.form = prune_redundant_rows(res.form);
        return res;
    }

    const OcpVerdict ocp = classify_ocp(g, opts.ocp_cap);
    if (ocp.cls == OcpClass::AtLeastTwo) {
        res.rejection = ocp.witnesses;
        return res;
    }

    const std::vector<std::vector<uint32_t>> blks = blocks(g);
    std::vector<ExtForm> parts;
    std::vector<char> covered(g.num_nodes(), 0);
    for (const std::vector<uint32_t>& be : blks) {
        std::vector<uint32_t> bn;
        for (uint32_t e : be) {
            bn.push_back(g.edge(e).u);
            bn.push_back(g.edge(e).v);
        }
        std::sort(bn.begin(), bn.end());
        bn.erase(std::unique(bn.begin(), bn.end()), bn.end());
        for (uint32_t v : bn) covered[v] = 1;
        std::map<uint32_t, uint32_t> inv;
        for (uint32_t i = 0; i < bn.size(); ++i) inv[bn[i]] = i;
        std::vector<Edge> ce;
        for (uint32_t e : be) ce.push_back({inv.at(g.edge(e).u), inv.at(g.edge(e).v)});
        const Graph gb = build_graph(static_cast<uint32_t>(bn.size()), ce);

        BlockOutcome bo = compile_block(gb, opts, nullptr);
        BlockReport br;
        br.branch = bo.branch;
        br.nodes = bn;
        br.rows = static_cast<uint32_t>(bo.form.size());
        br.vars = static_cast<uint32_t>(bo.form.vars.size());
        br.oct_size = bo.oct_size;
        br.flaps = bo.flaps;
        br.structure_json = std::move(bo.structure_json);
        br.core = std::move(bo.core);
        res.branch = std::max(res.branch, br.branch);
        res.blocks.push_back(std::move(br));
        parts.push_back(rename_node_vars(bo.form, [&](uint32_t v) { return bn[v]; }));
    }
    for (uint32_t v = 0; v < g.num_nodes(); ++v) {
        if (covered[v]) continue;
        ExtForm lone = tu_stab_system(build_graph(1, {}));
        parts.push_back(rename_node_vars(lone, [&](uint32_t) { return v; }));
        BlockReport br;
        br.branch = Branch::Bipartite;
        br.nodes = {v};
        br.rows = static_cast<uint32_t>(parts.back().size());
        br.vars = 1;
        res.blocks.push_back(std::move(br));
    }

    if (parts.size() == 1) {
        res.form = std::move(parts.front());
    } else if (!parts.empty()) {
        res.form = glue_shared(parts);
    }
    if (opts.prune) res.form = prune_redundant_rows(res.form);
    return res;
}

namespace {

// Independent audit of a rejection verdict: two simple odd cycles, node
// disjoint, edge ids in range.
std::optional<std::string> rejection_defect(const Graph& g,
                                            const std::vector<std::vector<uint32_t>>& wit) {
    if (wit.size() != 2) return "expected exactly two witness cycles";
    std::vector<std::set<uint32_t>> nodesets(2);
    for (int i = 0; i < 2; ++i) {
        const std::vector<uint32_t>& cyc = wit[i];
        if (cyc.size() < 3 || cyc.size() % 2 == 0) return "witness cycle is not odd";
        std::set<uint32_t> eseen;
        std::map<uint32_t, uint32_t> deg;
        for (uint32_t e : cyc) {
            if (e >= g.num_edges()) return "witness edge id out of range";
            if (!eseen.insert(e).second) return "witness repeats an edge";
            ++deg[g.edge(e).u];
            ++deg[g.edge(e).v];
        }
        for (const auto& [v, d] : deg)
            if (d != 2) return "witness is not a disjoint union of cycles";
        // connectivity over witness edges => a single simple cycle
        std::set<uint32_t> reached{g.edge(cyc[0]).u};
        std::vector<uint32_t> stack{g.edge(cyc[0]).u};
        while (!stack.empty()) {
            const uint32_t v = stack.back();
            stack.pop_back();
            for (const auto& [e, w] : g.incident(v)) {
                if (!eseen.count(e) || reached.count(w)) continue;
                reached.insert(w);
                stack.push_back(w);
            }
        }
        if (reached.size() != deg.size()) return "witness splits into several cycles";
        for (const auto& [v, d] : deg) nodesets[i].insert(v);
    }
    for (uint32_t v : nodesets[0])
        if (nodesets[1].count(v)) return "witness cycles share node " + std::to_string(v);
    return std::nullopt;
}

// Induced subgraph on a block's node set; for biconnected blocks this is
// exactly the block (every induced edge belongs to it).
Graph induced_block(const Graph& g, const std::vector<uint32_t>& nodes) {
    std::map<uint32_t, uint32_t> inv;
    for (uint32_t i = 0; i < nodes.size(); ++i) inv[nodes[i]] = i;
    std::vector<Edge> es;
    for (uint32_t e = 0; e < g.num_edges(); ++e) {
        const auto iu = inv.find(g.edge(e).u);
        const auto iv = inv.find(g.edge(e).v);
        if (iu != inv.end() && iv != inv.end()) es.push_back({iu->second, iv->second});
    }
    return build_graph(static_cast<uint32_t>(nodes.size()), es);
}

// Alternation re-check from the dual's ring flags (build_dual validates too;
// this keeps the audit independent of its internals).
std::optional<std::string> dual_defect(const Graph& core, const OrientedDual& d) {
    uint32_t arcs = 0;
    for (uint32_t f = 0; f < d.num_faces; ++f) {
        const auto& ring = d.ring[f];
        if (ring.empty()) return "empty dual ring";
        if (ring.size() % 2 != 0) return "odd dual ring length";
        for (size_t j = 0; j < ring.size(); ++j)
            if (ring[j].second == ring[(j + 1) % ring.size()].second)
                return "dual ring does not alternate";
        arcs += static_cast<uint32_t>(ring.size());
    }
    if (arcs != 2 * core.num_edges()) return "dual rings do not cover each arc twice";
    if (static_cast<int64_t>(core.num_nodes()) !=
        static_cast<int64_t>(core.num_edges()) - static_cast<int64_t>(d.num_faces) + 1)
        return "Euler identity |V| = |E| - |F| + 1 fails";
    return std::nullopt;
}

std::optional<std::string> block_branch_defect(const Graph& g, const BlockReport& br,
                                               const CompileOptions& opts) {
    const Graph gb = induced_block(g, br.nodes);
    switch (br.branch) {
        case Branch::Bipartite:
            if (!bipartition(gb).bipartite) return "bipartite block fails 2-coloring";
            return std::nullopt;
        case Branch::Oct3: {
            const auto x = odd_cycle_transversal(gb, 3);
            if (!x) return "oct3 block has no transversal of size <= 3";
            if (static_cast<uint32_t>(x->size()) != br.oct_size)
                return "oct3 block transversal size mismatch";
            return std::nullopt;
        }
        case Branch::ProjectiveCore:
        case Branch::Composed: {
            if (!opts.force_projective && odd_cycle_transversal(gb, 3))
                return "projective block has a small transversal (shortcut missed)";
            if (!br.core) return "projective block lacks its core record";
            validate_rotation(br.core->graph, br.core->scheme);
            if (!is_even_face_projective(SignedGraph::all_odd(br.core->graph), br.core->scheme))
                return "core scheme fails the even-face validator";
            const OrientedDual d = build_dual(br.core->graph, br.core->scheme);
            if (auto err = dual_defect(br.core->graph, d)) return err;
            return std::nullopt;
        }
    }
    return "unknown branch";
}

}  // namespace

VerifyResult verify(const Graph& g, const VerifyOptions& opts) {
    VerifyResult vr;
    CompileResult c1 = compile(g, opts.compile);

    if (c1.rejected()) {
        vr.rejected = true;
        if (auto err = rejection_defect(g, *c1.rejection)) {
            vr.ok = false;
            vr.detail = "rejection audit failed: " + *err;
        } else {
            vr.ok = true;
            vr.deterministic = true;
            vr.detail = "rejected: two node-disjoint odd cycles verified";
        }
        return vr;
    }

    {
        const CompileResult c2 = compile(g, opts.compile);
        vr.deterministic = write_extform_text(c1.form) == write_extform_text(c2.form);
        if (!vr.deterministic) {
            vr.detail = "recompilation changed the serialized system";
            return vr;
        }
    }

    std::set<std::string> originals;
    for (uint32_t i = 0; i < c1.form.num_original; ++i) originals.insert(c1.form.vars[i]);
    if (originals.size() != g.num_nodes() || c1.form.num_original != g.num_nodes()) {
        vr.detail = "original variables do not match V(G)";
        return vr;
    }
    for (uint32_t v = 0; v < g.num_nodes(); ++v)
        if (!originals.count(xvar(v))) {
            vr.detail = "missing original variable " + xvar(v);
            return vr;
        }

    for (const BlockReport& br : c1.blocks)
        if (auto err = block_branch_defect(g, br, opts.compile)) {
            vr.detail = "block branch audit failed: " + *err;
            return vr;
        }

    if (opts.skip_oracle) {
        vr.ok = true;
        vr.detail = "structural checks passed; oracle skipped";
        return vr;
    }
    vr.verdict = ef_equals_stab(g, c1.form, opts.trials, opts.node_cap);
    vr.ok = vr.verdict.exact;
    vr.detail = vr.ok ? "EXACT" : ("counterexample: " + vr.verdict.failure);
    return vr;
}

VerifyResult verify_form(const Graph& g, const ExtForm& form, const VerifyOptions& opts) {
    VerifyResult vr;
    vr.deterministic = true;  // nothing recompiled
    if (form.num_original != g.num_nodes()) {
        vr.detail = "form originals do not match the instance node count";
        return vr;
    }
    vr.verdict = ef_equals_stab(g, form, opts.trials, opts.node_cap);
    vr.ok = vr.verdict.exact;
    vr.detail = vr.ok ? "EXACT" : ("counterexample: " + vr.verdict.failure);
    return vr;
}

EmbeddedGraph projective_quadrangulation(uint32_t k, uint32_t r) {
    if (k == 0 || r == 0) throw std::invalid_argument("projective_quadrangulation: k, r >= 1");
    const uint32_t u = 2 * k + 1, w = 4 * k + 2;
    const uint32_t n = u + r * w;
    const auto ring = [&](uint32_t j, uint32_t t) { return u + (j - 1) * w + (t % w); };

    std::vector<Edge> es;
    const auto add = [&](uint32_t a, uint32_t b) {
        es.push_back({a, b});
        return static_cast<uint32_t>(es.size() - 1);
    };
    std::vector<uint32_t> inner(u);
    for (uint32_t i = 0; i < u; ++i) inner[i] = add(i, (i + 1) % u);
    std::vector<std::vector<uint32_t>> rc(r + 1);
    for (uint32_t j = 1; j <= r; ++j) {
        rc[j].resize(w);
        for (uint32_t t = 0; t < w; ++t) rc[j][t] = add(ring(j, t), ring(j, t + 1));
    }
    std::vector<uint32_t> sp0(w);
    for (uint32_t t = 0; t < w; ++t) sp0[t] = add(t % u, ring(1, t));
    std::vector<std::vector<uint32_t>> sp(r);
    for (uint32_t j = 1; j < r; ++j) {
        sp[j].resize(w);
        for (uint32_t t = 0; t < w; ++t) sp[j][t] = add(ring(j, t), ring(j + 1, t));
    }

    EmbeddedGraph out;
    out.graph = build_graph(n, es);
    SignedRotationSystem& rot = out.scheme;
    rot.rotation.assign(n, {});
    rot.edge_sign.assign(es.size(), 1);
    // Antipodal gluing: the closing inner edge and the first u spokes cross
    // the crosscap.
    rot.edge_sign[inner[u - 1]] = -1;
    for (uint32_t t = 0; t < u; ++t) rot.edge_sign[sp0[t]] = -1;
    const auto end_of = [&](uint32_t e, uint32_t node) {
        return 2 * e + (es[e].u == node ? 0u : 1u);
    };
    for (uint32_t i = 0; i < u; ++i)
        rot.rotation[i] = {end_of(inner[i], i), end_of(sp0[i], i),
                           end_of(inner[(i + u - 1) % u], i), end_of(sp0[i + u], i)};
    for (uint32_t j = 1; j <= r; ++j)
        for (uint32_t t = 0; t < w; ++t) {
            const uint32_t v = ring(j, t);
            std::vector<uint32_t> ro;
            ro.push_back(end_of(rc[j][t], v));
            ro.push_back(end_of(j == 1 ? sp0[t] : sp[j - 1][t], v));
            ro.push_back(end_of(rc[j][(t + w - 1) % w], v));
            if (j < r) ro.push_back(end_of(sp[j][t], v));
            rot.rotation[v] = std::move(ro);
        }

    validate_rotation(out.graph, rot);
    if (!is_even_face_projective(SignedGraph::all_odd(out.graph), rot))
        throw std::logic_error("projective_quadrangulation: scheme failed validation");
    return out;
}

namespace {

Graph cycle_graph(uint32_t n) {
    std::vector<Edge> es;
    for (uint32_t v = 0; v < n; ++v) es.push_back({v, (v + 1) % n});
    return build_graph(n, es);
}

Graph wheel_graph(uint32_t rim) {
    std::vector<Edge> es;
    for (uint32_t v = 0; v < rim; ++v) es.push_back({v, (v + 1) % rim});
    for (uint32_t v = 0; v < rim; ++v) es.push_back({v, rim});
    return build_graph(rim + 1, es);
}

Graph complete_graph(uint32_t n) {
    std::vector<Edge> es;
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v) es.push_back({u, v});
    return build_graph(n, es);
}

// Smallest host whose projective-plane faces can all be made even: C3 hub,
// C6 rim, rim-distance-2 spokes.
Graph quad_host() {
    return build_graph(9, {{0, 1}, {1, 2}, {0, 2},
                           {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {3, 8},
                           {0, 3}, {0, 6}, {1, 5}, {1, 8}, {2, 7}, {2, 4}});
}

Graph quad_host_trimmed() {
    return build_graph(9, {{1, 2}, {0, 2},
                           {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {3, 8},
                           {0, 3}, {0, 6}, {1, 5}, {1, 8}, {2, 7}, {2, 4}});
}

struct Inst {
    std::string stem;
    std::string family;
    Graph g;
    std::optional<SignedRotationSystem> scheme;
    uint64_t seed = 0;
};

void push_flapped(std::vector<Inst>& out) {
    {
        std::vector<Edge> e = quad_host().edges();
        for (uint32_t a : {3u, 9u, 10u})
            for (uint32_t b : {6u, 11u, 12u}) e.push_back({a, b});
        out.push_back({"flap-p4", "flapped-cores", build_graph(13, e), std::nullopt, 0});
    }
    {
        std::vector<Edge> e = quad_host_trimmed().edges();
        for (uint32_t a : {3u, 5u, 7u})
            for (uint32_t b : {9u, 10u, 11u}) e.push_back({a, b});
        out.push_back({"flap-s222", "flapped-cores", build_graph(12, e), std::nullopt, 0});
    }
    {
        std::vector<Edge> e = quad_host_trimmed().edges();
        e.push_back({3, 11});
        for (uint32_t a : {9u, 10u})
            for (uint32_t b : {4u, 6u, 11u}) e.push_back({a, b});
        out.push_back({"flap-s233", "flapped-cores", build_graph(12, e), std::nullopt, 0});
    }
    {
        out.push_back({"flap-c5path", "flapped-cores",
                       build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                                       {1, 5}, {5, 6}, {3, 6}}),
                       std::nullopt, 0});
    }
    {
        std::vector<Edge> e = quad_host().edges();
        e.push_back({0, 9});
        e.push_back({9, 5});
        e.push_back({5, 10});
        e.push_back({10, 0});
        out.push_back({"flap-p3c4", "flapped-cores", build_graph(11, e), std::nullopt, 0});
    }
}

void push_block_glued(std::vector<Inst>& out) {
    // triangle + C4 sharing node 0
    out.push_back({"glue-tri-c4", "block-glued",
                   build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 0}}),
                   std::nullopt, 0});
    // C5 + pendant path of length 2
    out.push_back({"glue-c5-path", "block-glued",
                   build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}}),
                   std::nullopt, 0});
    // two C5 blocks sharing a cut node: every odd cycle passes node 0
    out.push_back({"glue-two-c5", "block-glued",
                   build_graph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                   {0, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 0}}),
                   std::nullopt, 0});
}

Graph random_graph(std::mt19937_64& eng, uint32_t lo, uint32_t hi) {
    std::uniform_int_distribution<uint32_t> nd(lo, hi);
    const uint32_t n = nd(eng);
    std::uniform_real_distribution<double> pd(0.25, 0.45);
    const double p = pd(eng);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> es;
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v)
            if (coin(eng)) es.push_back({u, v});
    return build_graph(n, es);
}

}  // namespace

std::vector<CorpusEntry> generate_corpus(const std::string& dir, const CorpusOptions& opts) {
    namespace fs = std::filesystem;
    const auto wanted = [&](const std::string& fam) {
        return opts.families.empty() ||
               std::find(opts.families.begin(), opts.families.end(), fam) != opts.families.end();
    };

    std::vector<Inst> insts;
    if (wanted("odd-cycles"))
        for (uint32_t k = 2; k <= 7; ++k)
            insts.push_back({"c" + std::to_string(2 * k + 1), "odd-cycles",
                             cycle_graph(2 * k + 1), std::nullopt, 0});
    if (wanted("odd-wheels"))
        for (uint32_t rim : {5u, 7u, 9u, 11u})
            insts.push_back({"w" + std::to_string(rim), "odd-wheels", wheel_graph(rim),
                             std::nullopt, 0});
    if (wanted("complete-small"))
        for (uint32_t n : {3u, 4u, 5u})
            insts.push_back({"k" + std::to_string(n), "complete-small", complete_graph(n),
                             std::nullopt, 0});
    if (wanted("projective-quadrangulations")) {
        // one instance per distinct n <= max_n, preferring the longest inner
        // cycle
        std::map<uint32_t, std::pair<uint32_t, uint32_t>> by_n;
        for (uint32_t k = 1; 2 * k + 1 <= opts.max_n; ++k)
            for (uint32_t r = 1; (2 * k + 1) * (2 * r + 1) <= opts.max_n; ++r) {
                const uint32_t n = (2 * k + 1) * (2 * r + 1);
                const auto it = by_n.find(n);
                if (it == by_n.end() || k > it->second.first) by_n[n] = {k, r};
            }
        for (const auto& [n, kr] : by_n) {
            EmbeddedGraph eg = projective_quadrangulation(kr.first, kr.second);
            insts.push_back({"quad-k" + std::to_string(kr.first) + "-r" +
                                 std::to_string(kr.second),
                             "projective-quadrangulations", std::move(eg.graph),
                             std::move(eg.scheme), 0});
        }
    }
    if (wanted("flapped-cores")) push_flapped(insts);
    if (wanted("block-glued")) push_block_glued(insts);
    if (wanted("random-ocp1-screened")) {
        std::mt19937_64 master(opts.seed);
        uint32_t accepted = 0;
        while (accepted < opts.random_count) {
            const uint64_t iseed = master();
            std::mt19937_64 eng(iseed);
            const Graph g = random_graph(eng, 8, 14);
            if (classify_ocp(g).cls != OcpClass::One) continue;
            insts.push_back({"rand-" + std::to_string(accepted), "random-ocp1-screened", g,
                             std::nullopt, iseed});
            ++accepted;
        }
    }

    // Screen: every non-embedded instance must classify as exactly one odd
    // cycle packing; embedded ones are certified by their scheme instead.
    for (const Inst& in : insts) {
        if (in.scheme) {
            if (!is_even_face_projective(SignedGraph::all_odd(in.g), *in.scheme))
                throw std::logic_error("generate_corpus: invalid scheme for " + in.stem);
        } else if (classify_ocp(in.g).cls != OcpClass::One) {
            throw std::logic_error("generate_corpus: " + in.stem + " is not an ocp-1 instance");
        }
    }

    fs::create_directories(dir);
    nlohmann::json man;
    man["instances"] = nlohmann::json::array();
    std::vector<CorpusEntry> entries;
    for (const Inst& in : insts) {
        {
            std::ofstream out(dir + "/" + in.stem + ".graph");
            out << write_graph_text(in.g);
        }
        if (in.scheme) {
            std::ofstream out(dir + "/" + in.stem + ".scheme");
            out << write_embedding_text(*in.scheme);
        }
        CorpusEntry ce{in.stem, in.family, in.g.num_nodes(), in.g.num_edges(),
                       in.scheme.has_value(), in.seed};
        entries.push_back(ce);
        nlohmann::json j;
        j["stem"] = ce.stem;
        j["family"] = ce.family;
        j["n"] = ce.n;
        j["m"] = ce.m;
        j["scheme"] = ce.has_scheme;
        if (ce.seed) j["seed"] = ce.seed;
        man["instances"].push_back(j);
    }
    std::ofstream mo(dir + "/manifest.json");
    mo << man.dump(2) << "\n";
    return entries;
}

std::vector<CorpusEntry> read_manifest(const std::string& dir) {
    std::ifstream in(dir + "/manifest.json");
    if (!in) throw std::runtime_error("read_manifest: cannot open " + dir + "/manifest.json");
    nlohmann::json man = nlohmann::json::parse(in);
    std::vector<CorpusEntry> entries;
    for (const auto& j : man.at("instances")) {
        CorpusEntry ce;
        ce.stem = j.at("stem").get<std::string>();
        ce.family = j.at("family").get<std::string>();
        ce.n = j.at("n").get<uint32_t>();
        ce.m = j.at("m").get<uint32_t>();
        ce.has_scheme = j.at("scheme").get<bool>();
        if (j.contains("seed")) ce.seed = j.at("seed").get<uint64_t>();
        entries.push_back(std::move(ce));
    }
    return entries;
}

BenchResult bench_corpus(const std::string& dir) {
    const std::vector<CorpusEntry> entries = read_manifest(dir);
    std::vector<std::future<BenchRow>> futs;
    for (const CorpusEntry& ce : entries) {
        futs.push_back(std::async(std::launch::async, [dir, ce]() {
            const Graph g = read_graph_file(dir + "/" + ce.stem + ".graph");
            SignedRotationSystem srs;
            CompileOptions co;
            if (ce.has_scheme) {
                srs = read_embedding_file(dir + "/" + ce.stem + ".scheme", g);
                co.scheme_hint = &srs;
                // measure the projective construction, not the shortcut
                co.force_projective = true;
            }
            const auto t0 = std::chrono::steady_clock::now();
            const CompileResult cr = compile(g, co);
            const auto t1 = std::chrono::steady_clock::now();
            BenchRow row;
            row.stem = ce.stem;
            row.family = ce.family;
            row.n = g.num_nodes();
            row.m = g.num_edges();
            row.rows = static_cast<uint32_t>(cr.form.size());
            row.vars = static_cast<uint32_t>(cr.form.vars.size());
            row.branch = cr.branch;
            row.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
            return row;
        }));
    }
    BenchResult res;
    for (auto& f : futs) res.rows.push_back(f.get());

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    uint32_t cnt = 0;
    for (const BenchRow& r : res.rows) {
        if (r.family != "projective-quadrangulations" || r.rows == 0) continue;
        const double x = std::log(static_cast<double>(r.n));
        const double y = std::log(static_cast<double>(r.rows));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++cnt;
        res.quad_constant = std::max(
            res.quad_constant, static_cast<double>(r.rows) / (static_cast<double>(r.n) * r.n));
    }
    if (cnt >= 2) {
        const double d = cnt * sxx - sx * sx;
        if (d != 0) res.quad_slope = (cnt * sxy - sx * sy) / d;
    }
    return res;
}

std::string bench_csv(const BenchResult& b) {
    std::ostringstream out;
    out << "stem,family,n,m,rows,vars,branch,millis\n";
    for (const BenchRow& r : b.rows) {
        out << r.stem << ',' << r.family << ',' << r.n << ',' << r.m << ',' << r.rows << ','
            << r.vars << ',' << branch_name(r.branch) << ',';
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", r.millis);
        out << buf << '\n';
    }
    return out.str();
}

std::string compile_report_json(const Graph& g, const CompileResult& r) {
    nlohmann::json j;
    j["n"] = g.num_nodes();
    j["m"] = g.num_edges();
    if (r.rejected()) {
        j["branch"] = "rejected-ocp2";
        j["rejection"] = *r.rejection;
        return j.dump(2);
    }
    j["branch"] = branch_name(r.branch);
    j["rows"] = r.form.size();
    j["vars"] = r.form.vars.size();
    j["blocks"] = nlohmann::json::array();
    for (const BlockReport& br : r.blocks) {
        nlohmann::json b;
        b["branch"] = branch_name(br.branch);
        b["nodes"] = br.nodes;
        b["rows"] = br.rows;
        b["vars"] = br.vars;
        if (br.branch == Branch::Oct3) b["oct"] = br.oct_size;
        if (br.branch == Branch::Composed) b["flaps"] = br.flaps;
        if (!br.structure_json.empty())
            b["structure"] = nlohmann::json::parse(br.structure_json);
        j["blocks"].push_back(b);
    }
    return j.dump(2);
}

std::string verify_report_json(const VerifyResult& r) {
    nlohmann::json j;
    j["ok"] = r.ok;
    j["rejected"] = r.rejected;
    j["deterministic"] = r.deterministic;
    j["detail"] = r.detail;
    if (r.verdict.trials_run > 0 || r.verdict.exact) {
        j["exact"] = r.verdict.exact;
        j["trials"] = r.verdict.trials_run;
        if (!r.verdict.failure.empty()) j["failure"] = r.verdict.failure;
    }
    return j.dump(2);
}

}  // namespace stabef
