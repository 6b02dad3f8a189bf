#include "stabef/decomposition.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace stabef {

namespace {

bool sorted_unique_in(const std::vector<uint32_t>& v, uint32_t bound) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] >= bound) return false;
        if (i && v[i - 1] >= v[i]) return false;
    }
    return true;
}

std::vector<uint32_t> sorted_endpoints(const Graph& g, const std::vector<uint32_t>& edge_ids) {
    std::vector<uint32_t> nodes;
    nodes.reserve(edge_ids.size() * 2);
    for (uint32_t e : edge_ids) {
        nodes.push_back(g.edge(e).u);
        nodes.push_back(g.edge(e).v);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return nodes;
}

std::vector<uint32_t> sorted_complement(uint32_t m, const std::vector<uint32_t>& edge_ids) {
    std::vector<char> in(m, 0);
    for (uint32_t e : edge_ids) in[e] = 1;
    std::vector<uint32_t> out;
    out.reserve(m - edge_ids.size());
    for (uint32_t e = 0; e < m; ++e)
        if (!in[e]) out.push_back(e);
    return out;
}

// Shortest u-v path over the allowed edges whose internal nodes avoid
// `blocked`; edge ids in walk order.
std::optional<std::vector<uint32_t>> flap_path(const Graph& g, const std::vector<char>& allowed,
                                               uint32_t u, uint32_t v,
                                               const std::vector<char>& blocked) {
    std::vector<uint32_t> via_edge(g.num_nodes(), 0);
    std::vector<char> visited(g.num_nodes(), 0);
    std::deque<uint32_t> queue{u};
    visited[u] = 1;
    while (!queue.empty()) {
        uint32_t x = queue.front();
        queue.pop_front();
        for (auto [e, y] : g.incident(x)) {
            if (!allowed[e] || visited[y]) continue;
            if (y != v && blocked[y]) continue;
            visited[y] = 1;
            via_edge[y] = e;
            if (y == v) {
                std::vector<uint32_t> path;
                for (uint32_t cur = v; cur != u; cur = g.other_end(via_edge[cur], cur))
                    path.push_back(via_edge[cur]);
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push_back(y);
        }
    }
    return std::nullopt;
}

// Validates a flap-with-boundary pair shared by signed_clique and
// select_gadget and hands back the boundary colors. `who` prefixes error
// messages.
std::vector<int> boundary_colors(const Graph& flap, const std::vector<uint32_t>& boundary,
                                 const std::string& who) {
    if (boundary.size() < 2 || boundary.size() > 3)
        throw std::invalid_argument(who + ": boundary must have 2 or 3 nodes");
    if (!sorted_unique_in(boundary, flap.num_nodes()))
        throw std::invalid_argument(who + ": boundary not sorted, unique and in range");
    Bipartition bp = bipartition(flap);
    if (!bp.bipartite) throw std::invalid_argument(who + ": flap is not bipartite");
    std::vector<char> allowed(flap.num_edges(), 1);
    std::vector<char> blocked(flap.num_nodes(), 0);
    for (size_t i = 0; i < boundary.size(); ++i) {
        for (size_t j = i + 1; j < boundary.size(); ++j) {
            for (uint32_t b : boundary) blocked[b] = (b != boundary[i] && b != boundary[j]);
            if (!flap_path(flap, allowed, boundary[i], boundary[j], blocked))
                throw std::invalid_argument(who + ": boundary pair (" +
                                            std::to_string(boundary[i]) + "," +
                                            std::to_string(boundary[j]) +
                                            ") has no internal path in the flap");
        }
    }
    std::vector<int> colors;
    for (uint32_t b : boundary) colors.push_back(bp.color[b]);
    return colors;
}

GadgetKind expected_gadget_kind(const std::vector<int>& colors) {
    if (colors.size() == 2) return colors[0] == colors[1] ? GadgetKind::P3 : GadgetKind::P4;
    if (colors[0] == colors[1] && colors[1] == colors[2]) return GadgetKind::S222;
    return GadgetKind::S233;
}

// Index of the boundary node whose color differs from the other two.
size_t singleton_index(const std::vector<int>& colors) {
    if (colors[0] == colors[1]) return 2;
    return colors[0] == colors[2] ? 1 : 0;
}

}  // namespace

Graph edge_subgraph(const Graph& g, const std::vector<uint32_t>& edge_ids) {
    std::vector<Edge> edges;
    edges.reserve(edge_ids.size());
    for (uint32_t e : edge_ids) {
        if (e >= g.num_edges()) throw std::invalid_argument("edge_subgraph: edge id out of range");
        edges.push_back(g.edge(e));
    }
    return build_graph(g.num_nodes(), edges);
}

std::optional<std::string> star_structure_defect(const Graph& g, const StarStructure& s) {
    const uint32_t n = g.num_nodes();
    const uint32_t m = g.num_edges();
    if (!sorted_unique_in(s.h0_nodes, n)) return "h0_nodes not sorted, unique and in range";
    if (!sorted_unique_in(s.h0_edges, m)) return "h0_edges not sorted, unique and in range";

    std::vector<uint32_t> cover(m, 0);
    for (uint32_t e : s.h0_edges) ++cover[e];
    for (size_t i = 0; i < s.flaps.size(); ++i) {
        if (!sorted_unique_in(s.flaps[i].edges, m))
            return "flap " + std::to_string(i) + ": edges not sorted, unique and in range";
        for (uint32_t e : s.flaps[i].edges) ++cover[e];
    }
    for (uint32_t e = 0; e < m; ++e)
        if (cover[e] != 1)
            return "edge " + std::to_string(e) + " covered " + std::to_string(cover[e]) +
                   " times";
    if (s.h0_nodes != sorted_endpoints(g, s.h0_edges))
        return "h0_nodes differ from the endpoints of h0_edges";

    for (size_t i = 0; i < s.flaps.size(); ++i) {
        const Flap& f = s.flaps[i];
        const std::string tag = "flap " + std::to_string(i);
        if (f.edges.empty()) return tag + ": no edges";
        if (f.order() < 2 || f.order() > 3)
            return tag + ": boundary has " + std::to_string(f.boundary.size()) + " nodes";
        if (!sorted_unique_in(f.boundary, n))
            return tag + ": boundary not sorted, unique and in range";

        std::vector<uint32_t> comp = sorted_complement(m, f.edges);
        if (comp.empty()) return tag + ": no edges left on the other side";
        std::vector<uint32_t> fn = sorted_endpoints(g, f.edges);
        std::vector<uint32_t> cn = sorted_endpoints(g, comp);
        std::vector<uint32_t> inter;
        std::set_intersection(fn.begin(), fn.end(), cn.begin(), cn.end(),
                              std::back_inserter(inter));
        if (inter != f.boundary) return tag + ": boundary differs from the side intersection";
        if (fn.size() <= f.boundary.size()) return tag + ": no private node on the flap side";
        if (cn.size() <= f.boundary.size()) return tag + ": no private node on the other side";
        for (uint32_t b : f.boundary)
            if (!std::binary_search(s.h0_nodes.begin(), s.h0_nodes.end(), b))
                return tag + ": boundary node " + std::to_string(b) + " outside H0";
        if (!bipartition(edge_subgraph(g, f.edges)).bipartite) return tag + ": not bipartite";
        if (!is_linked(g, Separation{f.boundary, comp, f.edges})) return tag + ": not linked";

        const size_t expected = f.order() * (f.order() - 1) / 2;
        if (f.link_paths.size() != expected)
            return tag + ": expected " + std::to_string(expected) + " certificates, got " +
                   std::to_string(f.link_paths.size());
        std::set<uint32_t> edge_set(f.edges.begin(), f.edges.end());
        size_t idx = 0;
        for (size_t a = 0; a < f.boundary.size(); ++a) {
            for (size_t b = a + 1; b < f.boundary.size(); ++b, ++idx) {
                const std::vector<uint32_t>& path = f.link_paths[idx];
                const uint32_t u = f.boundary[a];
                const uint32_t v = f.boundary[b];
                const std::string ptag = tag + ": certificate (" + std::to_string(u) + "," +
                                         std::to_string(v) + ")";
                if (path.empty()) return ptag + " is empty";
                std::set<uint32_t> seen_nodes{u};
                uint32_t cur = u;
                bool ok = true;
                for (size_t k = 0; k < path.size() && ok; ++k) {
                    uint32_t e = path[k];
                    if (!edge_set.count(e)) {
                        ok = false;
                        break;
                    }
                    if (g.edge(e).u != cur && g.edge(e).v != cur) {
                        ok = false;
                        break;
                    }
                    cur = g.other_end(e, cur);
                    if (!seen_nodes.insert(cur).second) ok = false;
                    const bool last = (k + 1 == path.size());
                    if (ok && !last &&
                        std::binary_search(f.boundary.begin(), f.boundary.end(), cur))
                        ok = false;
                }
                if (!ok || cur != v) return ptag + " is not a valid internal path";
            }
        }
    }

    for (size_t i = 0; i < s.flaps.size(); ++i) {
        std::vector<uint32_t> vi = sorted_endpoints(g, s.flaps[i].edges);
        for (size_t j = i + 1; j < s.flaps.size(); ++j) {
            std::vector<uint32_t> vj = sorted_endpoints(g, s.flaps[j].edges);
            std::vector<uint32_t> shared;
            std::set_intersection(vi.begin(), vi.end(), vj.begin(), vj.end(),
                                  std::back_inserter(shared));
            for (uint32_t w : shared)
                if (!std::binary_search(s.h0_nodes.begin(), s.h0_nodes.end(), w))
                    return "flaps " + std::to_string(i) + "," + std::to_string(j) +
                           ": meet outside H0 at node " + std::to_string(w);
            const std::vector<uint32_t>& si = s.flaps[i].boundary;
            const std::vector<uint32_t>& sj = s.flaps[j].boundary;
            if (std::includes(si.begin(), si.end(), sj.begin(), sj.end()) ||
                std::includes(sj.begin(), sj.end(), si.begin(), si.end()))
                return "flaps " + std::to_string(i) + "," + std::to_string(j) +
                       ": nested boundaries";
        }
    }
    return std::nullopt;
}

SignedClique signed_clique(const Graph& flap, const std::vector<uint32_t>& boundary) {
    std::vector<int> colors = boundary_colors(flap, boundary, "signed_clique");
    SignedClique sc;
    sc.nodes = boundary;
    for (size_t i = 0; i < boundary.size(); ++i) {
        for (size_t j = i + 1; j < boundary.size(); ++j) {
            sc.pairs.emplace_back(boundary[i], boundary[j]);
            sc.sign.push_back(colors[i] != colors[j] ? 1 : 0);
        }
    }
    // The signing is only correct if clique + flap is balanced with the whole
    // flap signed.
    std::vector<Edge> edges = flap.edges();
    std::vector<char> sign(flap.num_edges(), 1);
    for (size_t k = 0; k < sc.pairs.size(); ++k) {
        edges.push_back({sc.pairs[k].first, sc.pairs[k].second});
        sign.push_back(sc.sign[k]);
    }
    if (!is_balanced({build_graph(flap.num_nodes(), edges), sign}).balanced)
        throw std::logic_error("signed_clique: signing failed to balance the flap");
    return sc;
}

SignedGraph build_H_plus(const Graph& g, const StarStructure& s) {
    if (auto defect = star_structure_defect(g, s))
        throw std::invalid_argument("build_H_plus: " + *defect);
    auto compact = [&s](uint32_t v) {
        return static_cast<uint32_t>(
            std::lower_bound(s.h0_nodes.begin(), s.h0_nodes.end(), v) - s.h0_nodes.begin());
    };
    std::vector<Edge> edges;
    std::vector<char> sign;
    for (uint32_t e : s.h0_edges) {
        edges.push_back({compact(g.edge(e).u), compact(g.edge(e).v)});
        sign.push_back(1);
    }
    for (const Flap& f : s.flaps) {
        SignedClique sc = signed_clique(edge_subgraph(g, f.edges), f.boundary);
        for (size_t k = 0; k < sc.pairs.size(); ++k) {
            edges.push_back({compact(sc.pairs[k].first), compact(sc.pairs[k].second)});
            sign.push_back(sc.sign[k]);
        }
    }
    return {build_graph(static_cast<uint32_t>(s.h0_nodes.size()), edges), sign};
}

StarStructure find_star_structure(const Graph& g, const StarSearchOptions& opts) {
    const uint32_t n = g.num_nodes();
    const uint32_t m = g.num_edges();
    if (n < 3 || m < 3)
        throw std::invalid_argument("find_star_structure: graph is not 2-connected");
    for (uint32_t c : components(g))
        if (c != 0) throw std::invalid_argument("find_star_structure: graph is not connected");
    if (blocks(g).size() != 1)
        throw std::invalid_argument("find_star_structure: graph is not 2-connected");
    if (bipartition(g).bipartite)
        throw std::invalid_argument("find_star_structure: graph is bipartite");

    uint32_t skip = opts.skip;
    auto trivial = [&] {
        StarStructure s;
        s.h0_nodes.resize(n);
        s.h0_edges.resize(m);
        for (uint32_t v = 0; v < n; ++v) s.h0_nodes[v] = v;
        for (uint32_t e = 0; e < m; ++e) s.h0_edges[e] = e;
        return s;
    };

    if (opts.scheme_hint) {
        validate_rotation(g, *opts.scheme_hint);
        if (!is_even_face_projective(SignedGraph::all_odd(g), *opts.scheme_hint))
            throw std::invalid_argument(
                "find_star_structure: scheme hint is not an even-face projective embedding");
        // The hint certifies the precondition: a non-bipartite graph with an
        // even-face projective embedding has no two disjoint odd cycles.
        if (skip == 0) return trivial();
        --skip;
    } else {
        OcpVerdict ocp = classify_ocp(g, opts.ocp_cap);
        if (ocp.cls != OcpClass::One)
            throw std::invalid_argument(
                "find_star_structure: graph has two node-disjoint odd cycles");
        if (m <= opts.embed_cap &&
            find_even_face_embedding(SignedGraph::all_odd(g), opts.embed_cap)) {
            if (skip == 0) return trivial();
            --skip;
        }
    }

    if (n > 64 || m > 64)
        throw BudgetError("find_star_structure: peeling search is limited to 64 nodes/edges");

    struct Cand {
        std::vector<uint32_t> edges;
        std::vector<uint32_t> boundary;
        std::vector<std::vector<uint32_t>> paths;
        uint64_t edge_mask = 0;
        uint64_t node_mask = 0;
        uint64_t private_mask = 0;
        uint32_t private_count = 0;
    };
    std::vector<Cand> cands;
    std::set<std::vector<uint32_t>> seen;
    auto consider = [&](const std::vector<uint32_t>& flap_edges) {
        if (flap_edges.empty() || flap_edges.size() >= m) return;
        if (!seen.insert(flap_edges).second) return;
        std::vector<uint32_t> comp = sorted_complement(m, flap_edges);
        std::vector<uint32_t> fn = sorted_endpoints(g, flap_edges);
        std::vector<uint32_t> cn = sorted_endpoints(g, comp);
        Cand c;
        std::set_intersection(fn.begin(), fn.end(), cn.begin(), cn.end(),
                              std::back_inserter(c.boundary));
        if (c.boundary.size() < 2 || c.boundary.size() > 3) return;
        if (fn.size() <= c.boundary.size()) return;  // flap side needs a private node
        if (cn.size() <= c.boundary.size()) return;  // so does the rest
        if (!bipartition(edge_subgraph(g, flap_edges)).bipartite) return;
        std::vector<char> allowed(m, 0);
        for (uint32_t e : flap_edges) allowed[e] = 1;
        std::vector<char> blocked(n, 0);
        for (size_t i = 0; i < c.boundary.size(); ++i) {
            for (size_t j = i + 1; j < c.boundary.size(); ++j) {
                for (uint32_t b : c.boundary)
                    blocked[b] = (b != c.boundary[i] && b != c.boundary[j]);
                auto path = flap_path(g, allowed, c.boundary[i], c.boundary[j], blocked);
                if (!path) return;  // not linked
                c.paths.push_back(*path);
            }
        }
        c.edges = flap_edges;
        for (uint32_t e : flap_edges) c.edge_mask |= uint64_t{1} << e;
        for (uint32_t v : fn) c.node_mask |= uint64_t{1} << v;
        c.private_mask = c.node_mask;
        for (uint32_t b : c.boundary) c.private_mask &= ~(uint64_t{1} << b);
        c.private_count = static_cast<uint32_t>(fn.size() - c.boundary.size());
        cands.push_back(std::move(c));
    };
    for (const Separation& sep : enumerate_separations(g, 3)) {
        consider(sep.part1);
        consider(sep.part0);
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.private_count != b.private_count) return a.private_count > b.private_count;
        return a.edges < b.edges;
    });
    uint32_t budget = opts.validation_budget;
    uint32_t tried = 0;
    std::string last_defect = "no candidate flap set";
    std::vector<uint32_t> chosen;

    auto try_set = [&]() -> std::optional<StarStructure> {
        if (budget == 0)
            throw DecompositionError("find_star_structure: budget exhausted after " +
                                     std::to_string(tried) +
                                     " candidate sets; last defect: " + last_defect);
        --budget;
        ++tried;
        StarStructure s;
        std::vector<uint32_t> used;
        for (uint32_t idx : chosen)
            used.insert(used.end(), cands[idx].edges.begin(), cands[idx].edges.end());
        std::sort(used.begin(), used.end());
        s.h0_edges = sorted_complement(m, used);
        if (s.h0_edges.empty()) {
            last_defect = "flaps cover every edge";
            return std::nullopt;
        }
        s.h0_nodes = sorted_endpoints(g, s.h0_edges);
        for (uint32_t idx : chosen)
            s.flaps.push_back({cands[idx].edges, cands[idx].boundary, cands[idx].paths});
        if (auto defect = star_structure_defect(g, s)) {
            last_defect = *defect;
            return std::nullopt;
        }
        SignedGraph hp = build_H_plus(g, s);
        for (uint32_t c : components(hp.graph)) {
            if (c != 0) {
                last_defect = "companion graph is disconnected";
                return std::nullopt;
            }
        }
        if (hp.graph.num_edges() > opts.embed_cap) {
            last_defect = "companion graph exceeds the embedding cap";
            return std::nullopt;
        }
        std::vector<std::vector<uint32_t>> want;
        for (const Flap& f : s.flaps) {
            std::vector<uint32_t> w;
            for (uint32_t b : f.boundary)
                w.push_back(static_cast<uint32_t>(
                    std::lower_bound(s.h0_nodes.begin(), s.h0_nodes.end(), b) -
                    s.h0_nodes.begin()));
            want.push_back(std::move(w));
        }
        SchemeFilter accept = [&want](const Graph& cg, const SignedRotationSystem&,
                                      const FaceSet& faces) {
            for (const std::vector<uint32_t>& bs : want) {
                bool on_face = false;
                for (const FaceWalk& walk : faces.faces) {
                    std::vector<uint32_t> fnodes = face_nodes(cg, walk);
                    if (std::includes(fnodes.begin(), fnodes.end(), bs.begin(), bs.end())) {
                        on_face = true;
                        break;
                    }
                }
                if (!on_face) return false;
            }
            return true;
        };
        if (!find_even_face_embedding_if(hp, accept, opts.embed_cap)) {
            last_defect = "companion graph has no admissible even-face embedding";
            return std::nullopt;
        }
        if (skip > 0) {
            --skip;
            last_defect = "skipped a validated structure";
            return std::nullopt;
        }
        return s;
    };

    auto compatible = [&](uint32_t i) {
        for (uint32_t j : chosen) {
            const Cand& a = cands[i];
            const Cand& b = cands[j];
            if (a.edge_mask & b.edge_mask) return false;
            if (a.private_mask & b.node_mask) return false;
            if (b.private_mask & a.node_mask) return false;
        }
        return true;
    };
    // Peel the candidate with the largest private part, validate, and peel
    // deeper only when validation fails; backtracking covers every subset
    // within the budget.
    std::function<std::optional<StarStructure>(uint32_t)> dfs =
        [&](uint32_t start) -> std::optional<StarStructure> {
        for (uint32_t i = start; i < cands.size(); ++i) {
            if (!compatible(i)) continue;
            chosen.push_back(i);
            if (auto r = try_set()) return r;
            if (auto r = dfs(i + 1)) return r;
            chosen.pop_back();
        }
        return std::nullopt;
    };
    if (auto r = dfs(0)) return *r;
    throw DecompositionError("find_star_structure: no validated structure among " +
                             std::to_string(tried) +
                             " candidate sets; last defect: " + last_defect);
}

const char* gadget_kind_name(GadgetKind kind) {
    switch (kind) {
        case GadgetKind::P3: return "P3";
        case GadgetKind::P4: return "P4";
        case GadgetKind::S222: return "S222";
        case GadgetKind::S233: return "S233";
    }
    throw std::invalid_argument("gadget_kind_name: unknown kind");
}

Gadget select_gadget(const Graph& flap, const std::vector<uint32_t>& boundary,
                     uint32_t fresh_base) {
    std::vector<int> colors = boundary_colors(flap, boundary, "select_gadget");
    if (fresh_base < flap.num_nodes())
        throw std::invalid_argument("select_gadget: fresh_base collides with existing ids");
    Gadget gd;
    gd.kind = expected_gadget_kind(colors);
    uint32_t next = fresh_base;
    auto fresh = [&] {
        gd.internals.push_back(next);
        return next++;
    };
    // Path of `len` edges from `leaf` to `center` through fresh internals.
    auto leg = [&](uint32_t leaf, uint32_t len, uint32_t center) {
        uint32_t prev = leaf;
        for (uint32_t k = 1; k < len; ++k) {
            uint32_t mid = fresh();
            gd.edges.push_back({prev, mid});
            prev = mid;
        }
        gd.edges.push_back({prev, center});
    };
    switch (gd.kind) {
        case GadgetKind::P3:
            gd.leaves = boundary;
            leg(boundary[0], 2, boundary[1]);
            break;
        case GadgetKind::P4:
            gd.leaves = boundary;
            leg(boundary[0], 3, boundary[1]);
            break;
        case GadgetKind::S222: {
            gd.leaves = boundary;
            uint32_t center = fresh();
            for (uint32_t b : boundary) leg(b, 2, center);
            break;
        }
        case GadgetKind::S233: {
            size_t s = singleton_index(colors);
            gd.leaves.push_back(boundary[s]);
            for (size_t i = 0; i < boundary.size(); ++i)
                if (i != s) gd.leaves.push_back(boundary[i]);
            uint32_t center = fresh();
            leg(gd.leaves[0], 2, center);
            leg(gd.leaves[1], 3, center);
            leg(gd.leaves[2], 3, center);
            break;
        }
    }
    std::vector<Edge> all = flap.edges();
    all.insert(all.end(), gd.edges.begin(), gd.edges.end());
    if (!bipartition(build_graph(next, all)).bipartite)
        throw std::logic_error("select_gadget: gadget broke bipartiteness");
    return gd;
}

Core build_core(const Graph& g, const StarStructure& s, const std::vector<Gadget>& gadgets,
                uint32_t embed_cap) {
    if (auto defect = star_structure_defect(g, s))
        throw std::invalid_argument("build_core: " + *defect);
    if (gadgets.size() != s.flaps.size())
        throw std::invalid_argument("build_core: one gadget per flap required");

    static const std::pair<size_t, size_t> shape[] = {{1, 2}, {2, 3}, {4, 6}, {6, 8}};
    std::set<uint32_t> taken;
    for (size_t i = 0; i < gadgets.size(); ++i) {
        const Gadget& gd = gadgets[i];
        const std::string tag = "build_core: gadget " + std::to_string(i);
        std::vector<uint32_t> leaves = gd.leaves;
        std::sort(leaves.begin(), leaves.end());
        if (leaves != s.flaps[i].boundary)
            throw std::invalid_argument(tag + " leaves differ from the flap boundary");
        std::vector<int> colors =
            boundary_colors(edge_subgraph(g, s.flaps[i].edges), s.flaps[i].boundary, tag);
        if (gd.kind != expected_gadget_kind(colors))
            throw std::invalid_argument(tag + " kind does not match the flap parities");
        if (gd.kind == GadgetKind::S233 &&
            gd.leaves[0] != s.flaps[i].boundary[singleton_index(colors)])
            throw std::invalid_argument(tag + " puts the length-2 leg at the wrong leaf");
        auto [want_internal, want_edges] = shape[static_cast<size_t>(gd.kind)];
        if (gd.internals.size() != want_internal || gd.edges.size() != want_edges)
            throw std::invalid_argument(tag + " edge list is malformed");
        for (uint32_t w : gd.internals)
            if (w < g.num_nodes() || !taken.insert(w).second)
                throw std::invalid_argument(tag + " internals are not fresh and disjoint");
        for (const Edge& e : gd.edges) {
            for (uint32_t end : {e.u, e.v}) {
                bool known = std::find(gd.leaves.begin(), gd.leaves.end(), end) !=
                                 gd.leaves.end() ||
                             std::find(gd.internals.begin(), gd.internals.end(), end) !=
                                 gd.internals.end();
                if (!known)
                    throw std::invalid_argument(tag + " edge touches a foreign node");
            }
        }
    }

    Core core;
    core.node_ids = s.h0_nodes;
    std::vector<Edge> edges;
    auto compact = [&](uint32_t v) {
        auto it = std::lower_bound(s.h0_nodes.begin(), s.h0_nodes.end(), v);
        if (it != s.h0_nodes.end() && *it == v)
            return static_cast<uint32_t>(it - s.h0_nodes.begin());
        auto pos = std::find(core.node_ids.begin() + s.h0_nodes.size(), core.node_ids.end(), v);
        return static_cast<uint32_t>(pos - core.node_ids.begin());
    };
    for (uint32_t e : s.h0_edges) edges.push_back({compact(g.edge(e).u), compact(g.edge(e).v)});
    for (const Gadget& gd : gadgets) {
        core.node_ids.insert(core.node_ids.end(), gd.internals.begin(), gd.internals.end());
        std::vector<uint32_t> ids;
        for (const Edge& e : gd.edges) {
            ids.push_back(static_cast<uint32_t>(edges.size()));
            edges.push_back({compact(e.u), compact(e.v)});
        }
        core.gadget_edges.push_back(std::move(ids));
    }
    core.graph = build_graph(static_cast<uint32_t>(core.node_ids.size()), edges);
    for (uint32_t c : components(core.graph))
        if (c != 0) throw std::logic_error("build_core: core is disconnected");
    if (core.graph.num_edges() > embed_cap)
        throw BudgetError("build_core: core exceeds the embedding cap");
    auto scheme = find_even_face_embedding(SignedGraph::all_odd(core.graph), embed_cap);
    if (!scheme)
        throw DecompositionError(
            "build_core: core has no even-face projective embedding; re-search the star "
            "structure");
    core.scheme = std::move(*scheme);
    return core;
}

std::string decomposition_json(const StarStructure& s, const std::vector<Gadget>& gadgets) {
    nlohmann::json j;
    j["h0"] = {{"nodes", s.h0_nodes}, {"edges", s.h0_edges}};
    j["flaps"] = nlohmann::json::array();
    for (const Flap& f : s.flaps)
        j["flaps"].push_back(
            {{"boundary", f.boundary}, {"edges", f.edges}, {"link_paths", f.link_paths}});
    j["gadgets"] = nlohmann::json::array();
    for (const Gadget& gd : gadgets)
        j["gadgets"].push_back({{"kind", gadget_kind_name(gd.kind)},
                                {"leaves", gd.leaves},
                                {"internals", gd.internals}});
    return j.dump();
}

}  // namespace stabef
