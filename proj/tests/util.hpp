#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "stabef/graph.hpp"

namespace testutil {

inline stabef::Graph make_cycle(uint32_t k) {
    std::vector<stabef::Edge> edges;
    for (uint32_t i = 0; i < k; ++i) edges.push_back({i, (i + 1) % k});
    return stabef::Graph(k, edges);
}

inline stabef::Graph make_path(uint32_t k) {
    std::vector<stabef::Edge> edges;
    for (uint32_t i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
    return stabef::Graph(k, edges);
}

inline stabef::Graph make_complete(uint32_t k) {
    std::vector<stabef::Edge> edges;
    for (uint32_t i = 0; i < k; ++i)
        for (uint32_t j = i + 1; j < k; ++j) edges.push_back({i, j});
    return stabef::Graph(k, edges);
}

enum class GadgetKind { P3, P4, S222, S233 };

// Glues a fresh copy of the named gadget onto `boundary` nodes of g (two
// nodes for the paths, three for the spiders; for S233 the first boundary
// node carries the length-2 leg). Returns the grown graph and the gadget's
// edge ids. Test-side twin of the pipeline's gadget selection, kept
// independent on purpose.
inline std::pair<stabef::Graph, std::vector<uint32_t>> with_gadget(
    const stabef::Graph& g, GadgetKind kind, const std::vector<uint32_t>& boundary) {
    std::vector<stabef::Edge> es = g.edges();
    uint32_t next = g.num_nodes();
    std::vector<uint32_t> h;
    auto leg = [&](uint32_t leaf, uint32_t len, uint32_t center) {
        uint32_t prev = leaf;
        for (uint32_t i = 1; i < len; ++i) {
            h.push_back(static_cast<uint32_t>(es.size()));
            es.push_back({prev, next});
            prev = next++;
        }
        h.push_back(static_cast<uint32_t>(es.size()));
        es.push_back({prev, center});
    };
    switch (kind) {
        case GadgetKind::P3:
            leg(boundary.at(0), 2, boundary.at(1));
            break;
        case GadgetKind::P4:
            leg(boundary.at(0), 3, boundary.at(1));
            break;
        case GadgetKind::S222: {
            uint32_t center = next++;
            for (uint32_t b : {boundary.at(0), boundary.at(1), boundary.at(2)}) leg(b, 2, center);
            break;
        }
        case GadgetKind::S233: {
            uint32_t center = next++;
            leg(boundary.at(0), 2, center);
            leg(boundary.at(1), 3, center);
            leg(boundary.at(2), 3, center);
            break;
        }
    }
    return {stabef::build_graph(next, es), h};
}

inline bool is_simple_cycle(const stabef::Graph& g, const std::vector<uint32_t>& ids) {
    if (ids.empty()) return false;
    std::map<uint32_t, uint32_t> deg;
    for (uint32_t e : ids) {
        ++deg[g.edge(e).u];
        ++deg[g.edge(e).v];
    }
    for (const auto& [v, d] : deg)
        if (d != 2) return false;
    std::map<uint32_t, std::vector<uint32_t>> adj;
    for (uint32_t e : ids) {
        adj[g.edge(e).u].push_back(g.edge(e).v);
        adj[g.edge(e).v].push_back(g.edge(e).u);
    }
    std::map<uint32_t, char> vis;
    std::vector<uint32_t> stack{deg.begin()->first};
    vis[stack[0]] = 1;
    while (!stack.empty()) {
        uint32_t v = stack.back();
        stack.pop_back();
        for (uint32_t w : adj[v])
            if (!vis[w]) {
                vis[w] = 1;
                stack.push_back(w);
            }
    }
    return vis.size() == deg.size();
}

// every simple cycle as a sorted edge-id list, by edge-subset scan (small m)
inline std::vector<std::vector<uint32_t>> all_cycles(const stabef::Graph& g) {
    const uint32_t m = g.num_edges();
    std::vector<std::vector<uint32_t>> out;
    for (uint64_t mask = 1; mask < (1ull << m); ++mask) {
        std::vector<uint32_t> ids;
        for (uint32_t e = 0; e < m; ++e)
            if (mask & (1ull << e)) ids.push_back(e);
        if (is_simple_cycle(g, ids)) out.push_back(ids);
    }
    return out;
}

}  // namespace testutil
