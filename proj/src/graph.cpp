#include "stabef/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <functional>
#include <istream>
#include <set>
#include <sstream>

#include "stabef/rational.hpp"

namespace stabef {

Graph::Graph(uint32_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    adj_.resize(n_);
    for (uint32_t e = 0; e < edges_.size(); ++e) {
        adj_[edges_[e].u].push_back({e, edges_[e].v});
        adj_[edges_[e].v].push_back({e, edges_[e].u});
    }
}

Graph build_graph(uint32_t n, const std::vector<Edge>& edges) {
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n)
            throw FormatError("edge endpoint out of range");
        if (e.u == e.v)
            throw FormatError("loops are not allowed");
    }
    return Graph(n, edges);
}

Bipartition bipartition(const Graph& g) {
    Bipartition result;
    const uint32_t n = g.num_nodes();
    result.color.assign(n, -1);
    std::vector<uint32_t> parent_edge(n, UINT32_MAX);
    std::vector<uint32_t> parent(n, UINT32_MAX);

    for (uint32_t root = 0; root < n; ++root) {
        if (result.color[root] != -1) continue;
        result.color[root] = 0;
        std::deque<uint32_t> queue{root};
        while (!queue.empty()) {
            uint32_t v = queue.front();
            queue.pop_front();
            for (auto [e, w] : g.incident(v)) {
                if (result.color[w] == -1) {
                    result.color[w] = 1 - result.color[v];
                    parent[w] = v;
                    parent_edge[w] = e;
                    queue.push_back(w);
                } else if (result.color[w] == result.color[v] && e != parent_edge[v]) {
                    // Odd cycle: walk both endpoints up to their meeting point.
                    std::vector<uint32_t> path_v, path_w;
                    std::vector<char> on_v_path(n, 0);
                    uint32_t a = v;
                    while (a != UINT32_MAX) {
                        on_v_path[a] = 1;
                        a = parent[a];
                    }
                    uint32_t meet = w;
                    while (!on_v_path[meet]) meet = parent[meet];
                    for (uint32_t x = v; x != meet; x = parent[x]) path_v.push_back(parent_edge[x]);
                    for (uint32_t x = w; x != meet; x = parent[x]) path_w.push_back(parent_edge[x]);
                    result.odd_cycle = path_v;
                    for (auto it = path_w.rbegin(); it != path_w.rend(); ++it)
                        result.odd_cycle.push_back(*it);
                    result.odd_cycle.push_back(e);
                    result.bipartite = false;
                    return result;
                }
            }
        }
    }
    result.bipartite = true;
    return result;
}

std::vector<uint32_t> components(const Graph& g) {
    const uint32_t n = g.num_nodes();
    std::vector<uint32_t> comp(n, UINT32_MAX);
    uint32_t next = 0;
    for (uint32_t root = 0; root < n; ++root) {
        if (comp[root] != UINT32_MAX) continue;
        comp[root] = next;
        std::deque<uint32_t> queue{root};
        while (!queue.empty()) {
            uint32_t v = queue.front();
            queue.pop_front();
            for (auto [e, w] : g.incident(v)) {
                (void)e;
                if (comp[w] == UINT32_MAX) {
                    comp[w] = next;
                    queue.push_back(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

namespace {

// Components of G minus a deleted node set; returns component index per node
// (UINT32_MAX for deleted).
std::vector<uint32_t> components_minus(const Graph& g, const std::vector<char>& deleted,
                                       uint32_t& count) {
    const uint32_t n = g.num_nodes();
    std::vector<uint32_t> comp(n, UINT32_MAX);
    count = 0;
    for (uint32_t root = 0; root < n; ++root) {
        if (deleted[root] || comp[root] != UINT32_MAX) continue;
        comp[root] = count;
        std::deque<uint32_t> queue{root};
        while (!queue.empty()) {
            uint32_t v = queue.front();
            queue.pop_front();
            for (auto [e, w] : g.incident(v)) {
                (void)e;
                if (!deleted[w] && comp[w] == UINT32_MAX) {
                    comp[w] = count;
                    queue.push_back(w);
                }
            }
        }
        ++count;
    }
    return comp;
}

}  // namespace

std::vector<Separation> enumerate_separations(const Graph& g, uint32_t k) {
    const uint32_t n = g.num_nodes();
    std::vector<Separation> out;
    std::set<std::pair<std::vector<uint32_t>, std::vector<uint32_t>>> seen;  // (boundary, part1)

    std::vector<uint32_t> cutset;
    std::function<void()> process = [&]() {
        std::vector<char> deleted(n, 0);
        for (uint32_t s : cutset) deleted[s] = 1;
        uint32_t comp_count = 0;
        std::vector<uint32_t> comp = components_minus(g, deleted, comp_count);
        if (comp_count < 2) return;
        if (comp_count > 20) return;  // subset split would explode; desk scale only
        // Every bipartition of components into nonempty (A, B); canonical form
        // puts the component of the smallest non-cut node in A.
        for (uint32_t mask = 1; mask + 1 < (1u << comp_count); ++mask) {
            if (mask & 1u) continue;  // component 0 stays in A => its bit is 0
            std::vector<uint32_t> part0, part1;
            bool ok = true;
            for (uint32_t e = 0; e < g.num_edges(); ++e) {
                uint32_t cu = comp[g.edge(e).u], cv = comp[g.edge(e).v];
                bool u_in_b = cu != UINT32_MAX && ((mask >> cu) & 1u);
                bool v_in_b = cv != UINT32_MAX && ((mask >> cv) & 1u);
                if (u_in_b || v_in_b)
                    part1.push_back(e);
                else
                    part0.push_back(e);
            }
            if (part0.empty() || part1.empty()) ok = false;
            if (!ok) continue;
            Separation sep;
            sep.boundary = cutset;
            sep.part0 = std::move(part0);
            sep.part1 = std::move(part1);
            auto key = std::make_pair(sep.boundary, sep.part1);
            if (seen.insert(key).second) out.push_back(std::move(sep));
        }
    };

    std::function<void(uint32_t)> recurse = [&](uint32_t start) {
        process();
        if (cutset.size() == k) return;
        for (uint32_t v = start; v < n; ++v) {
            cutset.push_back(v);
            recurse(v + 1);
            cutset.pop_back();
        }
    };
    recurse(0);
    return out;
}

std::vector<uint32_t> side_nodes(const Graph& g, const Separation& sep, int side) {
    std::set<uint32_t> nodes(sep.boundary.begin(), sep.boundary.end());
    const auto& part = side == 0 ? sep.part0 : sep.part1;
    for (uint32_t e : part) {
        nodes.insert(g.edge(e).u);
        nodes.insert(g.edge(e).v);
    }
    return {nodes.begin(), nodes.end()};
}

bool is_linked(const Graph& g, const Separation& sep) {
    const uint32_t n = g.num_nodes();
    std::vector<char> in_part1(g.num_edges(), 0);
    for (uint32_t e : sep.part1) in_part1[e] = 1;
    for (size_t i = 0; i < sep.boundary.size(); ++i) {
        for (size_t j = i + 1; j < sep.boundary.size(); ++j) {
            uint32_t u = sep.boundary[i], v = sep.boundary[j];
            std::vector<char> blocked(n, 0);
            for (uint32_t s : sep.boundary)
                if (s != u && s != v) blocked[s] = 1;
            std::vector<char> visited(n, 0);
            std::deque<uint32_t> queue{u};
            visited[u] = 1;
            bool found = false;
            while (!queue.empty() && !found) {
                uint32_t x = queue.front();
                queue.pop_front();
                for (auto [e, y] : g.incident(x)) {
                    if (!in_part1[e] || blocked[y] || visited[y]) continue;
                    if (y == v) {
                        found = true;
                        break;
                    }
                    visited[y] = 1;
                    queue.push_back(y);
                }
            }
            if (!found) return false;
        }
    }
    return true;
}

Graph read_graph_text(std::istream& in) {
    std::string line;
    uint32_t n = 0, m = 0;
    bool have_header = false;
    std::vector<Edge> edges;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            if (have_header) throw FormatError("duplicate p line");
            std::string kind;
            ls >> kind >> n >> m;
            if (!ls || kind != "stab") throw FormatError("bad p line: " + line);
            have_header = true;
        } else if (tag == "e") {
            if (!have_header) throw FormatError("e line before p line");
            uint32_t u, v;
            ls >> u >> v;
            if (!ls) throw FormatError("bad e line: " + line);
            std::string extra;
            if (ls >> extra) throw FormatError("unexpected token on e line: " + line);
            edges.push_back({u, v});
        } else {
            throw FormatError("unknown line tag '" + tag + "' at line " + std::to_string(lineno));
        }
    }
    if (!have_header) throw FormatError("missing p line");
    if (edges.size() != m) throw FormatError("edge count mismatch with p line");
    return build_graph(n, edges);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    return read_graph_text(in);
}

std::string write_graph_text(const Graph& g) {
    std::ostringstream out;
    out << "p stab " << g.num_nodes() << " " << g.num_edges() << "\n";
    for (const Edge& e : g.edges()) out << "e " << e.u << " " << e.v << "\n";
    return out.str();
}

std::vector<std::vector<uint32_t>> blocks(const Graph& g) {
    const uint32_t n = g.num_nodes();
    std::vector<uint32_t> disc(n, 0), low(n, 0);
    std::vector<char> visited(n, 0);
    std::vector<uint32_t> edge_stack;
    std::vector<std::vector<uint32_t>> out;
    uint32_t timer = 1;

    // Iterative DFS; each frame tracks the incident-list position.
    struct Frame {
        uint32_t v;
        uint32_t parent_edge;
        size_t idx;
    };
    for (uint32_t root = 0; root < n; ++root) {
        if (visited[root]) continue;
        std::vector<Frame> stack{{root, UINT32_MAX, 0}};
        visited[root] = 1;
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.idx < g.incident(f.v).size()) {
                auto [e, w] = g.incident(f.v)[f.idx++];
                if (e == f.parent_edge) continue;
                if (!visited[w]) {
                    edge_stack.push_back(e);
                    visited[w] = 1;
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, e, 0});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.push_back(e);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                uint32_t v = f.v;
                uint32_t tree_edge = f.parent_edge;
                stack.pop_back();
                if (!stack.empty()) {
                    uint32_t p = stack.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= disc[p]) {
                        // p is a cut vertex (or root); pop one block.
                        std::vector<uint32_t> block;
                        while (!edge_stack.empty()) {
                            uint32_t e = edge_stack.back();
                            block.push_back(e);
                            edge_stack.pop_back();
                            if (e == tree_edge) break;  // tree edge into v closes the block
                        }
                        std::sort(block.begin(), block.end());
                        out.push_back(std::move(block));
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace stabef
