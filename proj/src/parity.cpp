#include "stabef/parity.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <functional>
#include <sstream>

#include "stabef/rational.hpp"

namespace stabef {

namespace {

// Parity 2-coloring of the alive-induced subgraph: color[u] ^ color[v] must
// equal sign[e]. Returns a Sigma-odd cycle on failure.
BalanceResult balance_check(const Graph& g, const std::vector<char>& sign,
                            const std::vector<char>& alive) {
    const uint32_t n = g.num_nodes();
    std::vector<int> color(n, -1);
    std::vector<uint32_t> parent(n, UINT32_MAX), parent_edge(n, UINT32_MAX);
    for (uint32_t root = 0; root < n; ++root) {
        if (!alive[root] || color[root] != -1) continue;
        color[root] = 0;
        std::deque<uint32_t> queue{root};
        while (!queue.empty()) {
            uint32_t v = queue.front();
            queue.pop_front();
            for (auto [e, w] : g.incident(v)) {
                if (!alive[w] || e == parent_edge[v]) continue;
                int want = color[v] ^ (sign[e] ? 1 : 0);
                if (color[w] == -1) {
                    color[w] = want;
                    parent[w] = v;
                    parent_edge[w] = e;
                    queue.push_back(w);
                } else if (color[w] != want) {
                    std::vector<char> on_v_path(n, 0);
                    for (uint32_t a = v; a != UINT32_MAX; a = parent[a]) on_v_path[a] = 1;
                    uint32_t meet = w;
                    while (!on_v_path[meet]) meet = parent[meet];
                    std::vector<uint32_t> cycle;
                    for (uint32_t x = v; x != meet; x = parent[x]) cycle.push_back(parent_edge[x]);
                    std::vector<uint32_t> path_w;
                    for (uint32_t x = w; x != meet; x = parent[x]) path_w.push_back(parent_edge[x]);
                    for (auto it = path_w.rbegin(); it != path_w.rend(); ++it) cycle.push_back(*it);
                    cycle.push_back(e);
                    return {false, cycle};
                }
            }
        }
    }
    return {true, {}};
}

}  // namespace

BalanceResult is_balanced(const SignedGraph& sg) {
    std::vector<char> alive(sg.graph.num_nodes(), 1);
    return balance_check(sg.graph, sg.sign, alive);
}

int sigma_parity(const SignedGraph& sg, const std::vector<uint32_t>& edge_ids) {
    int p = 0;
    for (uint32_t e : edge_ids) p ^= sg.sign[e] ? 1 : 0;
    return p;
}

std::vector<uint32_t> shortest_odd_cycle_signed(const SignedGraph& sg) {
    const Graph& g = sg.graph;
    const uint32_t n = g.num_nodes();
    // BFS in the parity double cover, states (v, parity). dist((r,0),(r,1))
    // is the shortest Sigma-odd closed walk through r; a shortest odd closed
    // walk overall has no repeated node (a repeat would split it into a
    // shorter odd closed walk), so the minimum over roots is a simple cycle.
    uint32_t best_len = UINT32_MAX;
    std::vector<uint32_t> best;
    std::vector<uint32_t> dist(2 * n), via(2 * n);
    for (uint32_t r = 0; r < n; ++r) {
        std::fill(dist.begin(), dist.end(), UINT32_MAX);
        std::fill(via.begin(), via.end(), UINT32_MAX);
        std::vector<uint32_t> queue{2 * r};
        dist[2 * r] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            uint32_t s = queue[qi];
            // keep expanding at equality so every root can enter the tie-break
            if (best_len != UINT32_MAX && dist[s] + 1 > best_len) continue;
            uint32_t v = s >> 1, p = s & 1;
            for (const auto& [e, w] : g.incident(v)) {
                uint32_t t = (w << 1) | (p ^ (sg.sign[e] ? 1u : 0u));
                if (dist[t] == UINT32_MAX) {
                    dist[t] = dist[s] + 1;
                    via[t] = e;
                    queue.push_back(t);
                }
            }
        }
        if (dist[2 * r + 1] == UINT32_MAX || dist[2 * r + 1] > best_len) continue;
        std::vector<uint32_t> walk;
        uint32_t s = 2 * r + 1;
        while (s != 2 * r) {
            uint32_t e = via[s];
            walk.push_back(e);
            uint32_t v = s >> 1;
            uint32_t w = g.other_end(e, v);
            s = (w << 1) | ((s & 1) ^ (sg.sign[e] ? 1u : 0u));
        }
        std::sort(walk.begin(), walk.end());
        if (dist[2 * r + 1] < best_len || walk < best) {
            best_len = dist[2 * r + 1];
            best = walk;
        }
    }
    return best;
}

std::vector<uint32_t> shortest_odd_cycle(const Graph& g) {
    return shortest_odd_cycle_signed(SignedGraph::all_odd(g));
}

OcpVerdict classify_ocp_signed(const SignedGraph& sg, uint32_t node_cap) {
    const Graph& g = sg.graph;
    const uint32_t n = g.num_nodes();
    std::vector<char> all(n, 1);
    BalanceResult whole = balance_check(g, sg.sign, all);
    if (whole.balanced) return {OcpClass::Zero, {}};

    // Zero is decidable at any size; separating One from AtLeastTwo uses an
    // exhaustive split and is capped.
    if (n > node_cap)
        throw BudgetError("classify_ocp: " + std::to_string(n) + " nodes exceeds cap " +
                          std::to_string(node_cap));

    // Two disjoint Sigma-odd cycles exist iff some node split has a Sigma-odd
    // cycle on both sides. Node 0 is pinned to side A to halve the search.
    if (n >= 2) {
        const uint64_t limit = 1ull << (n - 1);
        std::vector<char> side_a(n), side_b(n);
        for (uint64_t mask = 0; mask < limit; ++mask) {
            side_a[0] = 1;
            side_b[0] = 0;
            for (uint32_t v = 1; v < n; ++v) {
                bool b = (mask >> (v - 1)) & 1ull;
                side_a[v] = !b;
                side_b[v] = b;
            }
            BalanceResult ra = balance_check(g, sg.sign, side_a);
            if (ra.balanced) continue;
            BalanceResult rb = balance_check(g, sg.sign, side_b);
            if (rb.balanced) continue;
            return {OcpClass::AtLeastTwo, {ra.odd_cycle, rb.odd_cycle}};
        }
    }
    return {OcpClass::One, {whole.odd_cycle}};
}

OcpVerdict classify_ocp(const Graph& g, uint32_t node_cap) {
    return classify_ocp_signed(SignedGraph::all_odd(g), node_cap);
}

std::optional<std::vector<uint32_t>> odd_cycle_transversal_signed(const SignedGraph& sg,
                                                                  uint32_t cap) {
    const Graph& g = sg.graph;
    const uint32_t n = g.num_nodes();
    std::vector<char> alive(n, 1);
    std::vector<uint32_t> chosen;
    // Sizes in increasing order; combinations in lexicographic order within a
    // size, so the first hit is the canonical transversal.
    std::function<bool(uint32_t, uint32_t)> search = [&](uint32_t start, uint32_t remaining) -> bool {
        if (remaining == 0) return balance_check(g, sg.sign, alive).balanced;
        for (uint32_t v = start; v + remaining <= n; ++v) {
            alive[v] = 0;
            chosen.push_back(v);
            if (search(v + 1, remaining - 1)) return true;
            chosen.pop_back();
            alive[v] = 1;
        }
        return false;
    };
    for (uint32_t size = 0; size <= std::min(cap, n); ++size) {
        if (search(0, size)) return chosen;
    }
    return std::nullopt;
}

std::optional<std::vector<uint32_t>> odd_cycle_transversal(const Graph& g, uint32_t cap) {
    return odd_cycle_transversal_signed(SignedGraph::all_odd(g), cap);
}

SignedGraph read_signed_graph_text(std::istream& in) {
    std::string line;
    uint32_t n = 0, m = 0;
    bool have_header = false;
    std::vector<Edge> edges;
    std::vector<char> sign;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            std::string kind;
            ls >> kind >> n >> m;
            if (!ls || kind != "stab") throw FormatError("bad p line: " + line);
            have_header = true;
        } else if (tag == "e") {
            if (!have_header) throw FormatError("e line before p line");
            uint32_t u, v;
            std::string s;
            ls >> u >> v >> s;
            if (!ls || (s != "+" && s != "-")) throw FormatError("bad signed e line: " + line);
            edges.push_back({u, v});
            sign.push_back(s == "-" ? 1 : 0);
        } else {
            throw FormatError("unknown line tag: " + line);
        }
    }
    if (!have_header) throw FormatError("missing p line");
    if (edges.size() != m) throw FormatError("edge count mismatch with p line");
    return {build_graph(n, edges), sign};
}

SignedGraph read_signed_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    return read_signed_graph_text(in);
}

std::string write_signed_graph_text(const SignedGraph& sg) {
    std::ostringstream out;
    out << "p stab " << sg.graph.num_nodes() << " " << sg.graph.num_edges() << "\n";
    for (uint32_t e = 0; e < sg.graph.num_edges(); ++e)
        out << "e " << sg.graph.edge(e).u << " " << sg.graph.edge(e).v << " "
            << (sg.sign[e] ? '-' : '+') << "\n";
    return out.str();
}

}  // namespace stabef
