#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace stabef {

// Undirected multigraph on nodes 0..n-1. Edge ids are stable (index into the
// edge list). Parallel edges are permitted; loops are not.
struct Edge {
    uint32_t u;
    uint32_t v;
};

class Graph {
public:
    Graph() = default;
    Graph(uint32_t n, std::vector<Edge> edges);

    uint32_t num_nodes() const { return n_; }
    uint32_t num_edges() const { return static_cast<uint32_t>(edges_.size()); }
    const Edge& edge(uint32_t e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Incident (edge id, other endpoint) pairs in edge-id order.
    const std::vector<std::pair<uint32_t, uint32_t>>& incident(uint32_t v) const {
        return adj_[v];
    }
    uint32_t degree(uint32_t v) const { return static_cast<uint32_t>(adj_[v].size()); }
    uint32_t other_end(uint32_t e, uint32_t v) const {
        return edges_[e].u == v ? edges_[e].v : edges_[e].u;
    }

private:
    uint32_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> adj_;
};

// Throws FormatError on out-of-range endpoints or loops.
Graph build_graph(uint32_t n, const std::vector<Edge>& edges);

// Result of a 2-coloring attempt. On failure `odd_cycle` holds the edge ids of
// a simple odd cycle.
struct Bipartition {
    bool bipartite = false;
    std::vector<int> color;              // 0/1 per node (valid iff bipartite)
    std::vector<uint32_t> odd_cycle;     // edge ids (nonempty iff !bipartite)
};

Bipartition bipartition(const Graph& g);

// Two edge-disjoint subgraphs covering G. `boundary` is sorted;
// part0/part1 are sorted edge-id lists. Edges with both ends on the boundary
// are always assigned to part0.
struct Separation {
    std::vector<uint32_t> boundary;
    std::vector<uint32_t> part0;
    std::vector<uint32_t> part1;
    uint32_t order() const { return static_cast<uint32_t>(boundary.size()); }
    bool operator==(const Separation&) const = default;
};

// All separations of order <= k induced by node cutsets, deduplicated,
// in deterministic order. Each side must contain a private node and at
// least one edge.
std::vector<Separation> enumerate_separations(const Graph& g, uint32_t k);

// True iff every boundary pair {u, v} is joined by a path inside part1 that
// avoids the other boundary nodes internally.
bool is_linked(const Graph& g, const Separation& sep);

// Node set of a side: boundary plus endpoints of the side's edges.
std::vector<uint32_t> side_nodes(const Graph& g, const Separation& sep, int side);

// Text format:
//   c <comment>
//   p stab <n> <m>
//   e <u> <v>
// Writers emit the canonical form (no comments, edges in id order), so
// write(read(write(g))) == write(g) byte for byte.
Graph read_graph_text(std::istream& in);
Graph read_graph_file(const std::string& path);
std::string write_graph_text(const Graph& g);

// Connected components: color[v] = component index, 0-based, in order of
// smallest contained node.
std::vector<uint32_t> components(const Graph& g);

// Biconnected components as edge-id groups (bridges come out as single-edge
// groups). Deterministic order.
std::vector<std::vector<uint32_t>> blocks(const Graph& g);

}  // namespace stabef
