#include "stabef/embedding.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "stabef/rational.hpp"

namespace stabef {

namespace {

uint32_t parse_u32(const std::string& tok) {
    if (tok.empty() || tok.size() > 8) throw FormatError("embedding: bad number '" + tok + "'");
    for (char c : tok)
        if (c < '0' || c > '9') throw FormatError("embedding: bad number '" + tok + "'");
    return static_cast<uint32_t>(std::stoul(tok));
}

// Tracing state s = 2h + (dir<0): edge-end h is being traversed away from
// end_node(h) with handedness dir. next() permutes the 4|E| states; mirror()
// conjugates next() to its inverse, so orbits pair up, one pair per face.
struct Tracer {
    const Graph& g;
    const SignedRotationSystem& srs;
    std::vector<uint32_t> pos;  // index of each edge-end in its rotation

    Tracer(const Graph& g_, const SignedRotationSystem& srs_) : g(g_), srs(srs_) {
        pos.assign(2 * g.num_edges(), UINT32_MAX);
        for (const auto& r : srs.rotation)
            for (uint32_t i = 0; i < r.size(); ++i) pos[r[i]] = i;
    }

    uint32_t next(uint32_t s) const {
        const uint32_t h = s >> 1, h2 = h ^ 1u;
        const int d2 = ((s & 1) ? -1 : 1) * srs.edge_sign[h >> 1];
        const auto& r = srs.rotation[end_node(g, h2)];
        const uint32_t k = static_cast<uint32_t>(r.size());
        const uint32_t i = pos[h2];
        const uint32_t h3 = r[d2 > 0 ? (i + 1) % k : (i + k - 1) % k];
        return (h3 << 1) | (d2 < 0 ? 1u : 0u);
    }

    uint32_t mirror(uint32_t s) const {
        const uint32_t h = s >> 1;
        const int dm = -((s & 1) ? -1 : 1) * srs.edge_sign[h >> 1];
        return ((h ^ 1u) << 1) | (dm < 0 ? 1u : 0u);
    }
};

// Face boundary must be a simple cycle traversed with uniform multiplicity:
// once (2-sided boundary) or twice (the face wraps a 1-sided cycle).
bool face_is_cycle(const Graph& g, const FaceWalk& w) {
    std::map<uint32_t, uint32_t> mult;
    for (uint32_t h : w.half) ++mult[h >> 1];
    const uint32_t m0 = mult.begin()->second;
    if (m0 != 1 && m0 != 2) return false;
    std::map<uint32_t, uint32_t> deg;
    for (const auto& [e, c] : mult) {
        if (c != m0) return false;
        ++deg[g.edge(e).u];
        ++deg[g.edge(e).v];
    }
    for (const auto& [v, d] : deg)
        if (d != 2) return false;
    return true;
}

bool connected_graph(const Graph& g) {
    if (g.num_nodes() == 0) return false;
    auto comp = components(g);
    for (uint32_t c : comp)
        if (c != comp[0]) return false;
    return true;
}

}  // namespace

void validate_rotation(const Graph& g, const SignedRotationSystem& srs) {
    const uint32_t n = g.num_nodes(), m = g.num_edges();
    if (srs.rotation.size() != n) throw FormatError("rotation: node count mismatch");
    if (srs.edge_sign.size() != m) throw FormatError("rotation: edge count mismatch");
    for (int8_t s : srs.edge_sign)
        if (s != 1 && s != -1) throw FormatError("rotation: sign must be +1 or -1");
    std::vector<char> seen(2 * m, 0);
    for (uint32_t v = 0; v < n; ++v) {
        if (srs.rotation[v].size() != g.degree(v))
            throw FormatError("rotation: degree mismatch at node " + std::to_string(v));
        for (uint32_t h : srs.rotation[v]) {
            if (h >= 2 * m || end_node(g, h) != v || seen[h])
                throw FormatError("rotation: bad edge-end at node " + std::to_string(v));
            seen[h] = 1;
        }
    }
}

FaceSet trace_faces(const Graph& g, const SignedRotationSystem& srs) {
    validate_rotation(g, srs);
    Tracer t(g, srs);
    const uint32_t m = g.num_edges();
    std::vector<char> used(4 * m, 0);
    FaceSet out;
    for (uint32_t s0 = 0; s0 < 4 * m; ++s0) {
        if (used[s0]) continue;
        FaceWalk w;
        uint32_t s = s0;
        while (true) {
            if (used[s]) throw std::logic_error("trace_faces: orbit collision");
            used[s] = 1;
            w.half.push_back(s >> 1);
            w.dir.push_back((s & 1) ? -1 : 1);
            s = t.next(s);
            if (s == s0) break;
        }
        // retire the reverse tracing so each face is reported once
        for (size_t k = 0; k < w.half.size(); ++k) {
            uint32_t ms = t.mirror((w.half[k] << 1) | (w.dir[k] < 0 ? 1u : 0u));
            if (used[ms]) throw std::logic_error("trace_faces: face equals its own mirror");
            used[ms] = 1;
        }
        out.faces.push_back(std::move(w));
    }
    size_t total = 0;
    for (const auto& f : out.faces) total += f.length();
    if (total != 2ull * m) throw std::logic_error("trace_faces: boundary side count off");
    return out;
}

int64_t euler_characteristic(const Graph& g, const FaceSet& faces) {
    return static_cast<int64_t>(g.num_nodes()) - g.num_edges() +
           static_cast<int64_t>(faces.faces.size());
}

std::vector<uint32_t> face_nodes(const Graph& g, const FaceWalk& w) {
    std::vector<uint32_t> out;
    for (uint32_t h : w.half) {
        out.push_back(g.edge(h >> 1).u);
        out.push_back(g.edge(h >> 1).v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_even_face_projective(const SignedGraph& sg, const SignedRotationSystem& srs) {
    const Graph& g = sg.graph;
    const uint32_t m = g.num_edges();
    if (sg.sign.size() != m) throw std::invalid_argument("signed graph: sign size mismatch");
    validate_rotation(g, srs);
    if (m == 0 || !connected_graph(g)) return false;
    FaceSet fs = trace_faces(g, srs);
    if (euler_characteristic(g, fs) != 1) return false;
    for (const FaceWalk& w : fs.faces) {
        if (!face_is_cycle(g, w)) return false;
        int par = 0;
        for (uint32_t h : w.half) par ^= sg.sign[h >> 1] ? 1 : 0;
        if (par) return false;
    }
    // the embedding signature must be switching-equivalent to Sigma: their
    // difference has to vanish on every cycle
    std::vector<char> diff(m);
    for (uint32_t e = 0; e < m; ++e)
        diff[e] = (srs.edge_sign[e] < 0) != (sg.sign[e] != 0) ? 1 : 0;
    return is_balanced(SignedGraph{g, diff}).balanced;
}

bool two_sidedness(const Graph& g, const SignedRotationSystem& srs,
                   const std::vector<uint32_t>& cycle) {
    validate_rotation(g, srs);
    if (cycle.empty()) throw std::invalid_argument("two_sidedness: empty cycle");
    std::vector<uint32_t> ids = cycle;
    std::sort(ids.begin(), ids.end());
    if (std::unique(ids.begin(), ids.end()) != ids.end() || ids.back() >= g.num_edges())
        throw std::invalid_argument("two_sidedness: bad edge list");
    std::map<uint32_t, uint32_t> deg;
    for (uint32_t e : ids) {
        ++deg[g.edge(e).u];
        ++deg[g.edge(e).v];
    }
    for (const auto& [v, d] : deg)
        if (d != 2) throw std::invalid_argument("two_sidedness: support is not a cycle");
    std::map<uint32_t, std::vector<std::pair<uint32_t, uint32_t>>> adj;
    for (uint32_t e : ids) {
        adj[g.edge(e).u].push_back({e, g.edge(e).v});
        adj[g.edge(e).v].push_back({e, g.edge(e).u});
    }
    std::map<uint32_t, char> vis;
    std::vector<uint32_t> stack{deg.begin()->first};
    vis[stack[0]] = 1;
    while (!stack.empty()) {
        uint32_t v = stack.back();
        stack.pop_back();
        for (const auto& [e, w] : adj[v])
            if (!vis[w]) {
                vis[w] = 1;
                stack.push_back(w);
            }
    }
    if (vis.size() != deg.size()) throw std::invalid_argument("two_sidedness: support is not connected");
    int prod = 1;
    for (uint32_t e : ids) prod *= srs.edge_sign[e];
    return prod > 0;
}

namespace {

struct EmbedSearch {
    static constexpr uint32_t NONE = UINT32_MAX;

    const SignedGraph& sg;
    const Graph& g;
    const SchemeFilter& accept;
    uint32_t n, m, target;
    std::vector<int8_t> lambda;
    std::vector<std::vector<uint32_t>> half_at;
    std::vector<uint32_t> order;
    uint32_t canon = NONE;  // node whose rotation absorbs the global reflection

    std::vector<std::vector<uint32_t>> rot;
    std::vector<uint32_t> pos;
    std::vector<char> assigned;
    std::vector<uint32_t> closed_at;  // depth stamp per state
    uint32_t closed_states = 0, closed_faces = 0;
    uint32_t min_face_states = 4;
    std::optional<SignedRotationSystem> found;

    EmbedSearch(const SignedGraph& sg_, const SchemeFilter& accept_)
        : sg(sg_), g(sg_.graph), accept(accept_) {
        n = g.num_nodes();
        m = g.num_edges();
        target = m - n + 1;
        half_at.resize(n);
        for (uint32_t e = 0; e < m; ++e) {
            half_at[g.edge(e).u].push_back(2 * e);
            half_at[g.edge(e).v].push_back(2 * e + 1);
        }
        // spanning-tree BFS fixes both the assignment order and the
        // signature: tree edges +1, a co-tree sign is -1 exactly when its
        // fundamental cycle is Sigma-odd. Any valid scheme is
        // switching-equivalent to one with this signature.
        lambda.assign(m, 0);
        std::vector<int> par(n, -1);
        std::queue<uint32_t> q;
        par[0] = 0;
        q.push(0);
        while (!q.empty()) {
            uint32_t v = q.front();
            q.pop();
            order.push_back(v);
            for (const auto& [e, w] : g.incident(v))
                if (par[w] < 0) {
                    par[w] = par[v] ^ (sg.sign[e] ? 1 : 0);
                    lambda[e] = 1;
                    q.push(w);
                }
        }
        for (uint32_t e = 0; e < m; ++e)
            if (lambda[e] == 0) {
                int odd = par[g.edge(e).u] ^ par[g.edge(e).v] ^ (sg.sign[e] ? 1 : 0);
                lambda[e] = odd ? -1 : 1;
            }
        // Assignment order: maximum cardinality from a max-degree node, so
        // orbits close (and prune) at the shallowest possible depth. The
        // spanning tree above is independent of this order.
        order.clear();
        {
            std::vector<uint32_t> adjcnt(n, 0);
            std::vector<char> done(n, 0);
            uint32_t pick = 0;
            for (uint32_t v = 1; v < n; ++v)
                if (g.degree(v) > g.degree(pick)) pick = v;
            for (uint32_t step = 0; step < n; ++step) {
                order.push_back(pick);
                done[pick] = 1;
                for (const auto& [e, w] : g.incident(pick)) ++adjcnt[w];
                uint32_t best = NONE;
                for (uint32_t v = 0; v < n; ++v) {
                    if (done[v]) continue;
                    if (best == NONE || adjcnt[v] > adjcnt[best] ||
                        (adjcnt[v] == adjcnt[best] && g.degree(v) > g.degree(best)))
                        best = v;
                }
                pick = best;
            }
        }
        for (uint32_t v : order)
            if (g.degree(v) >= 3) {
                canon = v;
                break;
            }
        rot.resize(n);
        pos.assign(2 * m, NONE);
        assigned.assign(n, 0);
        closed_at.assign(4 * m, NONE);
        // Shortest possible face: a digon needs parallel edges, a triangle
        // walk needs a Sigma-even triangle (impossible all-odd), otherwise 4.
        std::vector<std::pair<uint32_t, uint32_t>> pairs;
        for (uint32_t e = 0; e < m; ++e)
            pairs.push_back({std::min(g.edge(e).u, g.edge(e).v),
                             std::max(g.edge(e).u, g.edge(e).v)});
        std::sort(pairs.begin(), pairs.end());
        const bool parallel = std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end();
        bool all_odd = true;
        for (uint32_t e = 0; e < m; ++e)
            if (!sg.sign[e]) all_odd = false;
        min_face_states = parallel ? 4 : (all_odd ? 8 : 6);
    }

    uint32_t next_state(uint32_t s) const {
        const uint32_t h = s >> 1, h2 = h ^ 1u;
        const int d2 = ((s & 1) ? -1 : 1) * lambda[h >> 1];
        const auto& r = rot[end_node(g, h2)];
        const uint32_t k = static_cast<uint32_t>(r.size());
        const uint32_t i = pos[h2];
        const uint32_t h3 = r[d2 > 0 ? (i + 1) % k : (i + k - 1) % k];
        return (h3 << 1) | (d2 < 0 ? 1u : 0u);
    }

    uint32_t mirror_state(uint32_t s) const {
        const uint32_t h = s >> 1;
        const int dm = -((s & 1) ? -1 : 1) * lambda[h >> 1];
        return ((h ^ 1u) << 1) | (dm < 0 ? 1u : 0u);
    }

    // Orbit walk parity plus the simple-cycle support test (uniform edge
    // multiplicity 1 or 2, every support node of degree 2), map-free.
    bool orbit_is_face(const std::vector<uint32_t>& orbit) const {
        int par = 0;
        std::vector<uint32_t> eids;
        eids.reserve(orbit.size());
        for (uint32_t t : orbit) {
            const uint32_t e = (t >> 1) >> 1;
            par ^= sg.sign[e] ? 1 : 0;
            eids.push_back(e);
        }
        if (par) return false;
        std::sort(eids.begin(), eids.end());
        size_t mult = 0;
        std::vector<uint32_t> ends;
        for (size_t i = 0; i < eids.size();) {
            size_t j = i;
            while (j < eids.size() && eids[j] == eids[i]) ++j;
            if (mult == 0) mult = j - i;
            if (j - i != mult) return false;
            ends.push_back(g.edge(eids[i]).u);
            ends.push_back(g.edge(eids[i]).v);
            i = j;
        }
        if (mult != 1 && mult != 2) return false;
        std::sort(ends.begin(), ends.end());
        for (size_t i = 0; i < ends.size(); i += 2)
            if (i + 1 >= ends.size() || ends[i] != ends[i + 1] ||
                (i + 2 < ends.size() && ends[i + 2] == ends[i]))
                return false;
        return true;
    }

    // Close every orbit that became fully traceable; reject invalid faces
    // and face-count overshoots. Marks are recorded for the caller to undo.
    // Only orbits through `vnew` can close: every other orbit had all its
    // transition nodes assigned at an earlier depth and was handled then.
    bool close_scan(uint32_t depth, uint32_t vnew, std::vector<uint32_t>& marks,
                    uint32_t& faces_added) {
        for (uint32_t x : half_at[vnew]) {
            for (uint32_t d = 0; d < 2; ++d) {
                const uint32_t s0 = ((x ^ 1u) << 1) | d;  // transitions at vnew
                if (closed_at[s0] != NONE) continue;
                std::vector<uint32_t> orbit;
                uint32_t s = s0;
                bool closes = true;
                while (true) {
                    if (!assigned[end_node(g, (s >> 1) ^ 1u)]) {
                        closes = false;
                        break;
                    }
                    orbit.push_back(s);
                    s = next_state(s);
                    if (s == s0) break;
                    if (closed_at[s] != NONE || orbit.size() > 4ull * m)
                        throw std::logic_error("embedding search: orbit collision");
                }
                if (!closes) continue;
                if (!orbit_is_face(orbit)) return false;
                for (uint32_t t : orbit) {
                    uint32_t mt = mirror_state(t);
                    if (std::find(orbit.begin(), orbit.end(), mt) != orbit.end()) return false;
                    if (closed_at[mt] != NONE)
                        throw std::logic_error("embedding search: mirror pairing broken");
                }
                for (uint32_t t : orbit) {
                    closed_at[t] = depth;
                    marks.push_back(t);
                    uint32_t mt = mirror_state(t);
                    closed_at[mt] = depth;
                    marks.push_back(mt);
                }
                closed_states += 2 * static_cast<uint32_t>(orbit.size());
                ++closed_faces;
                ++faces_added;
                if (closed_faces > target) return false;
            }
        }
        if (closed_faces == target && closed_states < 4 * m) return false;
        // each future face consumes at least min_face_states states
        if (closed_faces + (4 * m - closed_states) / min_face_states < target) return false;
        return true;
    }

    bool finish() {
        if (closed_states != 4 * m || closed_faces != target)
            throw std::logic_error("embedding search: incomplete closure");
        SignedRotationSystem cand{rot, lambda};
        if (!is_even_face_projective(sg, cand))
            throw std::logic_error("embedding search: candidate fails recheck");
        if (accept && !accept(g, cand, trace_faces(g, cand))) return false;
        found = cand;
        return true;
    }

    bool try_candidate(uint32_t k, uint32_t v) {
        for (uint32_t i = 0; i < rot[v].size(); ++i) pos[rot[v][i]] = i;
        assigned[v] = 1;
        std::vector<uint32_t> marks;
        uint32_t faces_added = 0;
        bool ok = close_scan(k, v, marks, faces_added) && dfs(k + 1);
        if (!ok) {
            for (uint32_t s : marks) closed_at[s] = NONE;
            closed_states -= static_cast<uint32_t>(marks.size());
            closed_faces -= faces_added;
            assigned[v] = 0;
        }
        return ok;
    }

    bool dfs(uint32_t k) {
        if (k == n) return finish();
        const uint32_t v = order[k];
        const auto& base = half_at[v];
        std::vector<uint32_t> tail(base.begin() + 1, base.end());
        do {
            // a global reflection reverses every rotation; pinning one
            // high-degree node to tail.front() < tail.back() halves the space
            if (v == canon && tail.size() >= 2 && tail.front() > tail.back()) continue;
            rot[v].assign(1, base[0]);
            rot[v].insert(rot[v].end(), tail.begin(), tail.end());
            if (try_candidate(k, v)) return true;
        } while (std::next_permutation(tail.begin(), tail.end()));
        return false;
    }
};

}  // namespace

std::optional<SignedRotationSystem> find_even_face_embedding_if(const SignedGraph& sg,
                                                                const SchemeFilter& accept,
                                                                uint32_t max_edges) {
    const Graph& g = sg.graph;
    if (sg.sign.size() != g.num_edges()) throw std::invalid_argument("signed graph: sign size mismatch");
    if (g.num_edges() > max_edges)
        throw BudgetError("even-face embedding search: edge budget exceeded");
    if (!connected_graph(g)) throw std::invalid_argument("embedding search: graph must be connected");
    if (g.num_edges() < g.num_nodes()) return std::nullopt;  // chi = 1 needs |E| >= |V|
    for (uint32_t v = 0; v < g.num_nodes(); ++v)
        if (g.degree(v) < 2) return std::nullopt;  // face supports are cycles
    EmbedSearch es(sg, accept);
    es.dfs(0);
    return es.found;
}

std::optional<SignedRotationSystem> find_even_face_embedding(const SignedGraph& sg,
                                                             uint32_t max_edges) {
    return find_even_face_embedding_if(sg, SchemeFilter{}, max_edges);
}

OrientedDual build_dual(const Graph& g, const SignedRotationSystem& srs) {
    if (bipartition(g).bipartite) throw std::logic_error("build_dual: graph is bipartite");
    if (!is_even_face_projective(SignedGraph::all_odd(g), srs))
        throw std::logic_error("build_dual: scheme is not even-face projective");
    const uint32_t n = g.num_nodes(), m = g.num_edges();
    // switch the signature to all -1 (possible since it is equivalent to
    // plain parity): 2-color by the sign pattern, reverse rotations on one
    // class. Faces survive switching, directions become alternating.
    std::vector<char> col(n, 0), vis(n, 0);
    std::vector<uint32_t> stack{0};
    vis[0] = 1;
    while (!stack.empty()) {
        uint32_t v = stack.back();
        stack.pop_back();
        for (const auto& [e, w] : g.incident(v)) {
            char want = srs.edge_sign[e] > 0 ? 1 : 0;
            if (!vis[w]) {
                vis[w] = 1;
                col[w] = col[v] ^ want;
                stack.push_back(w);
            } else if ((col[v] ^ col[w]) != want) {
                throw std::logic_error("build_dual: switching class mismatch");
            }
        }
    }
    SignedRotationSystem flat;
    flat.edge_sign.assign(m, -1);
    flat.rotation = srs.rotation;
    for (uint32_t v = 0; v < n; ++v)
        if (col[v]) std::reverse(flat.rotation[v].begin(), flat.rotation[v].end());
    FaceSet fs = trace_faces(g, flat);
    const uint32_t F = static_cast<uint32_t>(fs.faces.size());
    if (static_cast<int64_t>(n) != static_cast<int64_t>(m) + 1 - F)
        throw std::logic_error("build_dual: Euler identity violated");
    OrientedDual dual;
    dual.num_faces = F;
    dual.arcs.assign(m, {UINT32_MAX, UINT32_MAX});
    dual.ring.resize(F);
    for (uint32_t f = 0; f < F; ++f) {
        const FaceWalk& w = fs.faces[f];
        for (size_t k = 0; k < w.length(); ++k) {
            const uint32_t e = w.half[k] >> 1;
            dual.ring[f].push_back({e, w.dir[k]});
            auto& slot = w.dir[k] > 0 ? dual.arcs[e].first : dual.arcs[e].second;
            if (slot != UINT32_MAX)
                throw std::logic_error("build_dual: edge traversed twice in one direction");
            slot = f;
        }
        const size_t len = dual.ring[f].size();
        if (len % 2 != 0) throw std::logic_error("build_dual: odd ring length");
        for (size_t k = 0; k < len; ++k)
            if (dual.ring[f][k].second == dual.ring[f][(k + 1) % len].second)
                throw std::logic_error("build_dual: ring fails to alternate");
    }
    for (uint32_t e = 0; e < m; ++e)
        if (dual.arcs[e].first == UINT32_MAX || dual.arcs[e].second == UINT32_MAX)
            throw std::logic_error("build_dual: uncovered edge side");
    return dual;
}

std::string write_embedding_text(const SignedRotationSystem& srs) {
    std::ostringstream out;
    for (uint32_t v = 0; v < srs.rotation.size(); ++v) {
        out << "r " << v;
        for (uint32_t h : srs.rotation[v]) out << ' ' << (h >> 1) << ':' << (h & 1);
        out << '\n';
    }
    for (uint32_t e = 0; e < srs.edge_sign.size(); ++e)
        out << "s " << e << ' ' << (srs.edge_sign[e] > 0 ? '+' : '-') << '\n';
    return out.str();
}

SignedRotationSystem read_embedding_text(std::istream& in, const Graph& g) {
    SignedRotationSystem srs;
    srs.rotation.assign(g.num_nodes(), {});
    srs.edge_sign.assign(g.num_edges(), 0);
    uint32_t rseen = 0, sseen = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag, tok;
        ls >> tag;
        if (tag == "r") {
            if (sseen > 0) throw FormatError("embedding: rotation line after sign line");
            if (!(ls >> tok) || parse_u32(tok) != rseen)
                throw FormatError("embedding: rotation lines must cover nodes in order");
            if (rseen >= g.num_nodes()) throw FormatError("embedding: too many rotation lines");
            while (ls >> tok) {
                auto colon = tok.find(':');
                if (colon == std::string::npos) throw FormatError("embedding: bad edge-end token");
                uint32_t e = parse_u32(tok.substr(0, colon));
                uint32_t b = parse_u32(tok.substr(colon + 1));
                if (e >= g.num_edges() || b > 1) throw FormatError("embedding: edge-end out of range");
                srs.rotation[rseen].push_back(2 * e + b);
            }
            ++rseen;
        } else if (tag == "s") {
            if (rseen != g.num_nodes()) throw FormatError("embedding: sign line before all rotations");
            if (!(ls >> tok) || parse_u32(tok) != sseen || sseen >= g.num_edges())
                throw FormatError("embedding: sign lines must cover edges in order");
            std::string sign;
            if (!(ls >> sign) || (sign != "+" && sign != "-"))
                throw FormatError("embedding: sign must be + or -");
            if (ls >> tok) throw FormatError("embedding: trailing tokens on sign line");
            srs.edge_sign[sseen] = sign == "+" ? 1 : -1;
            ++sseen;
        } else {
            throw FormatError("embedding: unknown line '" + line + "'");
        }
    }
    if (rseen != g.num_nodes() || sseen != g.num_edges())
        throw FormatError("embedding: incomplete description");
    validate_rotation(g, srs);
    return srs;
}

SignedRotationSystem read_embedding_file(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open embedding file: " + path);
    return read_embedding_text(in, g);
}

}  // namespace stabef
