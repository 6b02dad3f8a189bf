#include "stabef/oracle.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "stabef/circulation.hpp"
#include "stabef/lp.hpp"

namespace stabef {

namespace {

void check_cap(const Graph& g, uint32_t node_cap, const char* who) {
    if (g.num_nodes() > node_cap || g.num_nodes() > 64)
        throw BudgetError(std::string(who) + ": node cap exceeded (" +
                          std::to_string(g.num_nodes()) + " > " +
                          std::to_string(std::min<uint32_t>(node_cap, 64)) + ")");
}

// (earlier endpoint, edge id) pairs per node; every edge shows up exactly
// once, at its larger endpoint.
std::vector<std::vector<std::pair<uint32_t, uint32_t>>> down_edges(const Graph& g) {
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> down(g.num_nodes());
    for (uint32_t e = 0; e < g.num_edges(); ++e) {
        uint32_t u = g.edge(e).u, v = g.edge(e).v;
        down[std::max(u, v)].push_back({std::min(u, v), e});
    }
    return down;
}

std::string vec_to_string(const std::vector<int>& y) {
    std::string s = "(";
    for (size_t i = 0; i < y.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(y[i]);
    }
    return s + ")";
}

}  // namespace

void validate_weighted_instance(const WeightedInstance& wi) {
    if (wi.node_weights.size() != wi.graph.num_nodes())
        throw std::invalid_argument("weighted instance: one weight per node required");
    if (wi.edge_costs.size() != wi.graph.num_edges())
        throw std::invalid_argument("weighted instance: one cost per edge required");
    for (const Rational& c : wi.edge_costs)
        if (c < Rational(0)) throw std::invalid_argument("weighted instance: negative edge cost");
}

Rational alpha(const Graph& g, const std::vector<Rational>& w, uint32_t node_cap) {
    if (w.size() != g.num_nodes())
        throw std::invalid_argument("alpha: one weight per node required");
    check_cap(g, node_cap, "alpha");

    // Only nodes of positive weight matter: dropping the rest from any
    // stable set never lowers its weight. High degree first.
    std::vector<uint32_t> cand;
    for (uint32_t v = 0; v < g.num_nodes(); ++v)
        if (w[v] > Rational(0)) cand.push_back(v);
    std::sort(cand.begin(), cand.end(), [&](uint32_t a, uint32_t b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    const uint32_t k = static_cast<uint32_t>(cand.size());

    std::vector<uint32_t> pos(g.num_nodes(), UINT32_MAX);
    for (uint32_t i = 0; i < k; ++i) pos[cand[i]] = i;
    std::vector<uint64_t> adj(k, 0);
    for (uint32_t e = 0; e < g.num_edges(); ++e) {
        uint32_t pu = pos[g.edge(e).u], pv = pos[g.edge(e).v];
        if (pu == UINT32_MAX || pv == UINT32_MAX) continue;
        adj[pu] |= uint64_t(1) << pv;
        adj[pv] |= uint64_t(1) << pu;
    }
    // suffix[i] bounds anything the candidates from i on can still add
    std::vector<Rational> suffix(k + 1, Rational(0));
    for (uint32_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] + w[cand[i]];

    Rational best(0);  // empty set
    std::function<void(uint32_t, uint64_t, const Rational&)> dfs =
        [&](uint32_t i, uint64_t avail, const Rational& cur) {
            if (cur > best) best = cur;
            if (i == k) return;
            if (!(cur + suffix[i] > best)) return;
            if (avail >> i & 1) dfs(i + 1, avail & ~adj[i], cur + w[cand[i]]);
            dfs(i + 1, avail, cur);
        };
    dfs(0, ~uint64_t(0), Rational(0));
    return best;
}

Rational beta(const Graph& g, const std::vector<Rational>& c, uint32_t node_cap) {
    if (c.size() != g.num_edges())
        throw std::invalid_argument("beta: one cost per edge required");
    for (const Rational& ce : c)
        if (ce < Rational(0)) throw std::invalid_argument("beta: negative edge cost");
    check_cap(g, node_cap, "beta");

    const uint32_t n = g.num_nodes();
    auto down = down_edges(g);
    std::optional<Rational> best;
    std::vector<char> in_s(n, 0);
    // An edge's slack status is settled at its larger endpoint, so the cost
    // grows monotonically along a branch and best-cost pruning is exact.
    std::function<void(uint32_t, const Rational&)> dfs = [&](uint32_t v, const Rational& cur) {
        if (best && !(cur < *best)) return;
        if (v == n) {
            best = cur;
            return;
        }
        Rational add(0);
        for (auto [u, e] : down[v])
            if (!in_s[u]) add += c[e];
        dfs(v + 1, cur + add);
        bool stable = true;
        for (auto [u, e] : down[v])
            if (in_s[u]) {
                stable = false;
                break;
            }
        if (stable) {
            in_s[v] = 1;
            dfs(v + 1, cur);
            in_s[v] = 0;
        }
    };
    dfs(0, Rational(0));
    return *best;
}

bool alpha_beta_check(const Graph& g, const std::vector<Rational>& c, uint32_t node_cap) {
    if (c.size() != g.num_edges())
        throw std::invalid_argument("alpha_beta_check: one cost per edge required");
    std::vector<Rational> w(g.num_nodes(), Rational(0));
    Rational total(0);
    for (uint32_t e = 0; e < g.num_edges(); ++e) {
        w[g.edge(e).u] += c[e];
        w[g.edge(e).v] += c[e];
        total += c[e];
    }
    return alpha(g, w, node_cap) == total - beta(g, c, node_cap);
}

std::optional<Rational> gamma(const Graph& g1p, const std::vector<uint32_t>& h_edges,
                              const std::vector<Rational>& c, const std::vector<uint32_t>& F,
                              uint32_t node_cap) {
    const uint32_t n = g1p.num_nodes(), m = g1p.num_edges();
    if (!bipartition(g1p).bipartite)
        throw std::invalid_argument("gamma: graph with gadget must be bipartite");
    if (c.size() != m) throw std::invalid_argument("gamma: one cost per edge required");
    std::vector<char> is_h(m, 0), in_f(m, 0);
    for (uint32_t e : h_edges) {
        if (e >= m) throw std::invalid_argument("gamma: gadget edge id out of range");
        is_h[e] = 1;
    }
    for (uint32_t e : F) {
        if (e >= m || !is_h[e])
            throw std::invalid_argument("gamma: F must be a subset of the gadget edges");
        in_f[e] = 1;
    }
    for (uint32_t e = 0; e < m; ++e)
        if (!is_h[e] && c[e] < Rational(0))
            throw std::invalid_argument("gamma: negative edge cost");
    check_cap(g1p, node_cap, "gamma");

    auto down = down_edges(g1p);
    std::optional<Rational> best;
    std::vector<char> in_s(n, 0);
    std::function<void(uint32_t, const Rational&)> dfs = [&](uint32_t v, const Rational& cur) {
        if (best && !(cur < *best)) return;
        if (v == n) {
            best = cur;
            return;
        }
        // leave v out: down-edges to excluded ends go slack
        Rational add(0);
        bool ok = true;
        for (auto [u, e] : down[v]) {
            if (!in_s[u]) {
                if (is_h[e]) {
                    if (!in_f[e]) {
                        ok = false;  // slack gadget edge outside F
                        break;
                    }
                } else {
                    add += c[e];
                }
            } else if (in_f[e]) {
                ok = false;  // F-edge went tight
                break;
            }
        }
        if (ok) dfs(v + 1, cur + add);
        // put v in: needs stability and no incident F-edge
        ok = true;
        for (auto [u, e] : down[v]) {
            if (in_s[u] || in_f[e]) {
                ok = false;
                break;
            }
        }
        // up-edges in F also die the moment v joins
        if (ok)
            for (auto [e, u] : g1p.incident(v)) {
                if (in_f[e]) {
                    ok = false;
                    break;
                }
            }
        if (ok) {
            in_s[v] = 1;
            dfs(v + 1, cur);
            in_s[v] = 0;
        }
    };
    dfs(0, Rational(0));
    return best;
}

std::optional<Rational> gamma_lp(const Graph& g1p, const std::vector<uint32_t>& h_edges,
                                 const std::vector<Rational>& c, const std::vector<uint32_t>& F) {
    const uint32_t n = g1p.num_nodes(), m = g1p.num_edges();
    if (!bipartition(g1p).bipartite)
        throw std::invalid_argument("gamma_lp: graph with gadget must be bipartite");
    if (c.size() != m) throw std::invalid_argument("gamma_lp: one cost per edge required");
    std::vector<char> is_h(m, 0), in_f(m, 0);
    for (uint32_t e : h_edges) {
        if (e >= m) throw std::invalid_argument("gamma_lp: gadget edge id out of range");
        is_h[e] = 1;
    }
    for (uint32_t e : F) {
        if (e >= m || !is_h[e])
            throw std::invalid_argument("gamma_lp: F must be a subset of the gadget edges");
        in_f[e] = 1;
    }

    // vars: x_0..x_{n-1}, then y_e = n + e
    LinearProgram lp;
    lp.num_vars = n + m;
    lp.objective.assign(n + m, Rational(0));
    lp.sense = Sense::Min;
    for (uint32_t e = 0; e < m; ++e) {
        if (!is_h[e]) {
            if (c[e] < Rational(0)) throw std::invalid_argument("gamma_lp: negative edge cost");
            lp.objective[n + e] = c[e];
        }
        uint32_t u = g1p.edge(e).u, v = g1p.edge(e).v;
        lp.rows.push_back({{{std::min(u, v), Rational(1)},
                            {std::max(u, v), Rational(1)},
                            {n + e, Rational(1)}},
                           '=',
                           Rational(1)});
        if (is_h[e])
            lp.rows.push_back({{{n + e, Rational(1)}}, '=', Rational(in_f[e] ? 1 : 0)});
        else
            lp.rows.push_back({{{n + e, Rational(1)}}, '>', Rational(0)});
    }
    for (uint32_t v = 0; v < n; ++v)
        lp.rows.push_back({{{v, Rational(1)}}, '>', Rational(0)});

    LpResult r = lp_solve(lp);
    if (r.status == LpStatus::Infeasible) return std::nullopt;
    if (r.status != LpStatus::Optimal) throw std::logic_error("gamma_lp: relaxation unbounded");
    return r.value;
}

std::vector<Rational> edge_induced_lift(const Graph& g, const std::vector<Rational>& w,
                                        uint32_t node_cap) {
    const uint32_t n = g.num_nodes(), m = g.num_edges();
    if (w.size() != n) throw std::invalid_argument("edge_induced_lift: one weight per node required");
    for (uint32_t v = 0; v < n; ++v)
        if (g.degree(v) == 0)
            throw std::invalid_argument("edge_induced_lift: isolated node " + std::to_string(v));

    // min 1^T y  s.t.  y(delta(v)) >= w(v), y >= 0  -- always optimal
    LinearProgram lp;
    lp.num_vars = m;
    lp.objective.assign(m, Rational(1));
    lp.sense = Sense::Min;
    for (uint32_t v = 0; v < n; ++v) {
        LpRow row;
        for (auto [e, u] : g.incident(v)) row.terms.push_back({e, Rational(1)});
        row.rel = '>';
        row.rhs = w[v];
        lp.rows.push_back(std::move(row));
    }
    for (uint32_t e = 0; e < m; ++e) lp.rows.push_back({{{e, Rational(1)}}, '>', Rational(0)});

    LpResult r = lp_solve(lp);
    if (r.status != LpStatus::Optimal)
        throw std::logic_error("edge_induced_lift: cover relaxation must be optimal");

    std::vector<Rational> lifted(n, Rational(0));
    for (uint32_t v = 0; v < n; ++v)
        for (auto [e, u] : g.incident(v)) lifted[v] += r.primal[e];
    for (uint32_t v = 0; v < n; ++v)
        if (lifted[v] < w[v]) throw std::logic_error("edge_induced_lift: lift fell below input weight");
    if (alpha(g, w, node_cap) != alpha(g, lifted, node_cap))
        throw std::logic_error("edge_induced_lift: lift changed the oracle optimum");
    return lifted;
}

std::vector<std::vector<uint32_t>> maximal_stable_sets(const Graph& g, uint32_t node_cap) {
    check_cap(g, node_cap, "maximal_stable_sets");
    const uint32_t n = g.num_nodes();
    std::vector<uint64_t> adj(n, 0);
    for (uint32_t e = 0; e < g.num_edges(); ++e) {
        adj[g.edge(e).u] |= uint64_t(1) << g.edge(e).v;
        adj[g.edge(e).v] |= uint64_t(1) << g.edge(e).u;
    }
    const uint64_t all = n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;

    std::vector<std::vector<uint32_t>> out;
    // cov = S together with everything S dominates; maximal iff cov == all
    std::function<void(uint32_t, uint64_t, uint64_t)> dfs = [&](uint32_t v, uint64_t s,
                                                                uint64_t cov) {
        if (v == n) {
            if (cov == all) {
                std::vector<uint32_t> ids;
                for (uint32_t u = 0; u < n; ++u)
                    if (s >> u & 1) ids.push_back(u);
                out.push_back(std::move(ids));
            }
            return;
        }
        if (!(adj[v] & s)) dfs(v + 1, s | uint64_t(1) << v, cov | uint64_t(1) << v | adj[v]);
        // leaving v out is only viable if v is already dominated or a later
        // neighbour still can
        if ((cov >> v & 1) || (adj[v] >> (v + 1)) != 0) dfs(v + 1, s, cov);
    };
    dfs(0, 0, 0);
    return out;
}

namespace {

uint64_t fnv_mix(uint64_t h, uint64_t x) {
    for (int i = 0; i < 8; ++i) {
        h ^= (x >> (8 * i)) & 0xff;
        h *= 1099511628211ull;
    }
    return h;
}

uint64_t instance_seed(const Graph& g) {
    uint64_t h = 14695981039346656037ull;
    h = fnv_mix(h, g.num_nodes());
    h = fnv_mix(h, g.num_edges());
    for (uint32_t e = 0; e < g.num_edges(); ++e) {
        h = fnv_mix(h, g.edge(e).u);
        h = fnv_mix(h, g.edge(e).v);
    }
    return h;
}

}  // namespace

Verdict ef_equals_stab(const Graph& g, const ExtForm& form, uint32_t trials, uint32_t node_cap) {
    const uint32_t n = g.num_nodes();
    if (form.num_original != n)
        throw std::invalid_argument("ef_equals_stab: form must project to one variable per node");
    for (uint32_t v = 0; v < n; ++v) form.var_index("x" + std::to_string(v));

    Verdict out;
    std::mt19937_64 rng(instance_seed(g));
    for (uint32_t t = 0; t < trials; ++t) {
        std::vector<Rational> w(n);
        std::vector<std::pair<std::string, Rational>> obj;
        for (uint32_t v = 0; v < n; ++v) {
            w[v] = Rational(static_cast<int>(rng() % 16) - 5);  // [-5, 10]
            obj.push_back({"x" + std::to_string(v), w[v]});
        }
        LpResult r = lp_solve(lp_from_extform(form, obj, Sense::Max));
        ++out.trials_run;
        if (r.status == LpStatus::Unbounded) {
            out.failure = "lp-unbounded";
            out.objective = w;
            return out;
        }
        if (r.status == LpStatus::Infeasible) {
            out.failure = "lp-infeasible";
            out.objective = w;
            return out;
        }
        Rational exact = alpha(g, w, node_cap);
        if (r.value != exact) {
            out.failure = "lp-mismatch";
            out.objective = w;
            out.lp_value = r.value;
            out.oracle_value = exact;
            return out;
        }
    }
    for (const auto& S : maximal_stable_sets(g, node_cap)) {
        std::vector<char> in(n, 0);
        for (uint32_t v : S) in[v] = 1;
        std::vector<std::pair<std::string, Rational>> fixed;
        for (uint32_t v = 0; v < n; ++v)
            fixed.push_back({"x" + std::to_string(v), Rational(in[v] ? 1 : 0)});
        if (!feasible_lift(form, fixed)) {
            out.failure = "unliftable-stable-set";
            out.stable_set = S;
            return out;
        }
    }
    out.exact = true;
    return out;
}

bool deletion_projection_check(const Graph& g, uint32_t v0, int box) {
    const uint32_t n = g.num_nodes();
    if (v0 >= n) throw std::invalid_argument("deletion_projection_check: node out of range");
    if (box < 1) throw std::invalid_argument("deletion_projection_check: box must be positive");
    if (n > 10) throw BudgetError("deletion_projection_check: graph too large for box enumeration");

    auto enumerate = [&](uint32_t nodes, const std::vector<std::pair<uint32_t, uint32_t>>& edges,
                         bool project) {
        std::vector<std::vector<int>> pts;
        std::vector<int> x(nodes, -box);
        while (true) {
            bool ok = true;
            for (auto [u, v] : edges)
                if (x[u] + x[v] > 1) {
                    ok = false;
                    break;
                }
            if (ok) {
                std::vector<int> p;
                for (uint32_t v = 0; v < nodes; ++v)
                    if (!project || v != v0) p.push_back(x[v]);
                pts.push_back(std::move(p));
            }
            uint32_t i = 0;
            while (i < nodes && x[i] == box) x[i++] = -box;
            if (i == nodes) break;
            ++x[i];
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        return pts;
    };

    std::vector<std::pair<uint32_t, uint32_t>> full, reduced;
    for (uint32_t e = 0; e < g.num_edges(); ++e) {
        uint32_t u = g.edge(e).u, v = g.edge(e).v;
        full.push_back({u, v});
        if (u == v0 || v == v0) continue;
        reduced.push_back({u > v0 ? u - 1 : u, v > v0 ? v - 1 : v});
    }
    return enumerate(n, full, true) == enumerate(n - 1, reduced, false);
}

LatticeReport slack_lattice_check(const Graph& g, const SignedRotationSystem& scheme, int box) {
    if (box < 1) throw std::invalid_argument("slack_lattice_check: box must be positive");
    LatticeReport rep;
    OrientedDual dual = build_dual(g, scheme);  // validates the scheme
    const uint32_t n = g.num_nodes(), m = g.num_edges();
    std::vector<uint32_t> cyc = shortest_odd_cycle(g);
    std::vector<char> in_x(m, 0);
    for (uint32_t e : cyc) in_x[e] = 1;

    // side A: 0 <= y <= box, conserved around every dual face, odd on the cycle
    std::vector<std::vector<std::pair<uint32_t, int>>> at_edge(m);  // (face, dir)
    std::vector<int> pending(dual.num_faces, 0);
    for (uint32_t f = 0; f < dual.num_faces; ++f)
        for (auto [a, d] : dual.ring[f]) {
            at_edge[a].push_back({f, d});
            ++pending[f];
        }
    std::vector<int> fsum(dual.num_faces, 0);
    std::vector<int> y(m, 0);
    std::vector<std::vector<int>> side_a;
    std::function<void(uint32_t, int)> dfs_a = [&](uint32_t e, int parity) {
        if (e == m) {
            if (parity) side_a.push_back(y);
            return;
        }
        for (int val = 0; val <= box; ++val) {
            y[e] = val;
            bool ok = true;
            for (auto [f, d] : at_edge[e]) {
                fsum[f] += d * val;
                if (--pending[f] == 0 && fsum[f] != 0) ok = false;
            }
            if (ok) dfs_a(e + 1, parity ^ (in_x[e] && (val & 1)));
            for (auto [f, d] : at_edge[e]) {
                fsum[f] -= d * val;
                ++pending[f];
            }
        }
    };
    dfs_a(0, 0);

    // side B: slack vectors of integral x with Mx <= 1 and slack within the box
    uint32_t v0 = UINT32_MAX;
    for (uint32_t e : cyc) v0 = std::min({v0, g.edge(e).u, g.edge(e).v});
    std::vector<uint32_t> order;
    std::vector<char> seen(n, 0);
    order.push_back(v0);
    seen[v0] = 1;
    for (size_t i = 0; i < order.size(); ++i)
        for (auto [e, u] : g.incident(order[i]))
            if (!seen[u]) {
                seen[u] = 1;
                order.push_back(u);
            }
    // around the odd cycle the slack entries alternate into 2 x[v0] - 1
    const int len = static_cast<int>(cyc.size());
    std::vector<int> x(n, 0);
    std::vector<char> assigned(n, 0);
    std::vector<std::vector<int>> side_b;
    std::function<void(uint32_t)> dfs_b = [&](uint32_t idx) {
        if (idx == n) {
            std::vector<int> s(m);
            for (uint32_t e = 0; e < m; ++e) s[e] = 1 - x[g.edge(e).u] - x[g.edge(e).v];
            side_b.push_back(std::move(s));
            return;
        }
        uint32_t v = order[idx];
        // |2 x[v0] - 1| <= box * len pins the root; afterwards each assigned
        // neighbour u forces x[v] into [1 - box - x[u], 1 - x[u]]
        int vlo, vhi;
        if (idx == 0) {
            vlo = -((box * len - 1) / 2);
            vhi = (box * len + 1) / 2;
        } else {
            bool bounded = false;
            vlo = vhi = 0;
            for (auto [e, u] : g.incident(v))
                if (assigned[u]) {
                    int l = 1 - box - x[u], h = 1 - x[u];
                    if (!bounded) {
                        vlo = l;
                        vhi = h;
                        bounded = true;
                    } else {
                        vlo = std::max(vlo, l);
                        vhi = std::min(vhi, h);
                    }
                }
            if (!bounded)
                throw std::logic_error("slack_lattice_check: search order left a node unconstrained");
        }
        for (int val = vlo; val <= vhi; ++val) {
            x[v] = val;
            assigned[v] = 1;
            dfs_b(idx + 1);
            assigned[v] = 0;
        }
    };
    dfs_b(0);
    std::sort(side_b.begin(), side_b.end());
    side_b.erase(std::unique(side_b.begin(), side_b.end()), side_b.end());

    if (side_a != side_b) {
        rep.detail = "lattice sets differ";
        for (const auto& p : side_a)
            if (!std::binary_search(side_b.begin(), side_b.end(), p)) {
                rep.detail = "conserved vector is no slack image: y=" + vec_to_string(p);
                return rep;
            }
        for (const auto& p : side_b)
            if (!std::binary_search(side_a.begin(), side_a.end(), p)) {
                rep.detail = "slack image breaks conservation: y=" + vec_to_string(p);
                return rep;
            }
        return rep;
    }

    // couple the lattice to the compiled system: every member inverts under
    // sigma and (sampled evenly when large) lifts into q_of_g_ef
    ExtForm qf = q_of_g_ef(g, scheme);
    size_t stride = side_a.size() > 128 ? (side_a.size() + 127) / 128 : 1;
    for (size_t i = 0; i < side_a.size(); ++i) {
        std::vector<Rational> yr(m);
        for (uint32_t e = 0; e < m; ++e) yr[e] = Rational(side_a[i][e]);
        auto inv = sigma_invert(g, yr);
        if (!inv) {
            rep.detail = "member not invertible: y=" + vec_to_string(side_a[i]);
            return rep;
        }
        for (const Rational& xv : *inv)
            if (denominator(xv) != 1) {
                rep.detail = "fractional preimage: y=" + vec_to_string(side_a[i]);
                return rep;
            }
        if (i % stride == 0) {
            std::vector<std::pair<std::string, Rational>> fixed;
            for (uint32_t e = 0; e < m; ++e) fixed.push_back({"y" + std::to_string(e), yr[e]});
            if (!feasible_lift(qf, fixed)) {
                rep.detail = "member has no lift: y=" + vec_to_string(side_a[i]);
                return rep;
            }
        }
    }
    rep.ok = true;
    rep.points = static_cast<uint32_t>(side_a.size());
    return rep;
}

}  // namespace stabef
