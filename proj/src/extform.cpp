#include "stabef/extform.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "stabef/linalg.hpp"

#include "json.hpp"

namespace stabef {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

size_t parse_count(const std::string& tok) {
    if (tok.empty() || tok.size() > 8) throw FormatError("bad count: " + tok);
    size_t n = 0;
    for (char c : tok) {
        if (c < '0' || c > '9') throw FormatError("bad count: " + tok);
        n = n * 10 + static_cast<size_t>(c - '0');
    }
    return n;
}

// Rows must be canonical: nonzero coefficients, strictly increasing vars.
void check_row(const LinRow& row, size_t num_vars, const char* what) {
    uint32_t prev = 0;
    bool first = true;
    for (const auto& t : row.terms) {
        if (t.var >= num_vars) throw FormatError(std::string(what) + ": variable out of range");
        if (!first && t.var <= prev) throw FormatError(std::string(what) + ": terms out of order");
        if (t.coeff == 0) throw FormatError(std::string(what) + ": zero coefficient");
        prev = t.var;
        first = false;
    }
}

LinRow remap_row(const LinRow& row, const std::vector<uint32_t>& var_map) {
    std::map<uint32_t, Rational> acc;
    for (const auto& t : row.terms) acc[var_map[t.var]] += t.coeff;
    LinRow out;
    out.rhs = row.rhs;
    for (auto& [v, c] : acc)
        if (c != 0) out.terms.push_back({v, c});
    return out;
}

}  // namespace

void ExtForm::ensure_index() const {
    if (index_valid_) return;
    index_.clear();
    for (uint32_t i = 0; i < vars.size(); ++i) {
        if (!index_.emplace(vars[i], i).second)
            throw std::logic_error("duplicate variable name: " + vars[i]);
    }
    index_valid_ = true;
}

uint32_t ExtForm::var_index(const std::string& name) const {
    ensure_index();
    auto it = index_.find(name);
    if (it == index_.end()) throw std::logic_error("unknown variable: " + name);
    return it->second;
}

std::optional<uint32_t> ExtForm::find_var(const std::string& name) const {
    ensure_index();
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

uint32_t ExtForm::add_var(const std::string& name) {
    ensure_index();
    if (index_.count(name)) throw std::logic_error("duplicate variable name: " + name);
    vars.push_back(name);
    index_.emplace(name, static_cast<uint32_t>(vars.size() - 1));
    return static_cast<uint32_t>(vars.size() - 1);
}

LinRow ExtForm::row(const std::vector<std::pair<std::string, Rational>>& terms,
                    const Rational& rhs) const {
    std::map<uint32_t, Rational> acc;
    for (const auto& [name, coeff] : terms) acc[var_index(name)] += coeff;
    LinRow out;
    out.rhs = rhs;
    for (auto& [v, c] : acc)
        if (c != 0) out.terms.push_back({v, c});
    return out;
}

void ExtForm::add_ineq(const std::vector<std::pair<std::string, Rational>>& terms,
                       const Rational& rhs) {
    ineqs.push_back(row(terms, rhs));
}

void ExtForm::add_eq(const std::vector<std::pair<std::string, Rational>>& terms,
                     const Rational& rhs) {
    eqs.push_back(row(terms, rhs));
}

ExtForm balas_union(const std::vector<ExtForm>& forms, UnionMode mode) {
    (void)mode;  // the algebra is identical; the mode names the caller's exactness premise
    if (forms.empty()) throw std::invalid_argument("balas_union: empty union");
    if (forms.size() == 1) return forms[0];
    const auto& f0 = forms[0];
    for (const auto& f : forms) {
        if (f.num_original != f0.num_original)
            throw std::invalid_argument("balas_union: original spaces differ");
        for (uint32_t i = 0; i < f.num_original; ++i)
            if (f.vars[i] != f0.vars[i])
                throw std::invalid_argument("balas_union: original names differ");
    }

    ExtForm out;
    for (uint32_t i = 0; i < f0.num_original; ++i) out.add_var(f0.vars[i]);
    out.num_original = f0.num_original;

    std::vector<std::vector<uint32_t>> var_map(forms.size());
    std::vector<uint32_t> lam(forms.size());
    for (size_t i = 0; i < forms.size(); ++i) {
        std::string prefix = "u" + std::to_string(i) + ".";
        for (const auto& name : forms[i].vars)
            var_map[i].push_back(out.add_var(prefix + name));
        lam[i] = out.add_var(prefix + "lam");
    }

    // Branch rows, homogenized: a.x <= b becomes a.x_i - b*lam_i <= 0.
    for (size_t i = 0; i < forms.size(); ++i) {
        for (const auto& r : forms[i].ineqs) {
            LinRow h = remap_row(r, var_map[i]);
            if (r.rhs != 0) {
                h.terms.push_back({lam[i], -r.rhs});
                std::sort(h.terms.begin(), h.terms.end(),
                          [](const LinTerm& a, const LinTerm& b) { return a.var < b.var; });
            }
            h.rhs = 0;
            out.ineqs.push_back(std::move(h));
        }
        out.ineqs.push_back({{{lam[i], Rational(-1)}}, Rational(0)});
    }
    for (size_t i = 0; i < forms.size(); ++i) {
        for (const auto& r : forms[i].eqs) {
            LinRow h = remap_row(r, var_map[i]);
            if (r.rhs != 0) {
                h.terms.push_back({lam[i], -r.rhs});
                std::sort(h.terms.begin(), h.terms.end(),
                          [](const LinTerm& a, const LinTerm& b) { return a.var < b.var; });
            }
            h.rhs = 0;
            out.eqs.push_back(std::move(h));
        }
    }
    {
        LinRow conv;
        for (size_t i = 0; i < forms.size(); ++i) conv.terms.push_back({lam[i], Rational(1)});
        std::sort(conv.terms.begin(), conv.terms.end(),
                  [](const LinTerm& a, const LinTerm& b) { return a.var < b.var; });
        conv.rhs = 1;
        out.eqs.push_back(std::move(conv));
    }
    for (uint32_t v = 0; v < out.num_original; ++v) {
        LinRow link;
        link.terms.push_back({v, Rational(1)});
        for (size_t i = 0; i < forms.size(); ++i)
            link.terms.push_back({var_map[i][v], Rational(-1)});
        std::sort(link.terms.begin(), link.terms.end(),
                  [](const LinTerm& a, const LinTerm& b) { return a.var < b.var; });
        link.rhs = 0;
        out.eqs.push_back(std::move(link));
    }
    return out;
}

ExtForm glue_shared(const std::vector<ExtForm>& forms) {
    if (forms.empty()) throw std::invalid_argument("glue_shared: no forms");
    // A name may not be original in one form and auxiliary in another.
    std::set<std::string> originals, auxiliaries;
    for (const auto& f : forms) {
        for (uint32_t i = 0; i < f.vars.size(); ++i)
            (f.is_original(i) ? originals : auxiliaries).insert(f.vars[i]);
    }
    for (const auto& name : originals)
        if (auxiliaries.count(name))
            throw std::invalid_argument("glue_shared: " + name + " is original and auxiliary");

    ExtForm out;
    for (const auto& f : forms)
        for (uint32_t i = 0; i < f.num_original; ++i)
            if (!out.find_var(f.vars[i])) out.add_var(f.vars[i]);
    out.num_original = static_cast<uint32_t>(out.vars.size());

    std::vector<std::vector<uint32_t>> var_map(forms.size());
    for (size_t i = 0; i < forms.size(); ++i) {
        const auto& f = forms[i];
        std::string prefix = "g" + std::to_string(i) + ".";
        for (uint32_t v = 0; v < f.vars.size(); ++v) {
            if (f.is_original(v))
                var_map[i].push_back(out.var_index(f.vars[v]));
            else
                var_map[i].push_back(out.add_var(prefix + f.vars[v]));
        }
    }
    for (size_t i = 0; i < forms.size(); ++i)
        for (const auto& r : forms[i].ineqs) out.ineqs.push_back(remap_row(r, var_map[i]));
    for (size_t i = 0; i < forms.size(); ++i)
        for (const auto& r : forms[i].eqs) out.eqs.push_back(remap_row(r, var_map[i]));
    return out;
}

ExtForm affine_image(const ExtForm& form, const AffineMap& map) {
    ExtForm out;
    for (const auto& [name, expr] : map) {
        (void)expr;
        out.add_var(name);
    }
    out.num_original = static_cast<uint32_t>(out.vars.size());
    std::vector<uint32_t> var_map;
    for (const auto& name : form.vars) var_map.push_back(out.add_var(name));

    for (const auto& r : form.ineqs) out.ineqs.push_back(remap_row(r, var_map));
    for (const auto& r : form.eqs) out.eqs.push_back(remap_row(r, var_map));
    for (uint32_t i = 0; i < out.num_original; ++i) {
        const auto& [name, expr] = map[i];
        (void)name;
        std::vector<std::pair<std::string, Rational>> terms;
        terms.emplace_back(out.vars[i], Rational(1));
        for (const auto& [src, coeff] : expr.terms) {
            uint32_t sv = form.var_index(src);
            if (!form.is_original(sv))
                throw std::invalid_argument("affine_image: source " + src + " is not original");
            terms.emplace_back(src, -coeff);
        }
        out.eqs.push_back(out.row(terms, expr.constant));
    }
    return out;
}

ExtForm affine_preimage(const ExtForm& form, const AffineMap& map, bool require_injective) {
    // Every old original must be mapped exactly once.
    std::vector<int> mapped(form.num_original, -1);
    for (size_t i = 0; i < map.size(); ++i) {
        uint32_t v = form.var_index(map[i].first);
        if (!form.is_original(v))
            throw std::invalid_argument("affine_preimage: " + map[i].first + " is not original");
        if (mapped[v] != -1)
            throw std::invalid_argument("affine_preimage: " + map[i].first + " mapped twice");
        mapped[v] = static_cast<int>(i);
    }
    for (uint32_t v = 0; v < form.num_original; ++v)
        if (mapped[v] == -1)
            throw std::invalid_argument("affine_preimage: " + form.vars[v] + " not mapped");

    ExtForm out;
    for (const auto& [old_name, expr] : map) {
        (void)old_name;
        for (const auto& [nv, c] : expr.terms) {
            (void)c;
            if (!out.find_var(nv)) out.add_var(nv);
        }
    }
    out.num_original = static_cast<uint32_t>(out.vars.size());
    if (require_injective) {
        std::vector<std::vector<Rational>> lin(form.num_original,
                                               std::vector<Rational>(out.num_original, Rational(0)));
        for (uint32_t v = 0; v < form.num_original; ++v)
            for (const auto& [nv, c] : map[mapped[v]].second.terms)
                lin[v][out.var_index(nv)] += c;
        if (rational_rank(lin) != out.num_original)
            throw std::invalid_argument("affine_preimage: map is not injective");
    }
    std::vector<uint32_t> aux_map(form.vars.size(), 0);
    for (uint32_t v = form.num_original; v < form.vars.size(); ++v)
        aux_map[v] = out.add_var(form.vars[v]);

    auto substitute = [&](const LinRow& r) {
        std::map<uint32_t, Rational> acc;
        Rational rhs = r.rhs;
        for (const auto& t : r.terms) {
            if (form.is_original(t.var)) {
                const AffineExpr& e = map[mapped[t.var]].second;
                for (const auto& [nv, c] : e.terms) acc[out.var_index(nv)] += t.coeff * c;
                rhs -= t.coeff * e.constant;
            } else {
                acc[aux_map[t.var]] += t.coeff;
            }
        }
        LinRow s;
        s.rhs = rhs;
        for (auto& [v, c] : acc)
            if (c != 0) s.terms.push_back({v, c});
        return s;
    };
    for (const auto& r : form.ineqs) out.ineqs.push_back(substitute(r));
    for (const auto& r : form.eqs) out.eqs.push_back(substitute(r));
    return out;
}

ExtForm intersect_box(const ExtForm& form, const Rational& lo, const Rational& hi) {
    ExtForm out = form;
    for (uint32_t v = 0; v < out.num_original; ++v) {
        out.ineqs.push_back({{{v, Rational(-1)}}, -lo});
        out.ineqs.push_back({{{v, Rational(1)}}, hi});
    }
    return out;
}

ExtForm fix_variables(const ExtForm& form,
                      const std::vector<std::pair<std::string, Rational>>& values) {
    ExtForm out = form;
    for (const auto& [name, val] : values)
        out.eqs.push_back({{{out.var_index(name), Rational(1)}}, val});
    return out;
}

ExtForm tu_stab_system(const Graph& g) {
    ExtForm f;
    for (uint32_t v = 0; v < g.num_nodes(); ++v) f.add_var("x" + std::to_string(v));
    f.num_original = g.num_nodes();
    for (const auto& e : g.edges())
        f.ineqs.push_back(
            {{{std::min(e.u, e.v), Rational(1)}, {std::max(e.u, e.v), Rational(1)}}, Rational(1)});
    for (uint32_t v = 0; v < g.num_nodes(); ++v) {
        f.ineqs.push_back({{{v, Rational(-1)}}, Rational(0)});
        f.ineqs.push_back({{{v, Rational(1)}}, Rational(1)});
    }
    return f;
}

namespace {

// Branch system: the TU edge/box system with `one_nodes` fixed to 1,
// `zero_nodes` fixed to 0. Exactness requires the unfixed part bipartite,
// which we re-check here rather than trust the caller.
ExtForm fixed_tu_branch(const Graph& g, const std::vector<uint32_t>& one_nodes,
                        const std::vector<uint32_t>& zero_nodes) {
    std::vector<char> fixed(g.num_nodes(), 0);
    for (uint32_t v : one_nodes) fixed[v] = 1;
    for (uint32_t v : zero_nodes) fixed[v] = 1;

    std::vector<uint32_t> free_nodes;
    std::vector<uint32_t> node_map(g.num_nodes());
    for (uint32_t v = 0; v < g.num_nodes(); ++v)
        if (!fixed[v]) {
            node_map[v] = static_cast<uint32_t>(free_nodes.size());
            free_nodes.push_back(v);
        }
    std::vector<Edge> free_edges;
    for (const auto& e : g.edges())
        if (!fixed[e.u] && !fixed[e.v]) free_edges.push_back({node_map[e.u], node_map[e.v]});
    Graph rest = build_graph(static_cast<uint32_t>(free_nodes.size()), free_edges);
    if (!bipartition(rest).bipartite)
        throw std::logic_error("fixed_tu_branch: unfixed part is not bipartite");

    ExtForm f = tu_stab_system(g);
    for (uint32_t v : one_nodes) f.eqs.push_back({{{v, Rational(1)}}, Rational(1)});
    for (uint32_t v : zero_nodes) f.eqs.push_back({{{v, Rational(1)}}, Rational(0)});
    return f;
}

}  // namespace

ExtForm oct3_formulation(const Graph& g, const std::vector<uint32_t>& x_set) {
    std::vector<uint32_t> xs = x_set;
    std::sort(xs.begin(), xs.end());
    std::vector<ExtForm> branches;
    for (uint32_t mask = 0; mask < (1u << xs.size()); ++mask) {
        std::vector<uint32_t> ones, zeros;
        std::vector<char> is_one(g.num_nodes(), 0);
        for (size_t i = 0; i < xs.size(); ++i)
            if (mask & (1u << i)) {
                ones.push_back(xs[i]);
                is_one[xs[i]] = 1;
            }
        bool stable = true;
        for (const auto& e : g.edges())
            if (is_one[e.u] && is_one[e.v]) stable = false;
        if (!stable) continue;
        std::set<uint32_t> zero_set;
        for (size_t i = 0; i < xs.size(); ++i)
            if (!(mask & (1u << i))) zero_set.insert(xs[i]);
        for (uint32_t v : ones)
            for (const auto& [eid, w] : g.incident(v)) {
                (void)eid;
                zero_set.insert(w);
            }
        zeros.assign(zero_set.begin(), zero_set.end());
        branches.push_back(fixed_tu_branch(g, ones, zeros));
    }
    return balas_union(branches, UnionMode::Polytopes);
}

ExtForm restricted_stab_bar(const Graph& g1prime, const std::vector<uint32_t>& h_edges) {
    std::set<uint32_t> node_set;
    for (uint32_t eid : h_edges) {
        node_set.insert(g1prime.edge(eid).u);
        node_set.insert(g1prime.edge(eid).v);
    }
    std::vector<uint32_t> h_nodes(node_set.begin(), node_set.end());
    if (h_nodes.size() > 20) throw std::invalid_argument("restricted_stab_bar: gadget too large");
    std::vector<char> in_h(g1prime.num_nodes(), 0);
    for (uint32_t v : h_nodes) in_h[v] = 1;
    std::set<uint32_t> h_edge_set(h_edges.begin(), h_edges.end());

    std::vector<ExtForm> branches;
    for (uint32_t mask = 0; mask < (1u << h_nodes.size()); ++mask) {
        std::vector<char> val(g1prime.num_nodes(), 0);
        for (size_t i = 0; i < h_nodes.size(); ++i)
            if (mask & (1u << i)) val[h_nodes[i]] = 1;
        // Stability over all induced edges; slack count over gadget edges only.
        bool stable = true;
        uint32_t slack = 0;
        for (uint32_t eid = 0; eid < g1prime.num_edges(); ++eid) {
            const Edge& e = g1prime.edge(eid);
            if (!in_h[e.u] || !in_h[e.v]) continue;
            if (val[e.u] && val[e.v]) stable = false;
            if (h_edge_set.count(eid) && !val[e.u] && !val[e.v]) ++slack;
        }
        if (!stable || slack > 1) continue;
        std::vector<uint32_t> ones, zeros;
        std::set<uint32_t> zero_set;
        for (uint32_t v : h_nodes)
            if (val[v])
                ones.push_back(v);
            else
                zero_set.insert(v);
        for (uint32_t v : ones)
            for (const auto& [eid, w] : g1prime.incident(v)) {
                (void)eid;
                if (!val[w]) zero_set.insert(w);
            }
        zeros.assign(zero_set.begin(), zero_set.end());
        branches.push_back(fixed_tu_branch(g1prime, ones, zeros));
    }
    if (branches.empty()) throw std::logic_error("restricted_stab_bar: no admissible assignment");
    return balas_union(branches, UnionMode::Polytopes);
}

ExtForm compose_separation(const ExtForm& ef0, const ExtForm& efbar1,
                           const std::vector<std::string>& shared_boundary,
                           const std::vector<std::string>& gadget_internal) {
    for (const auto& name : shared_boundary)
        for (const ExtForm* f : {&ef0, &efbar1})
            if (!f->is_original(f->var_index(name)))
                throw std::invalid_argument("compose_separation: boundary " + name +
                                            " not original");
    std::set<std::string> internal(gadget_internal.begin(), gadget_internal.end());
    for (const auto& name : shared_boundary)
        if (internal.count(name))
            throw std::invalid_argument("compose_separation: " + name +
                                        " both boundary and internal");
    for (const auto& name : gadget_internal)
        for (const ExtForm* f : {&ef0, &efbar1})
            if (!f->is_original(f->var_index(name)))
                throw std::invalid_argument("compose_separation: internal " + name +
                                            " not original");

    ExtForm glued = glue_shared({ef0, efbar1});

    // Demote gadget-internal variables to auxiliary.
    ExtForm out;
    std::vector<uint32_t> var_map(glued.vars.size(), 0);
    std::vector<uint32_t> order;
    for (uint32_t v = 0; v < glued.num_original; ++v)
        if (!internal.count(glued.vars[v])) order.push_back(v);
    out.num_original = static_cast<uint32_t>(order.size());
    for (uint32_t v = 0; v < glued.num_original; ++v)
        if (internal.count(glued.vars[v])) order.push_back(v);
    for (uint32_t v = glued.num_original; v < glued.vars.size(); ++v) order.push_back(v);
    for (uint32_t pos = 0; pos < order.size(); ++pos) {
        var_map[order[pos]] = pos;
        out.vars.push_back(glued.vars[order[pos]]);
    }
    for (const auto& r : glued.ineqs) out.ineqs.push_back(remap_row(r, var_map));
    for (const auto& r : glued.eqs) out.eqs.push_back(remap_row(r, var_map));
    return out;
}

namespace {

std::string row_to_text(const LinRow& r, const ExtForm& f, char rel) {
    std::ostringstream out;
    if (r.terms.empty()) {
        out << "0";
    } else {
        bool first = true;
        for (const auto& t : r.terms) {
            if (!first) out << " + ";
            out << to_fraction_string(t.coeff) << " " << f.vars[t.var];
            first = false;
        }
    }
    out << (rel == '<' ? " <= " : " = ") << to_fraction_string(r.rhs);
    return out.str();
}

LinRow row_from_tokens(const std::vector<std::string>& tok, const ExtForm& f, char rel) {
    LinRow r;
    const std::string rel_tok = rel == '<' ? "<=" : "=";
    size_t i = 0;
    if (tok.size() >= 2 && tok[0] == "0" && tok[1] == rel_tok) {
        i = 1;
    } else {
        while (true) {
            if (i + 1 >= tok.size()) throw FormatError("row: truncated term");
            auto v = f.find_var(tok[i + 1]);
            if (!v) throw FormatError("row: unknown variable " + tok[i + 1]);
            r.terms.push_back({*v, parse_rational(tok[i])});
            i += 2;
            if (i >= tok.size()) throw FormatError("row: missing relation");
            if (tok[i] == rel_tok) break;
            if (tok[i] != "+") throw FormatError("row: expected '+' or relation");
            ++i;
        }
    }
    if (i + 2 != tok.size()) throw FormatError("row: trailing tokens");
    r.rhs = parse_rational(tok[i + 1]);
    check_row(r, f.vars.size(), "row");
    return r;
}

std::string next_line(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError("extform: unexpected end of input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

std::string write_extform_text(const ExtForm& f) {
    std::ostringstream out;
    out << "EXTFORM\n";
    out << "VARIABLES " << f.vars.size() << "\n";
    for (uint32_t v = 0; v < f.vars.size(); ++v)
        out << f.vars[v] << (f.is_original(v) ? " original" : " aux") << "\n";
    out << "SUBJECT-TO " << f.ineqs.size() << "\n";
    for (const auto& r : f.ineqs) out << row_to_text(r, f, '<') << "\n";
    out << "EQUATIONS " << f.eqs.size() << "\n";
    for (const auto& r : f.eqs) out << row_to_text(r, f, '=') << "\n";
    out << "PROJECTION\n";
    for (uint32_t v = 0; v < f.num_original; ++v) out << (v ? " " : "") << f.vars[v];
    out << "\nEND\n";
    return out.str();
}

ExtForm read_extform_text(std::istream& in) {
    if (next_line(in) != "EXTFORM") throw FormatError("extform: missing header");
    ExtForm f;
    auto header = split_ws(next_line(in));
    if (header.size() != 2 || header[0] != "VARIABLES") throw FormatError("extform: VARIABLES");
    size_t nvars = parse_count(header[1]);
    bool seen_aux = false;
    for (size_t i = 0; i < nvars; ++i) {
        auto tok = split_ws(next_line(in));
        if (tok.size() != 2) throw FormatError("extform: bad variable line");
        if (f.find_var(tok[0])) throw FormatError("extform: duplicate variable " + tok[0]);
        f.add_var(tok[0]);
        if (tok[1] == "original") {
            if (seen_aux) throw FormatError("extform: originals must precede aux");
            ++f.num_original;
        } else if (tok[1] == "aux") {
            seen_aux = true;
        } else {
            throw FormatError("extform: bad variable kind " + tok[1]);
        }
    }
    header = split_ws(next_line(in));
    if (header.size() != 2 || header[0] != "SUBJECT-TO") throw FormatError("extform: SUBJECT-TO");
    size_t nineq = parse_count(header[1]);
    for (size_t i = 0; i < nineq; ++i)
        f.ineqs.push_back(row_from_tokens(split_ws(next_line(in)), f, '<'));
    header = split_ws(next_line(in));
    if (header.size() != 2 || header[0] != "EQUATIONS") throw FormatError("extform: EQUATIONS");
    size_t neq = parse_count(header[1]);
    for (size_t i = 0; i < neq; ++i)
        f.eqs.push_back(row_from_tokens(split_ws(next_line(in)), f, '='));
    if (next_line(in) != "PROJECTION") throw FormatError("extform: PROJECTION");
    auto proj = split_ws(next_line(in));
    if (proj.size() != f.num_original) throw FormatError("extform: projection arity");
    for (uint32_t v = 0; v < f.num_original; ++v)
        if (proj[v] != f.vars[v]) throw FormatError("extform: projection mismatch");
    if (next_line(in) != "END") throw FormatError("extform: missing END");
    std::string rest;
    while (std::getline(in, rest))
        if (!split_ws(rest).empty()) throw FormatError("extform: trailing content");
    return f;
}

ExtForm read_extform_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    return read_extform_text(in);
}

std::string write_extform_json(const ExtForm& f) {
    nlohmann::ordered_json j;
    j["vars"] = nlohmann::ordered_json::array();
    for (uint32_t v = 0; v < f.vars.size(); ++v)
        j["vars"].push_back({{"name", f.vars[v]}, {"original", f.is_original(v)}});
    auto rows_json = [&](const std::vector<LinRow>& rows) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json terms = nlohmann::ordered_json::array();
            for (const auto& t : r.terms)
                terms.push_back({f.vars[t.var], to_fraction_string(t.coeff)});
            arr.push_back({{"terms", terms}, {"rhs", to_fraction_string(r.rhs)}});
        }
        return arr;
    };
    j["ineqs"] = rows_json(f.ineqs);
    j["eqs"] = rows_json(f.eqs);
    return j.dump(2) + "\n";
}

ExtForm read_extform_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("extform json: ") + e.what());
    }
    try {
        ExtForm f;
        bool seen_aux = false;
        for (const auto& v : j.at("vars")) {
            std::string name = v.at("name").get<std::string>();
            if (f.find_var(name)) throw FormatError("extform json: duplicate variable " + name);
            f.add_var(std::move(name));
            if (v.at("original").get<bool>()) {
                if (seen_aux) throw FormatError("extform json: originals must precede aux");
                ++f.num_original;
            } else {
                seen_aux = true;
            }
        }
        auto rows_from = [&](const nlohmann::json& arr) {
            std::vector<LinRow> rows;
            for (const auto& rj : arr) {
                LinRow r;
                for (const auto& tj : rj.at("terms")) {
                    auto v = f.find_var(tj.at(0).get<std::string>());
                    if (!v) throw FormatError("extform json: unknown variable");
                    r.terms.push_back({*v, parse_rational(tj.at(1).get<std::string>())});
                }
                r.rhs = parse_rational(rj.at("rhs").get<std::string>());
                check_row(r, f.vars.size(), "extform json row");
                rows.push_back(std::move(r));
            }
            return rows;
        };
        f.ineqs = rows_from(j.at("ineqs"));
        f.eqs = rows_from(j.at("eqs"));
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("extform json: ") + e.what());
    }
}

}  // namespace stabef
