#include "stabef/lp.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace stabef {

namespace {

using SparseRow = std::vector<LinTerm>;  // sorted by var

Rational sparse_coef(const SparseRow& row, uint32_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const LinTerm& t, uint32_t c) { return t.var < c; });
    if (it != row.end() && it->var == col) return it->coeff;
    return Rational(0);
}

// dst := dst - f * src
void row_axpy(SparseRow& dst, const Rational& f, const SparseRow& src) {
    SparseRow out;
    out.reserve(dst.size() + src.size());
    size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].var < src[j].var)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].var < dst[i].var) {
            out.push_back({src[j].var, -f * src[j].coeff});
            if (out.back().coeff == 0) out.pop_back();
            ++j;
        } else {
            Rational c = dst[i].coeff - f * src[j].coeff;
            if (c != 0) out.push_back({dst[i].var, std::move(c)});
            ++i;
            ++j;
        }
    }
    dst = std::move(out);
}

void verify_primal(const LinearProgram& lp, const std::vector<Rational>& x) {
    for (const auto& row : lp.rows) {
        Rational lhs(0);
        for (const auto& t : row.terms) lhs += t.coeff * x[t.var];
        bool ok = row.rel == '<' ? lhs <= row.rhs : row.rel == '>' ? lhs >= row.rhs
                                                                   : lhs == row.rhs;
        if (!ok) throw std::logic_error("lp: primal verification failed");
    }
}

void verify_dual(const LinearProgram& lp, const std::vector<Rational>& x,
                 const std::vector<Rational>& y, const Rational& value) {
    if (y.size() != lp.rows.size()) throw std::logic_error("lp: dual size");
    Rational primal_val(0);
    for (uint32_t j = 0; j < lp.num_vars; ++j) primal_val += lp.objective[j] * x[j];
    if (primal_val != value) throw std::logic_error("lp: objective value mismatch");
    std::vector<Rational> combo(lp.num_vars, Rational(0));
    Rational dual_val(0);
    for (size_t i = 0; i < lp.rows.size(); ++i) {
        const auto& row = lp.rows[i];
        if (y[i] == 0) continue;
        bool want_nonneg = (lp.sense == Sense::Max) == (row.rel == '<');
        if (row.rel != '=' && (want_nonneg ? y[i] < 0 : y[i] > 0))
            throw std::logic_error("lp: dual sign violation");
        Rational lhs(0);
        for (const auto& t : row.terms) {
            combo[t.var] += y[i] * t.coeff;
            lhs += t.coeff * x[t.var];
        }
        if (lhs != row.rhs) throw std::logic_error("lp: complementary slackness violation");
        dual_val += y[i] * row.rhs;
    }
    for (uint32_t j = 0; j < lp.num_vars; ++j)
        if (combo[j] != lp.objective[j]) throw std::logic_error("lp: dual feasibility violation");
    if (dual_val != value) throw std::logic_error("lp: strong duality violation");
}

void verify_farkas(const LinearProgram& lp, const std::vector<Rational>& f) {
    if (f.size() != lp.rows.size()) throw std::logic_error("lp: farkas size");
    std::vector<Rational> combo(lp.num_vars, Rational(0));
    Rational rhs(0);
    for (size_t i = 0; i < lp.rows.size(); ++i) {
        if (f[i] == 0) continue;
        const auto& row = lp.rows[i];
        if (row.rel == '<' && f[i] < 0) throw std::logic_error("lp: farkas sign violation");
        if (row.rel == '>' && f[i] > 0) throw std::logic_error("lp: farkas sign violation");
        for (const auto& t : row.terms) combo[t.var] += f[i] * t.coeff;
        rhs += f[i] * row.rhs;
    }
    for (uint32_t j = 0; j < lp.num_vars; ++j)
        if (combo[j] != 0) throw std::logic_error("lp: farkas combination nonzero");
    if (!(rhs < 0)) throw std::logic_error("lp: farkas rhs not negative");
}

void verify_ray(const LinearProgram& lp, const std::vector<Rational>& r, Sense sense) {
    for (const auto& row : lp.rows) {
        Rational v(0);
        for (const auto& t : row.terms) v += t.coeff * r[t.var];
        bool ok = row.rel == '<' ? v <= 0 : row.rel == '>' ? v >= 0 : v == 0;
        if (!ok) throw std::logic_error("lp: ray not a recession direction");
    }
    Rational gain(0);
    for (uint32_t j = 0; j < lp.num_vars; ++j) gain += lp.objective[j] * r[j];
    if (sense == Sense::Max ? !(gain > 0) : !(gain < 0))
        throw std::logic_error("lp: ray not improving");
}

}  // namespace

struct LpSolver::Impl {
    LinearProgram lp;

    // variable bounds harvested from single-term rows; defining row per side
    std::vector<std::optional<Rational>> vlo, vhi;
    std::vector<int> lo_row, hi_row;
    std::vector<int> tab_of_row;  // original row -> tableau row or -1
    std::vector<uint32_t> row_of_tab;
    std::vector<int> flip;  // per tableau row
    std::vector<char> trel;

    uint32_t n = 0, M = 0, ncols = 0, slack0 = 0, art0 = 0;
    std::vector<SparseRow> T;
    std::vector<Rational> beta;
    std::vector<int> basis;
    enum CS : char { AtLo, AtHi, FreeZero, Basic };
    std::vector<char> cstate;
    std::vector<int> col_row;
    std::vector<std::optional<Rational>> clo, chi;

    std::vector<Rational> z;
    Rational zval;

    bool phase1_done = false;
    std::optional<LpResult> fixed_outcome;  // infeasibility decided at setup or in phase 1

    explicit Impl(const LinearProgram& in) : lp(in) { setup(); }

    Rational col_val(uint32_t j) const {
        switch (cstate[j]) {
            case Basic: return beta[col_row[j]];
            case AtLo: return *clo[j];
            case AtHi: return *chi[j];
            default: return Rational(0);
        }
    }

    bool col_fixed(uint32_t j) const { return clo[j] && chi[j] && *clo[j] == *chi[j]; }

    void setup() {
        n = lp.num_vars;
        if (lp.objective.size() != n) throw std::invalid_argument("lp: objective size");
        for (const auto& row : lp.rows) {
            if (row.rel != '<' && row.rel != '=' && row.rel != '>')
                throw std::invalid_argument("lp: bad relation");
            for (const auto& t : row.terms)
                if (t.var >= n || t.coeff == 0) throw std::invalid_argument("lp: bad row term");
        }
        vlo.assign(n, std::nullopt);
        vhi.assign(n, std::nullopt);
        lo_row.assign(n, -1);
        hi_row.assign(n, -1);
        tab_of_row.assign(lp.rows.size(), -1);

        for (size_t i = 0; i < lp.rows.size(); ++i) {
            const auto& row = lp.rows[i];
            if (row.terms.empty()) {
                bool ok = row.rel == '<' ? Rational(0) <= row.rhs
                          : row.rel == '>' ? Rational(0) >= row.rhs
                                           : row.rhs == 0;
                if (!ok) {
                    std::vector<Rational> f(lp.rows.size(), Rational(0));
                    f[i] = row.rel == '<' ? Rational(1)
                           : row.rel == '>' ? Rational(-1)
                                            : (row.rhs > 0 ? Rational(-1) : Rational(1));
                    set_infeasible(std::move(f));
                    return;
                }
                continue;
            }
            if (row.terms.size() == 1) {
                uint32_t j = row.terms[0].var;
                const Rational& a = row.terms[0].coeff;
                Rational bnd = row.rhs / a;
                bool upper = (row.rel == '<') == (a > 0);
                if (row.rel == '=' || upper) {
                    if (!vhi[j] || bnd < *vhi[j]) {
                        vhi[j] = bnd;
                        hi_row[j] = static_cast<int>(i);
                    }
                }
                if (row.rel == '=' || !upper) {
                    if (!vlo[j] || bnd > *vlo[j]) {
                        vlo[j] = bnd;
                        lo_row[j] = static_cast<int>(i);
                    }
                }
                continue;
            }
            tab_of_row[i] = static_cast<int>(row_of_tab.size());
            row_of_tab.push_back(static_cast<uint32_t>(i));
        }
        for (uint32_t j = 0; j < n; ++j) {
            if (vlo[j] && vhi[j] && *vlo[j] > *vhi[j]) {
                std::vector<Rational> f(lp.rows.size(), Rational(0));
                const auto& lr = lp.rows[lo_row[j]];
                const auto& hr = lp.rows[hi_row[j]];
                f[lo_row[j]] = Rational(-1) / lr.terms[0].coeff;
                f[hi_row[j]] += Rational(1) / hr.terms[0].coeff;
                set_infeasible(std::move(f));
                return;
            }
        }

        M = static_cast<uint32_t>(row_of_tab.size());
        slack0 = n;
        art0 = n + M;
        flip.assign(M, 1);
        trel.assign(M, '<');
        clo.assign(n + M, std::nullopt);
        chi.assign(n + M, std::nullopt);
        cstate.assign(n + M, FreeZero);
        col_row.assign(n + M, -1);
        for (uint32_t j = 0; j < n; ++j) {
            clo[j] = vlo[j];
            chi[j] = vhi[j];
            if (clo[j])
                cstate[j] = AtLo;
            else if (chi[j])
                cstate[j] = AtHi;
        }
        T.assign(M, {});
        beta.assign(M, Rational(0));
        basis.assign(M, -1);

        std::vector<uint32_t> art_rows;
        for (uint32_t i = 0; i < M; ++i) {
            const auto& row = lp.rows[row_of_tab[i]];
            flip[i] = row.rel == '>' ? -1 : 1;
            trel[i] = row.rel == '=' ? '=' : '<';
            uint32_t sc = slack0 + i;
            clo[sc] = Rational(0);
            chi[sc] = trel[i] == '=' ? std::optional<Rational>(Rational(0)) : std::nullopt;
            cstate[sc] = AtLo;

            Rational resid = flip[i] == 1 ? row.rhs : -row.rhs;
            SparseRow tr;
            for (const auto& t : row.terms) {
                Rational c = flip[i] == 1 ? t.coeff : -t.coeff;
                resid -= c * col_val(t.var);
                tr.push_back({t.var, std::move(c)});
            }
            std::sort(tr.begin(), tr.end(),
                      [](const LinTerm& a, const LinTerm& b) { return a.var < b.var; });
            tr.push_back({sc, Rational(1)});
            bool slack_ok = trel[i] == '=' ? resid == 0 : resid >= 0;
            if (slack_ok) {
                basis[i] = static_cast<int>(sc);
                cstate[sc] = Basic;
                col_row[sc] = static_cast<int>(i);
                beta[i] = resid;
                T[i] = std::move(tr);
            } else {
                // scale the row so the artificial enters the basis with +1
                int sigma = resid > 0 ? 1 : -1;
                if (sigma == -1)
                    for (auto& t : tr) t.coeff = -t.coeff;
                T[i] = std::move(tr);
                art_rows.push_back(i);
                beta[i] = sigma == 1 ? resid : -resid;
            }
        }
        ncols = art0 + static_cast<uint32_t>(art_rows.size());
        clo.resize(ncols);
        chi.resize(ncols);
        cstate.resize(ncols, AtLo);
        col_row.resize(ncols, -1);
        for (uint32_t k = 0; k < art_rows.size(); ++k) {
            uint32_t ac = art0 + k, i = art_rows[k];
            clo[ac] = Rational(0);
            chi[ac] = std::nullopt;
            T[i].push_back({ac, Rational(1)});
            basis[i] = static_cast<int>(ac);
            cstate[ac] = Basic;
            col_row[ac] = static_cast<int>(i);
        }
        z.assign(ncols, Rational(0));
    }

    void set_infeasible(std::vector<Rational> farkas) {
        verify_farkas(lp, farkas);
        LpResult res;
        res.status = LpStatus::Infeasible;
        res.farkas = std::move(farkas);
        fixed_outcome = std::move(res);
    }

    void build_z(const std::vector<Rational>& cdense) {
        z.assign(ncols, Rational(0));
        for (uint32_t j = 0; j < cdense.size(); ++j) z[j] = cdense[j];
        zval = 0;
        for (uint32_t j = 0; j < cdense.size(); ++j)
            if (cdense[j] != 0) zval += cdense[j] * col_val(j);
        for (uint32_t i = 0; i < M; ++i) {
            uint32_t b = static_cast<uint32_t>(basis[i]);
            Rational cb = b < cdense.size() ? cdense[b] : Rational(0);
            if (cb == 0) continue;
            for (const auto& t : T[i]) z[t.var] -= cb * t.coeff;
        }
    }

    std::vector<std::pair<uint32_t, Rational>> column(uint32_t q) const {
        std::vector<std::pair<uint32_t, Rational>> hits;
        for (uint32_t i = 0; i < M; ++i) {
            Rational c = sparse_coef(T[i], q);
            if (c != 0) hits.emplace_back(i, std::move(c));
        }
        return hits;
    }

    // Enter q moving by signed displacement delta = d*t; r == -1 means bound
    // flip, otherwise basis[r] leaves to `side`.
    void apply_step(uint32_t q, int r, char side, const Rational& delta,
                    const std::vector<std::pair<uint32_t, Rational>>& hits) {
        zval += z[q] * delta;
        if (r < 0) {
            for (const auto& [i, w] : hits) beta[i] -= delta * w;
            cstate[q] = cstate[q] == AtLo ? AtHi : AtLo;
            return;
        }
        Rational enter_val = col_val(q) + delta;
        for (const auto& [i, w] : hits)
            if (static_cast<int>(i) != r) beta[i] -= delta * w;
        uint32_t p = static_cast<uint32_t>(basis[r]);
        cstate[p] = side == 'l' ? AtLo : AtHi;
        col_row[p] = -1;
        Rational piv = sparse_coef(T[r], q);
        if (piv != 1) {
            Rational inv = Rational(1) / piv;
            for (auto& t : T[r]) t.coeff *= inv;
        }
        for (const auto& [i, w] : hits) {
            if (static_cast<int>(i) == r) continue;
            row_axpy(T[i], w, T[r]);
        }
        {
            Rational zq = z[q];
            if (zq != 0)
                for (const auto& t : T[r]) z[t.var] -= zq * t.coeff;
        }
        basis[r] = static_cast<int>(q);
        cstate[q] = Basic;
        col_row[q] = static_cast<int>(r);
        beta[r] = std::move(enter_val);
    }

    // Runs the simplex loop for the current z row. Returns the entering
    // column and direction when unbounded, nullopt at optimality.
    // `stop_at_zero`: early exit once zval == 0 (phase 1).
    std::optional<std::pair<uint32_t, int>> iterate(bool allow_art, bool stop_at_zero) {
        uint64_t iters = 0, since_improve = 0;
        const uint64_t stall_limit = 2ull * (M + ncols) + 16;
        bool bland = false;
        while (true) {
            if (stop_at_zero && zval == 0) return std::nullopt;
            if (++iters > 2000000ull) throw std::runtime_error("lp: iteration limit");
            uint32_t best_q = 0;
            int d = 0;
            bool have = false;
            Rational best_mag;
            uint32_t limit = allow_art ? ncols : art0;
            for (uint32_t j = 0; j < limit; ++j) {
                if (cstate[j] == Basic || col_fixed(j)) continue;
                if (z[j] == 0) continue;
                int dir;
                if (cstate[j] == AtLo)
                    dir = z[j] < 0 ? 1 : 0;
                else if (cstate[j] == AtHi)
                    dir = z[j] > 0 ? -1 : 0;
                else
                    dir = z[j] < 0 ? 1 : -1;
                if (dir == 0) continue;
                if (bland) {
                    best_q = j;
                    d = dir;
                    have = true;
                    break;
                }
                Rational mag = z[j] < 0 ? -z[j] : z[j];
                if (!have || mag > best_mag) {
                    best_q = j;
                    d = dir;
                    best_mag = std::move(mag);
                    have = true;
                }
            }
            if (!have) return std::nullopt;
            uint32_t q = best_q;

            auto hits = column(q);
            bool have_t = false;
            Rational best_t;
            int best_row = -1;  // -1: own bound
            char best_side = 'l';
            if (clo[q] && chi[q]) {  // entering blocked by its own far bound
                best_t = *chi[q] - *clo[q];
                have_t = true;
            }
            for (const auto& [i, w] : hits) {
                Rational e = d > 0 ? w : -w;
                uint32_t b = static_cast<uint32_t>(basis[i]);
                std::optional<Rational> t;
                char side = 'l';
                if (e > 0 && clo[b]) {
                    t = (beta[i] - *clo[b]) / e;
                } else if (e < 0 && chi[b]) {
                    t = (*chi[b] - beta[i]) / -e;
                    side = 'h';
                }
                if (!t) continue;
                if (*t < 0) throw std::logic_error("lp: negative ratio");
                bool take = !have_t || *t < best_t ||
                            (*t == best_t &&
                             (best_row < 0 || basis[i] < basis[best_row]));
                if (take) {
                    best_t = *t;
                    best_row = static_cast<int>(i);
                    best_side = side;
                    have_t = true;
                }
            }
            if (!have_t) return std::make_pair(q, d);

            Rational old_zval = zval;
            Rational delta = d > 0 ? best_t : -best_t;
            apply_step(q, best_row, best_side, delta, hits);
            if (zval < old_zval)
                since_improve = 0;
            else if (++since_improve > stall_limit)
                bland = true;
        }
    }

    void run_phase1() {
        bool need = false;
        for (uint32_t i = 0; i < M; ++i)
            if (static_cast<uint32_t>(basis[i]) >= art0) need = true;
        if (!need) {
            phase1_done = true;
            return;
        }
        std::vector<Rational> c1(ncols, Rational(0));
        for (uint32_t j = art0; j < ncols; ++j) c1[j] = 1;
        build_z(c1);
        auto unb = iterate(true, true);
        if (unb) throw std::logic_error("lp: phase 1 unbounded");
        if (zval > 0) {
            // Farkas: flip_i * z1[slack_i] on tableau rows, -z1[j]/a on the
            // binding bound row of each structural nonbasic. The variable is
            // blocked below when z1 > 0 and above when z1 < 0; for a fixed
            // column either bound is tight but only that choice keeps the
            // certificate's row signs admissible.
            std::vector<Rational> f(lp.rows.size(), Rational(0));
            for (uint32_t i = 0; i < M; ++i)
                f[row_of_tab[i]] = Rational(flip[i]) * z[slack0 + i];
            for (uint32_t j = 0; j < n; ++j) {
                if (cstate[j] == Basic || z[j] == 0) continue;
                int r = z[j] > 0 ? lo_row[j] : hi_row[j];
                if (r < 0) throw std::logic_error("lp: free var with nonzero phase-1 cost");
                f[r] += -z[j] / lp.rows[r].terms[0].coeff;
            }
            set_infeasible(std::move(f));
            return;
        }
        // Drive artificials out of the basis; rows that resist are redundant.
        for (uint32_t i = 0; i < M; ++i) {
            if (static_cast<uint32_t>(basis[i]) < art0) continue;
            if (beta[i] != 0) throw std::logic_error("lp: artificial basic nonzero");
            uint32_t q = ncols;
            for (const auto& t : T[i])
                if (t.var < art0 && cstate[t.var] != Basic) {
                    q = t.var;
                    break;
                }
            if (q == ncols) continue;  // row implied by the others
            // Degenerate swap: the artificial leaves at value 0 = its lower bound.
            apply_step(q, static_cast<int>(i), 'l', Rational(0), column(q));
        }
        for (uint32_t j = art0; j < ncols; ++j) {
            clo[j] = Rational(0);
            chi[j] = Rational(0);
        }
        phase1_done = true;
    }

    LpResult solve(const std::vector<Rational>& objective, Sense sense) {
        if (objective.size() != n) throw std::invalid_argument("lp: objective size");
        if (!fixed_outcome && !phase1_done) run_phase1();
        if (fixed_outcome) return *fixed_outcome;

        lp.objective = objective;
        lp.sense = sense;
        int s = sense == Sense::Max ? -1 : 1;
        std::vector<Rational> cint(n);
        for (uint32_t j = 0; j < n; ++j) cint[j] = s == -1 ? -objective[j] : objective[j];
        build_z(cint);
        auto unb = iterate(false, false);

        LpResult res;
        if (unb) {
            auto [q, d] = *unb;
            res.status = LpStatus::Unbounded;
            res.ray.assign(n, Rational(0));
            if (q < n) res.ray[q] = d;
            for (const auto& [i, w] : column(q)) {
                uint32_t b = static_cast<uint32_t>(basis[i]);
                if (b < n) res.ray[b] = Rational(-d) * w;
            }
            verify_ray(lp, res.ray, sense);
            return res;
        }
        res.status = LpStatus::Optimal;
        res.primal.assign(n, Rational(0));
        for (uint32_t j = 0; j < n; ++j) res.primal[j] = col_val(j);
        res.value = 0;
        for (uint32_t j = 0; j < n; ++j) res.value += objective[j] * res.primal[j];
        res.dual.assign(lp.rows.size(), Rational(0));
        for (uint32_t i = 0; i < M; ++i)
            res.dual[row_of_tab[i]] = Rational(-s * flip[i]) * z[slack0 + i];
        for (uint32_t j = 0; j < n; ++j) {
            if (cstate[j] == Basic || z[j] == 0) continue;
            // z > 0: blocked below, z < 0: blocked above (see run_phase1)
            int r = z[j] > 0 ? lo_row[j] : hi_row[j];
            if (r < 0) throw std::logic_error("lp: free var with nonzero reduced cost");
            res.dual[r] += Rational(s) * z[j] / lp.rows[r].terms[0].coeff;
        }
        verify_primal(lp, res.primal);
        verify_dual(lp, res.primal, res.dual, res.value);
        return res;
    }
};

LpSolver::LpSolver(const LinearProgram& lp) : impl_(std::make_unique<Impl>(lp)) {}
LpSolver::~LpSolver() = default;
LpSolver::LpSolver(LpSolver&&) noexcept = default;
LpSolver& LpSolver::operator=(LpSolver&&) noexcept = default;

LpResult LpSolver::solve(const std::vector<Rational>& objective, Sense sense) {
    return impl_->solve(objective, sense);
}

LpResult lp_solve(const LinearProgram& lp) {
    LpSolver solver(lp);
    return solver.solve(lp.objective, lp.sense);
}

LinearProgram lp_from_extform(const ExtForm& f,
                              const std::vector<std::pair<std::string, Rational>>& objective,
                              Sense sense) {
    LinearProgram lp;
    lp.num_vars = static_cast<uint32_t>(f.vars.size());
    lp.sense = sense;
    lp.objective.assign(lp.num_vars, Rational(0));
    for (const auto& [name, c] : objective) lp.objective[f.var_index(name)] += c;
    for (const auto& r : f.ineqs) lp.rows.push_back({r.terms, '<', r.rhs});
    for (const auto& r : f.eqs) lp.rows.push_back({r.terms, '=', r.rhs});
    return lp;
}

std::optional<std::vector<Rational>> feasible_lift(
    const ExtForm& f, const std::vector<std::pair<std::string, Rational>>& fixed) {
    LinearProgram lp = lp_from_extform(f, {}, Sense::Max);
    for (const auto& [name, val] : fixed) {
        uint32_t v = f.var_index(name);
        if (!f.is_original(v))
            throw std::invalid_argument("feasible_lift: " + name + " is not original");
        lp.rows.push_back({{{v, Rational(1)}}, '=', val});
    }
    LpResult res = lp_solve(lp);
    if (res.status == LpStatus::Infeasible) return std::nullopt;
    if (res.status != LpStatus::Optimal) throw std::logic_error("feasible_lift: unbounded");
    return res.primal;
}

ExtForm prune_redundant_rows(const ExtForm& f) {
    std::vector<char> keep(f.ineqs.size(), 1);
    for (size_t i = 0; i < f.ineqs.size(); ++i) {
        LinearProgram lp;
        lp.num_vars = static_cast<uint32_t>(f.vars.size());
        lp.sense = Sense::Max;
        lp.objective.assign(lp.num_vars, Rational(0));
        for (const auto& t : f.ineqs[i].terms) lp.objective[t.var] = t.coeff;
        for (size_t k = 0; k < f.ineqs.size(); ++k)
            if (k != i && keep[k]) lp.rows.push_back({f.ineqs[k].terms, '<', f.ineqs[k].rhs});
        for (const auto& r : f.eqs) lp.rows.push_back({r.terms, '=', r.rhs});
        LpResult res = lp_solve(lp);
        if (res.status == LpStatus::Infeasible ||
            (res.status == LpStatus::Optimal && res.value <= f.ineqs[i].rhs))
            keep[i] = 0;
    }
    ExtForm out;
    out.vars = f.vars;
    out.num_original = f.num_original;
    out.eqs = f.eqs;
    for (size_t i = 0; i < f.ineqs.size(); ++i)
        if (keep[i]) out.ineqs.push_back(f.ineqs[i]);
    return out;
}

}  // namespace stabef
