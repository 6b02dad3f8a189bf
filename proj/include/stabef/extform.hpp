#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stabef/graph.hpp"
#include "stabef/rational.hpp"

namespace stabef {

struct LinTerm {
    uint32_t var;
    Rational coeff;
};

// sum(terms) <= rhs, or == rhs for equation rows. Terms are sorted by var
// index and carry nonzero coefficients.
struct LinRow {
    std::vector<LinTerm> terms;
    Rational rhs;
};

// Extended formulation: a linear system over named variables together with a
// projection onto the `num_original` leading variables. `size` counts
// inequality rows only; equations are free.
class ExtForm {
public:
    std::vector<std::string> vars;
    uint32_t num_original = 0;
    std::vector<LinRow> ineqs;
    std::vector<LinRow> eqs;

    size_t size() const { return ineqs.size(); }

    uint32_t var_index(const std::string& name) const;          // throws if absent
    std::optional<uint32_t> find_var(const std::string& name) const;
    uint32_t add_var(const std::string& name);                  // throws on duplicate
    bool is_original(uint32_t v) const { return v < num_original; }

    // Builds a row from (name, coeff) pairs; merges duplicates, drops zeros.
    LinRow row(const std::vector<std::pair<std::string, Rational>>& terms,
               const Rational& rhs) const;
    void add_ineq(const std::vector<std::pair<std::string, Rational>>& terms,
                  const Rational& rhs);
    void add_eq(const std::vector<std::pair<std::string, Rational>>& terms, const Rational& rhs);

private:
    mutable std::map<std::string, uint32_t> index_;  // lazily rebuilt
    mutable bool index_valid_ = false;
    void ensure_index() const;
};

enum class UnionMode { Polytopes, SharedRecessionCone };

// Disjunctive (Balas) hull of the given forms, all over the same original
// variables. A single form is returned unchanged. In Polytopes mode the
// caller asserts each member is bounded; in SharedRecessionCone mode that all
// recession cones agree. Branch copies are namespaced "u<i>.<name>", branch
// multipliers "u<i>.lam".
ExtForm balas_union(const std::vector<ExtForm>& forms, UnionMode mode);

// Conjunction of systems sharing original variables by name. Auxiliary
// variables of the i-th form are namespaced "g<i>.<name>". A variable that is
// original in one form and auxiliary in another is an error.
ExtForm glue_shared(const std::vector<ExtForm>& forms);

struct AffineExpr {
    std::vector<std::pair<std::string, Rational>> terms;
    Rational constant;
};

// target variable name -> affine expression over source variable names.
using AffineMap = std::vector<std::pair<std::string, AffineExpr>>;

// Image: new originals y defined by y = expr(old originals); old variables all
// become auxiliary, defining equations are appended.
ExtForm affine_image(const ExtForm& form, const AffineMap& map);

// Preimage: every old original variable is replaced in-place by an affine
// expression over the new originals. When `require_injective` is set the
// linear part must have full column rank (checked exactly), so the preimage
// is an affinely equivalent copy.
ExtForm affine_preimage(const ExtForm& form, const AffineMap& map, bool require_injective);

// Appends lo <= v <= hi rows for every original variable.
ExtForm intersect_box(const ExtForm& form, const Rational& lo, const Rational& hi);

// Appends fixing equations v = value.
ExtForm fix_variables(const ExtForm& form,
                      const std::vector<std::pair<std::string, Rational>>& values);

// Stable set polytope of a bipartite graph: edge rows, nonnegativity, and
// upper bounds (the caller of record for naming is "x<node>").
ExtForm tu_stab_system(const Graph& g);

// Balas union over stable assignments of X of the edge/box system with the
// assignment fixed and neighbors of 1-fixed nodes forced to 0. Exact for
// G - X bipartite.
ExtForm oct3_formulation(const Graph& g, const std::vector<uint32_t>& x_set);

// conv of stable sets of g1prime (bipartite) whose slack set within
// `h_edges` has size <= 1: Balas union over admissible boundary assignments.
ExtForm restricted_stab_bar(const Graph& g1prime, const std::vector<uint32_t>& h_edges);

// Conjunction implementing the separation glue: ef0 over V(G0'), efbar1 over
// V(G1'); shared variables are the boundary and the gadget internals, and the
// gadget internals are demoted to auxiliary afterwards.
ExtForm compose_separation(const ExtForm& ef0, const ExtForm& efbar1,
                           const std::vector<std::string>& shared_boundary,
                           const std::vector<std::string>& gadget_internal);

// Text and JSON serialization; both round-trip bit-exactly.
std::string write_extform_text(const ExtForm& f);
ExtForm read_extform_text(std::istream& in);
ExtForm read_extform_file(const std::string& path);
std::string write_extform_json(const ExtForm& f);
ExtForm read_extform_json_text(const std::string& text);

}  // namespace stabef
