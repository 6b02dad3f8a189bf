#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stabef/extform.hpp"
#include "stabef/rational.hpp"

namespace stabef {

enum class Sense { Max, Min };
enum class LpStatus { Optimal, Unbounded, Infeasible };

// One constraint: sum(terms) rel rhs with rel in {'<', '=', '>'} meaning
// <=, ==, >=. Terms canonical (sorted by var, nonzero).
struct LpRow {
    std::vector<LinTerm> terms;
    char rel;
    Rational rhs;
};

struct LinearProgram {
    uint32_t num_vars = 0;
    std::vector<LpRow> rows;
    std::vector<Rational> objective;  // size num_vars
    Sense sense = Sense::Max;
};

// All certificates below are verified exactly before being returned; a
// failure of any internal check throws std::logic_error.
//
//   Optimal:    primal feasible; dual y with  sum_i y_i A_i = c,
//               y_i >= 0 on '<' rows and y_i <= 0 on '>' rows for Max
//               (signs flipped for Min), y^T b = c^T x = value, and
//               complementary slackness.
//   Unbounded:  ray r with A_i r <= 0 ('<'), = 0 ('='), >= 0 ('>') and
//               c^T r > 0 for Max (< 0 for Min).
//   Infeasible: farkas f with sum_i f_i A_i = 0, f_i >= 0 ('<'),
//               f_i <= 0 ('>'), and f^T b < 0.
struct LpResult {
    LpStatus status = LpStatus::Optimal;
    Rational value;
    std::vector<Rational> primal;
    std::vector<Rational> dual;
    std::vector<Rational> ray;
    std::vector<Rational> farkas;
};

// Two-phase primal simplex over Q with sparse rows. Single-variable rows are
// handled as variable bounds internally; their duals are recovered from
// reduced costs and attributed to the tightest defining row. Repeated calls
// to solve() with different objectives reuse the last basis (the constraint
// system is fixed at construction).
class LpSolver {
public:
    explicit LpSolver(const LinearProgram& lp);
    ~LpSolver();
    LpSolver(LpSolver&&) noexcept;
    LpSolver& operator=(LpSolver&&) noexcept;

    LpResult solve(const std::vector<Rational>& objective, Sense sense);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

LpResult lp_solve(const LinearProgram& lp);

LinearProgram lp_from_extform(const ExtForm& f,
                              const std::vector<std::pair<std::string, Rational>>& objective,
                              Sense sense);

// Any point of the system with the given original variables pinned; full
// variable vector in ExtForm order, or nullopt when none exists.
std::optional<std::vector<Rational>> feasible_lift(
    const ExtForm& f, const std::vector<std::pair<std::string, Rational>>& fixed);

// Drops inequality rows implied by the remaining system (exact LP test, one
// row at a time in emission order). Equations are kept.
ExtForm prune_redundant_rows(const ExtForm& f);

}  // namespace stabef
