#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stabef/extform.hpp"
#include "stabef/graph.hpp"
#include "stabef/embedding.hpp"
#include "stabef/oracle.hpp"

namespace stabef {

// Formulation route taken by one biconnected block.
enum class Branch : uint8_t {
    Bipartite,       // edge/box system, integral by total unimodularity
    Oct3,            // union over stable fixings of an odd cycle transversal, |X| <= 3
    ProjectiveCore,  // parity-circulation system of an even-face embedded block
    Composed,        // projective core with bipartite flaps folded back in
};
const char* branch_name(Branch b);

// Graph plus a matching even-face scheme (all-odd signature).
struct EmbeddedGraph {
    Graph graph;
    SignedRotationSystem scheme;
};

struct BlockReport {
    Branch branch;
    std::vector<uint32_t> nodes;  // host node ids, sorted
    uint32_t rows = 0;            // inequality rows of the block's system
    uint32_t vars = 0;
    uint32_t oct_size = 0;        // |X| when branch == Oct3
    uint32_t flaps = 0;           // folded flaps when branch == Composed
    std::string structure_json;   // decomposition record (projective branches)
    // Embedded core (block node ids remapped; see decomposition Core), kept
    // so verification can replay the dual-orientation validators.
    std::shared_ptr<const EmbeddedGraph> core;
};

struct CompileResult {
    ExtForm form;  // empty when rejected
    Branch branch = Branch::Bipartite;  // deepest branch over the blocks
    std::vector<BlockReport> blocks;
    // Two node-disjoint odd cycles (edge ids) when the input is out of scope.
    std::optional<std::vector<std::vector<uint32_t>>> rejection;

    bool rejected() const { return rejection.has_value(); }
};

struct CompileOptions {
    uint32_t ocp_cap = 24;           // node cap for the scope check
    uint32_t embed_cap = 40;         // edge cap per embedding attempt
    uint32_t validation_budget = 4096;  // flap candidate sets tried per block
    // Send every non-bipartite block through the decomposition, skipping the
    // small-transversal shortcut. The result must still be exact; the flag
    // only forgoes the cheaper route.
    bool force_projective = false;
    // Even-face scheme of the input under the all-odd signature. Certifies
    // the scope precondition without the exhaustive check (so graphs beyond
    // ocp_cap compile) and stands in for the core embedding search. Only
    // applies when the graph is a single biconnected block.
    const SignedRotationSystem* scheme_hint = nullptr;
    // Drop inequality rows implied by the rest of the system (exact LPs, one
    // pass in row order). Quadratic in the row count -- small systems only.
    bool prune = false;
};

// Stable set polytope of g as the projection of an exact extended
// formulation, assembled per biconnected block and glued on cut nodes.
// Original variables are "x<node>". Inputs with two node-disjoint odd cycles
// are reported via `rejection` instead of a form. Throws BudgetError when a
// search budget runs out and DecompositionError when a block admits no
// validated flap structure.
CompileResult compile(const Graph& g, const CompileOptions& opts = {});

struct VerifyOptions {
    uint32_t trials = 50;     // random objectives for the LP-vs-oracle duel
    uint32_t node_cap = 24;   // brute-force oracle cap
    bool skip_oracle = false; // structural checks only
    CompileOptions compile;
};

struct VerifyResult {
    bool ok = false;
    bool rejected = false;       // input out of scope, rejection witnesses checked
    bool deterministic = false;  // recompilation serialized byte-identically
    Verdict verdict;             // oracle duel outcome (when it ran)
    std::string detail;          // human-readable failure description
};

// Compile (twice, comparing serializations), re-check rejection witnesses and
// per-block branch verdicts independently, replay the embedding/dual
// validators on projective blocks, then run the exact-arithmetic LP against
// the brute-force oracle on random objectives and maximal stable sets.
VerifyResult verify(const Graph& g, const VerifyOptions& opts = {});

// Oracle duel against a caller-supplied form (no compilation): detects both
// over-relaxation (LP beats the oracle) and cut-off stable sets.
VerifyResult verify_form(const Graph& g, const ExtForm& form, const VerifyOptions& opts = {});

// Projective-plane quadrangulation family: an inner odd cycle C_{2k+1} wired
// through r concentric rings of length 4k+2. n = (2k+1)(2r+1); every face is
// a quadrilateral except one (4k+2)-gon. The returned scheme is analytic
// (O(1) per edge) and passes the even-face validator, which certifies that
// no two node-disjoint odd cycles exist.
EmbeddedGraph projective_quadrangulation(uint32_t k, uint32_t r);

struct CorpusOptions {
    uint64_t seed = 20260815;
    uint32_t random_count = 12;          // screened random instances
    uint32_t max_n = 100;
    std::vector<std::string> families;   // empty = all
};

// One corpus instance: <stem>.graph (text), optional <stem>.scheme sidecar,
// and a manifest entry. Families: odd-cycles, odd-wheels, complete-small,
// projective-quadrangulations (scheme sidecars), flapped-cores, block-glued,
// random-ocp1-screened (per-instance seeds recorded in the manifest).
struct CorpusEntry {
    std::string stem;
    std::string family;
    uint32_t n = 0;
    uint32_t m = 0;
    bool has_scheme = false;
    uint64_t seed = 0;  // random family only
};

// Writes the corpus under `dir` (created if missing) plus manifest.json.
std::vector<CorpusEntry> generate_corpus(const std::string& dir,
                                         const CorpusOptions& opts = {});
std::vector<CorpusEntry> read_manifest(const std::string& dir);

struct BenchRow {
    std::string stem;
    std::string family;
    uint32_t n = 0;
    uint32_t m = 0;
    uint32_t rows = 0;
    uint32_t vars = 0;
    Branch branch = Branch::Bipartite;
    double millis = 0.0;
};

struct BenchResult {
    std::vector<BenchRow> rows;
    // Least-squares slope of ln(rows) vs ln(n) over the quadrangulation
    // family, and the max rows/n^2 constant backing the quadratic bound.
    double quad_slope = 0.0;
    double quad_constant = 0.0;
};

// Compiles every manifest instance (scheme sidecars used as hints), timing
// each; instances run in parallel with isolated state. Oracle-free: sizes
// and growth only.
BenchResult bench_corpus(const std::string& dir);
std::string bench_csv(const BenchResult& b);

// Report serializations for the CLI (deterministic key order).
std::string compile_report_json(const Graph& g, const CompileResult& r);
std::string verify_report_json(const VerifyResult& r);

}  // namespace stabef
