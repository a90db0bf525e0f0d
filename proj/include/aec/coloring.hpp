#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aec/density.hpp"
#include "aec/graph.hpp"
#include "aec/structure.hpp"

namespace aec {

// Per-edge color lists; colors are nonnegative integers.
struct ListAssignment {
    std::map<EdgeId, std::vector<int>> lists;  // sorted, unique
};

// 3*Delta(G) + 70, the palette size the engine is guaranteed for.
int default_palette_size(const Graph& g);

// Every edge gets {0..k-1}; k defaults to 3*Delta(G)+70.
ListAssignment uniform_lists(const Graph& g, std::optional<int> k = std::nullopt);

struct EdgeColoring {
    std::map<EdgeId, int> colors;
};

struct AdjacentClash {
    int vertex = -1;
    EdgeId e1, e2;
    int color = -1;
};

struct BichromaticWitness {
    std::vector<int> cycle;  // vertices in cycle order (closed implicitly)
    int color_a = -1, color_b = -1;
};

struct VerifyReport {
    bool proper = false;
    bool acyclic = false;
    std::optional<AdjacentClash> clash;
    std::optional<BichromaticWitness> witness;
};

// Independent checker: properness by per-vertex color multisets,
// acyclicity by scanning, for every color pair that co-occurs at some
// vertex, the two-color subgraph for cycles.
VerifyReport verify_coloring(const Graph& g, const EdgeColoring& c);

// One removal of the elimination phase, with the structural facts the
// extension recipe will need, snapshotted from the graph the edge was
// removed from (degrees shrink as elimination proceeds, and the recipes
// quote removal-time degrees).
struct EliminationStep {
    EdgeId edge;
    Reducible context;
    int center = -1;               // the recipe's distinguished endpoint
    int other = -1;                // the opposite endpoint of `edge`
    std::vector<int> center_nbrs;  // N(center) at removal time, sorted
    std::vector<int> other_nbrs;   // N(other) at removal time, sorted
    std::map<int, int> degrees;    // removal-time degrees of the above
};

class DensityRefusal : public Error {
public:
    explicit DensityRefusal(DensityCertificate cert)
        : Error(Errc::PreconditionUnmet,
                "not (4,-1)-linear: max excess " + cert.max_excess.str()),
          cert_(std::move(cert)) {}
    const DensityCertificate& certificate() const { return cert_; }

private:
    DensityCertificate cert_;
};

class LemmaViolationError : public Error {
public:
    LemmaViolationError(LemmaViolation violation, Graph at)
        : Error(Errc::TheoremViolation, violation.note),
          violation_(std::move(violation)),
          graph_(std::move(at)) {}
    const LemmaViolation& violation() const { return violation_; }
    const Graph& graph() const { return graph_; }

private:
    LemmaViolation violation_;
    Graph graph_;
};

// Repeatedly removes the edge designated by the recipe table (low-degree
// vertices first, then the first configuration) until the graph is
// edgeless.  Requires a (4,-1)-linearity certificate up front.
std::vector<EliminationStep> elimination_order(const Graph& g);

struct ForbiddenTrace {
    std::string recipe;
    std::map<std::string, int> set_sizes;
    std::vector<int> rejected;  // candidates the localized check refused
    bool fallback_scan = false;
    bool c9_recolor = false;
};

struct ExtensionResult {
    bool ok = false;
    int color = -1;
    std::vector<std::pair<EdgeId, int>> recolored;  // C9 maneuver effects
    ForbiddenTrace trace;
};

// Extends an acyclic coloring of H = G_k - e to e itself.  May recolor
// edges at the degree-4 witness for C9 steps; all changes are applied to
// `h_coloring`.
ExtensionResult extend_coloring(EdgeColoring& h_coloring,
                                const EliminationStep& step,
                                const ListAssignment& lists);

struct FailureReport {
    std::size_t step_index = 0;
    EliminationStep step;
    int n = 0;                    // graph snapshot at the failed extension
    std::vector<EdgeId> edges;
    ForbiddenTrace trace;
};

struct ColorOutcome {
    bool success = false;
    EdgeColoring coloring;
    std::optional<FailureReport> failure;
    std::vector<EdgeId> small_lists;  // advisory: |L(e)| < 3*Delta+70
    VerifyReport final_check;         // the internal gate, on success
};

// The engine: elimination, then reverse replay extending one edge at a
// time, then the independent verifier as a final gate.
ColorOutcome color_graph(const Graph& g, const ListAssignment& lists);

// Exact acyclic chromatic index by backtracking (e(G) <= 20); nullopt
// when every k <= k_max fails.  When `witness` is given, an optimal
// coloring is written to it.
std::optional<int> chi_a_bruteforce(const Graph& g, int k_max,
                                    EdgeColoring* witness = nullptr);

}  // namespace aec
