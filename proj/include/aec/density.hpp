#pragma once

#include <utility>
#include <vector>

#include "aec/graph.hpp"
#include "aec/rational.hpp"

namespace aec {

struct LinearityParams {
    Rat alpha;       // nonnegative, kept reduced by Rat itself
    long long beta;  // integral offset
};

// Decides e(G') <= alpha*v(G') + beta over all nonempty subsets and
// carries the tightest subset as evidence either way.
struct DensityCertificate {
    Rat alpha;
    long long beta = 0;
    Rat max_excess;            // max over nonempty S of e(G[S]) - alpha*|S|
    std::vector<int> witness;  // a set attaining it, sorted
    bool verdict = false;      // max_excess <= beta
};

// Exact maximum of e(G[S]) - alpha*|S| over nonempty S, via one min-cut
// on the project-selection network (edges are profit-q items needing both
// endpoints, vertices cost p, for alpha = p/q).  Returns the value and a
// maximizing subset.
std::pair<Rat, std::vector<int>> max_excess(const Graph& g, const Rat& alpha);

// Exhaustive oracle over all 2^n - 1 nonempty subsets; n <= 20.
std::pair<Rat, std::vector<int>> max_excess_bruteforce(const Graph& g,
                                                       const Rat& alpha);

DensityCertificate is_linear(const Graph& g, const LinearityParams& params);

// Recheck helper shared with tests: e(G[S]) - alpha*|S| computed directly.
Rat subset_excess(const Graph& g, const std::vector<int>& subset, const Rat& alpha);

}  // namespace aec
