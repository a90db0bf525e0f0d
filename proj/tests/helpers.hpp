#pragma once

// Shared fixtures and independent oracles for the test suites.  Everything
// here must stay independent of the implementation paths it checks.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "aec/coloring.hpp"
#include "aec/embedding.hpp"
#include "aec/graph.hpp"
#include "aec/rng.hpp"

namespace testutil {

using aec::EdgeId;
using aec::Graph;

inline Graph complete(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return Graph::build(n, pairs);
}

inline Graph cycle(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
    return Graph::build(n, pairs);
}

inline Graph path(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    return Graph::build(n, pairs);
}

// center 0, leaves 1..k
inline Graph star(int k) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= k; ++i) pairs.emplace_back(0, i);
    return Graph::build(k + 1, pairs);
}

inline Graph erdos_renyi(int n, int target_edges, std::uint64_t seed) {
    aec::DetRng rng(seed);
    std::set<std::pair<int, int>> edges;
    int guard = 50 * target_edges + 50;
    while (static_cast<int>(edges.size()) < target_edges && guard-- > 0) {
        int u = rng.below(n), v = rng.below(n);
        if (u == v) continue;
        edges.insert(std::minmax(u, v));
    }
    std::vector<std::pair<int, int>> pairs(edges.begin(), edges.end());
    return Graph::build(n, pairs);
}

// Exhaustive bichromatic-cycle scan: enumerates every simple cycle and
// checks whether some cycle uses at most two colors.  Only for tiny graphs.
inline bool has_bichromatic_cycle_exhaustive(const Graph& g,
                                             const aec::EdgeColoring& c) {
    int n = g.vertex_count();
    std::vector<int> path_verts;
    std::vector<char> used(n, 0);
    bool found = false;

    // cycles are canonicalized by their minimum vertex = start
    std::function<void(int, int)> dfs = [&](int start, int v) {
        if (found) return;
        for (int w : g.neighbors(v)) {
            if (found) return;
            if (w == start && path_verts.size() >= 3) {
                std::set<int> colors;
                for (std::size_t i = 0; i < path_verts.size(); ++i) {
                    int a = path_verts[i];
                    int b = (i + 1 == path_verts.size()) ? start : path_verts[i + 1];
                    colors.insert(c.colors.at(EdgeId(a, b)));
                }
                if (colors.size() <= 2) found = true;
                continue;
            }
            if (w <= start || used[w]) continue;
            used[w] = 1;
            path_verts.push_back(w);
            dfs(start, w);
            path_verts.pop_back();
            used[w] = 0;
        }
    };

    for (int s = 0; s < n && !found; ++s) {
        used.assign(n, 0);
        used[s] = 1;
        path_verts = {s};
        dfs(s, s);
    }
    return found;
}

// Greedy proper coloring with seeded tie-breaking; not necessarily acyclic.
inline aec::EdgeColoring random_proper_coloring(const Graph& g, int k,
                                                std::uint64_t seed) {
    aec::DetRng rng(seed);
    std::vector<EdgeId> order = g.edges();
    for (int i = static_cast<int>(order.size()) - 1; i > 0; --i)
        std::swap(order[i], order[rng.below(i + 1)]);
    aec::EdgeColoring c;
    std::vector<std::set<int>> at(g.vertex_count());
    for (const EdgeId& e : order) {
        std::vector<int> free;
        for (int col = 0; col < k; ++col)
            if (!at[e.a].count(col) && !at[e.b].count(col)) free.push_back(col);
        if (free.empty()) return {};  // caller retries with larger k
        int col = free[rng.below(static_cast<int>(free.size()))];
        c.colors[e] = col;
        at[e.a].insert(col);
        at[e.b].insert(col);
    }
    return c;
}

// Union-find forest check for a set of edges (independent of the verifier).
inline bool edges_form_forest(int n, const std::vector<EdgeId>& edges) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const EdgeId& e : edges) {
        int ra = find(e.a), rb = find(e.b);
        if (ra == rb) return false;
        parent[ra] = rb;
    }
    return true;
}

// The standard tetrahedral embedding of K4, rotations written by hand.
inline aec::Drawing k4_tetrahedral() {
    aec::Drawing d;
    d.n = 4;
    d.edges = {EdgeId(0, 1), EdgeId(0, 2), EdgeId(0, 3),
               EdgeId(1, 2), EdgeId(1, 3), EdgeId(2, 3)};
    // edge index:   01=0, 02=1, 03=2, 12=3, 13=4, 23=5
    auto at0 = [](int e) { return aec::end_id(e, 0, 0); };
    auto at1 = [](int e) { return aec::end_id(e, 0, 1); };
    d.rotation = {
        {at0(0), at0(1), at0(2)},  // 0: 1,2,3
        {at1(0), at0(4), at0(3)},  // 1: 0,3,2
        {at1(1), at1(3), at0(5)},  // 2: 0,1,3
        {at1(2), at1(5), at1(4)},  // 3: 0,2,1
    };
    return d;
}

}  // namespace testutil
