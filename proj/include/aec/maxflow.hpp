#pragma once

#include <vector>

namespace aec {

// Dinic max-flow on integer capacities.  Exact: no scaling, no floats.
class MaxFlow {
public:
    static constexpr long long kInf = 1LL << 60;

    explicit MaxFlow(int node_count);

    void add_edge(int from, int to, long long cap);
    long long run(int source, int sink);

    // Minimal min-cut source side: nodes reachable from s in the residual
    // network.  Valid after run().
    std::vector<char> source_side_min() const;

    // Maximal min-cut source side: nodes that cannot reach t in the
    // residual network.  Valid after run().
    std::vector<char> source_side_max() const;

private:
    struct Arc {
        int to;
        long long cap;  // residual
    };

    bool bfs_levels();
    long long dfs_push(int v, long long limit);

    int n_;
    int source_ = -1, sink_ = -1;
    std::vector<Arc> arcs_;                 // arc 2k and 2k+1 are companions
    std::vector<std::vector<int>> incident_;
    std::vector<int> level_, iter_;
};

}  // namespace aec
