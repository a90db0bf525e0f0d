#include "aec/maxflow.hpp"

#include <algorithm>
#include <queue>

namespace aec {

MaxFlow::MaxFlow(int node_count) : n_(node_count), incident_(node_count) {}

void MaxFlow::add_edge(int from, int to, long long cap) {
    incident_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap});
    incident_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0});
}

bool MaxFlow::bfs_levels() {
    level_.assign(n_, -1);
    std::queue<int> q;
    level_[source_] = 0;
    q.push(source_);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int id : incident_[v]) {
            const Arc& a = arcs_[id];
            if (a.cap > 0 && level_[a.to] == -1) {
                level_[a.to] = level_[v] + 1;
                q.push(a.to);
            }
        }
    }
    return level_[sink_] != -1;
}

long long MaxFlow::dfs_push(int v, long long limit) {
    if (v == sink_) return limit;
    for (int& i = iter_[v]; i < static_cast<int>(incident_[v].size()); ++i) {
        int id = incident_[v][i];
        Arc& a = arcs_[id];
        if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
        long long pushed = dfs_push(a.to, std::min(limit, a.cap));
        if (pushed > 0) {
            a.cap -= pushed;
            arcs_[id ^ 1].cap += pushed;
            return pushed;
        }
    }
    level_[v] = -1;
    return 0;
}

long long MaxFlow::run(int source, int sink) {
    source_ = source;
    sink_ = sink;
    long long total = 0;
    while (bfs_levels()) {
        iter_.assign(n_, 0);
        while (long long pushed = dfs_push(source_, kInf)) total += pushed;
    }
    return total;
}

std::vector<char> MaxFlow::source_side_min() const {
    std::vector<char> seen(n_, 0);
    std::queue<int> q;
    seen[source_] = 1;
    q.push(source_);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int id : incident_[v]) {
            const Arc& a = arcs_[id];
            if (a.cap > 0 && !seen[a.to]) {
                seen[a.to] = 1;
                q.push(a.to);
            }
        }
    }
    return seen;
}

std::vector<char> MaxFlow::source_side_max() const {
    // Reverse reachability to t along positive-residual arcs; the
    // complement is the unique maximal min-cut source side.
    std::vector<std::vector<int>> rev(n_);
    for (int v = 0; v < n_; ++v)
        for (int id : incident_[v])
            if (arcs_[id].cap > 0) rev[arcs_[id].to].push_back(v);
    std::vector<char> reaches_t(n_, 0);
    std::queue<int> q;
    reaches_t[sink_] = 1;
    q.push(sink_);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : rev[v])
            if (!reaches_t[u]) {
                reaches_t[u] = 1;
                q.push(u);
            }
    }
    std::vector<char> side(n_);
    for (int v = 0; v < n_; ++v) side[v] = !reaches_t[v];
    return side;
}

}  // namespace aec
