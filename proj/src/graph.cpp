#include "aec/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>

namespace aec {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::LoopEdge: return "LoopEdge";
        case Errc::DuplicateEdge: return "DuplicateEdge";
        case Errc::VertexOutOfRange: return "VertexOutOfRange";
        case Errc::EmptyGraph: return "EmptyGraph";
        case Errc::TooLarge: return "TooLarge";
        case Errc::PreconditionUnmet: return "PreconditionUnmet";
        case Errc::NotPlanarDrawing: return "NotPlanarDrawing";
        case Errc::IncompleteColoring: return "IncompleteColoring";
        case Errc::ParseError: return "ParseError";
        case Errc::TheoremViolation: return "TheoremViolation";
    }
    return "Error";
}

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 0) throw Error(Errc::VertexOutOfRange, "negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    std::set<EdgeId> seen;
    g.edges_.reserve(pairs.size());
    for (const auto& [u, v] : pairs) {
        if (u < 0 || u >= n)
            throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(u));
        if (v < 0 || v >= n)
            throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
        EdgeId e(u, v);  // throws LoopEdge when u == v
        if (!seen.insert(e).second)
            throw Error(Errc::DuplicateEdge, "edge (" + std::to_string(e.a) +
                                                 "," + std::to_string(e.b) + ")");
        g.adj_[e.a].push_back(e.b);
        g.adj_[e.b].push_back(e.a);
    }
    g.edges_.assign(seen.begin(), seen.end());
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

DegreeProfile Graph::degree_profile() const {
    DegreeProfile p;
    p.degree.resize(n_);
    for (int v = 0; v < n_; ++v) p.degree[v] = static_cast<int>(adj_[v].size());
    if (n_ == 0) return p;
    auto [mn, mx] = std::minmax_element(p.degree.begin(), p.degree.end());
    p.min_degree = *mn;
    p.max_degree = *mx;
    return p;
}

std::optional<int> Graph::girth() const {
    // Per-vertex BFS, truncated once the frontier cannot beat the best
    // cycle found so far.  A candidate dist[a]+dist[b]+1 is a closed walk
    // through the root, so it never undercuts the girth, and for any
    // shortest cycle the BFS rooted on it reports its exact length.
    int best = -1;
    std::vector<int> dist(n_), parent(n_);
    for (int s = 0; s < n_; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            if (best != -1 && 2 * dist[a] >= best) break;
            for (int b : adj_[a]) {
                if (dist[b] == -1) {
                    dist[b] = dist[a] + 1;
                    parent[b] = a;
                    q.push(b);
                } else if (b != parent[a]) {
                    int cand = dist[a] + dist[b] + 1;
                    if (best == -1 || cand < best) best = cand;
                }
            }
        }
        if (best == 3) break;  // nothing shorter exists
    }
    if (best == -1) return std::nullopt;
    return best;
}

InducedSubgraph Graph::induced_subgraph(const std::vector<int>& s) const {
    std::vector<int> verts = s;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts) check(v);

    std::vector<int> to_new(n_, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) to_new[verts[i]] = static_cast<int>(i);

    std::vector<std::pair<int, int>> pairs;
    for (const EdgeId& e : edges_)
        if (to_new[e.a] >= 0 && to_new[e.b] >= 0)
            pairs.emplace_back(to_new[e.a], to_new[e.b]);

    InducedSubgraph out;
    out.graph = build(static_cast<int>(verts.size()), pairs);
    out.vertex_map = std::move(verts);
    return out;
}

Graph Graph::without_edge(int u, int v) const {
    EdgeId target(u, v);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edges_.size());
    bool found = false;
    for (const EdgeId& e : edges_) {
        if (e == target) { found = true; continue; }
        pairs.emplace_back(e.a, e.b);
    }
    if (!found)
        throw Error(Errc::VertexOutOfRange,
                    "no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    return build(n_, pairs);
}

Graph Graph::with_edge(int u, int v) const {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edges_.size() + 1);
    for (const EdgeId& e : edges_) pairs.emplace_back(e.a, e.b);
    pairs.emplace_back(u, v);
    return build(n_, pairs);
}

namespace {

bool comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> pairs;
    while (std::getline(in, line)) {
        ++lineno;
        if (comment_or_blank(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw Error(Errc::ParseError,
                            "line " + std::to_string(lineno) + ": expected 'n m'");
            pairs.reserve(static_cast<std::size_t>(m));
        } else {
            long long u, v;
            if (!(ls >> u >> v))
                throw Error(Errc::ParseError,
                            "line " + std::to_string(lineno) + ": expected 'u v'");
            pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
    }
    if (n < 0) throw Error(Errc::ParseError, "missing 'n m' header");
    if (static_cast<long long>(pairs.size()) != m)
        throw Error(Errc::ParseError,
                    "header declares " + std::to_string(m) + " edges, found " +
                        std::to_string(pairs.size()));
    return Graph::build(static_cast<int>(n), pairs);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const EdgeId& e : g.edges()) out << e.a << ' ' << e.b << '\n';
}

}  // namespace aec
