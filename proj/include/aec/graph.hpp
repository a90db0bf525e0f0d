#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aec {

enum class Errc {
    LoopEdge,
    DuplicateEdge,
    VertexOutOfRange,
    EmptyGraph,
    TooLarge,
    PreconditionUnmet,
    NotPlanarDrawing,
    IncompleteColoring,
    ParseError,
    TheoremViolation,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
          code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

// Canonical unordered vertex pair: a < b always.
struct EdgeId {
    int a = 0;
    int b = 0;
    EdgeId() = default;
    EdgeId(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {
        if (u == v) throw Error(Errc::LoopEdge, "edge (" + std::to_string(u) +
                                                    "," + std::to_string(v) + ")");
    }
    bool contains(int v) const { return v == a || v == b; }
    int other(int v) const { return v == a ? b : a; }
    friend bool operator==(const EdgeId& x, const EdgeId& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator<(const EdgeId& x, const EdgeId& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }
};

struct DegreeProfile {
    std::vector<int> degree;
    int min_degree = 0;
    int max_degree = 0;
};

struct InducedSubgraph;

// Simple undirected graph on dense vertex ids 0..n-1.  Immutable after
// construction; "mutation" returns a new value.  Adjacency is kept both
// as the sorted canonical edge list (identity) and as per-vertex sorted
// neighbor lists (the configuration scans iterate neighborhoods a lot).
class Graph {
public:
    Graph() = default;

    static Graph build(int n, const std::vector<std::pair<int, int>>& pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<EdgeId>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return check(v), adj_[v]; }
    int degree(int v) const { return check(v), static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    DegreeProfile degree_profile() const;

    // Length of a shortest cycle; nullopt marks a forest.
    std::optional<int> girth() const;

    // Vertices of S relabeled 0..|S|-1 in ascending order of original id.
    InducedSubgraph induced_subgraph(const std::vector<int>& s) const;

    Graph without_edge(int u, int v) const;
    Graph with_edge(int u, int v) const;

    friend bool operator==(const Graph& x, const Graph& y) {
        return x.n_ == y.n_ && x.edges_ == y.edges_;
    }

private:
    void check(int v) const {
        if (v < 0 || v >= n_)
            throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
    }

    int n_ = 0;
    std::vector<EdgeId> edges_;           // sorted
    std::vector<std::vector<int>> adj_;   // sorted per vertex
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map;  // vertex_map[new_id] = original id
};

// Edge-list text interchange: first line "n m", then m lines "u v"
// (0-based).  Lines starting with '#' are comments.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace aec
