#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aec/graph.hpp"
#include "aec/rational.hpp"

namespace aec {

// A (1,lambda)-embedding as a planarized rotation system.
//
// Nodes of the planarized graph: real vertices 0..n-1, then one degree-4
// crossing node n+k per entry of `crossings`.  Edge k of `edges` is drawn
// as one segment when uncrossed and as two segments split at its crossing
// node otherwise.  Segment ends get deterministic ids
//
//     end_id = 4*edge_index + 2*half + end
//
// where half 0 runs from the edge's smaller endpoint (to the crossing node
// if crossed), half 1 from the crossing node to the larger endpoint, and
// end 0/1 marks the segment's own tail/head in that direction.  Uncrossed
// edges only use half 0.
//
// `rotation[node]` lists the incident segment-end ids in cyclic order.
// Faces are traced by: next dart = rotation successor of the reversed end.
struct Drawing {
    int n = 0;
    std::vector<EdgeId> edges;                   // index order = id order
    std::vector<std::pair<int, int>> crossings;  // pairs of edge indices
    std::vector<std::vector<int>> rotation;      // size n + crossings.size()

    int crossing_count() const { return static_cast<int>(crossings.size()); }
    int node_count() const { return n + crossing_count(); }
    int segment_count() const {
        return static_cast<int>(edges.size()) + 2 * crossing_count();
    }

    Graph base_graph() const;

    // edge index -> crossing index, -1 when uncrossed
    std::vector<int> crossing_of_edge() const;
};

inline int end_id(int edge, int half, int end) { return 4 * edge + 2 * half + end; }
inline int end_edge(int id) { return id / 4; }
inline int end_half(int id) { return (id / 2) % 2; }
inline int opposite_end(int id) { return id ^ 1; }

// Node holding a segment end; requires the crossing map for crossed edges.
int end_node(const Drawing& d, const std::vector<int>& cross_of_edge, int id);

enum class DrawingErrc {
    BadBaseGraph,
    EdgeDoublyCrossed,
    CrossingSharedEndpoint,
    BadCrossingDegree,
    RotationInconsistent,
    Disconnected,
};

const char* drawing_errc_name(DrawingErrc c);

struct DrawingError {
    DrawingErrc kind;
    std::string message;
};

// Checks every Drawing invariant; empty result means the drawing is good.
std::vector<DrawingError> validate_drawing(const Drawing& d);

struct FaceTrace {
    int lambda = 0;                       // V - E + F of the planarized graph
    std::vector<std::vector<int>> faces;  // boundary walks as dart (end id) cycles
};

// Traces all faces of the rotation system.  Throws PreconditionUnmet when
// validate_drawing reports errors.
FaceTrace euler_characteristic(const Drawing& d);

struct BoundsReport {
    int lambda = 0;
    int cr = 0;
    std::optional<int> girth;       // nullopt: base is a forest
    bool thm1_ok = false;           // cr <= v - lambda
    long long thm1_slack = 0;       // (v - lambda) - cr
    std::optional<bool> thm2_ok;    // e <= (2g-2)/(g-2) (v - lambda); nullopt: N/A
    std::optional<Rat> thm2_slack;  // bound - e
};

BoundsReport check_bounds(const Drawing& d);

// Ringel's construction on a crossing-free sphere drawing: the graph on
// V(G) together with one vertex per face (appended in face-trace order),
// adjacent when the underlying elements are adjacent or incident.  Two
// faces count as adjacent when they share at least one edge.
Graph ringel_graph(const Drawing& planar);

// Random planar triangulation on n >= 3 vertices by incremental vertex
// insertion; crossing-free, every face a triangle, lambda = 2.
Drawing generate_planar_triangulation(int n, std::uint64_t seed);

// Random 1-planar drawing: triangulation plus crossing pairs inserted as
// the two diagonals of disjoint quadrilateral regions (adjacent face
// pairs with the shared edge removed), so no edge is ever crossed twice.
Drawing generate_one_planar(int n, std::uint64_t seed);

}  // namespace aec
