#include "aec/embedding.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_map>

#include "aec/rng.hpp"

namespace aec {

Graph Drawing::base_graph() const {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edges.size());
    for (const EdgeId& e : edges) pairs.emplace_back(e.a, e.b);
    return Graph::build(n, pairs);
}

std::vector<int> Drawing::crossing_of_edge() const {
    std::vector<int> m(edges.size(), -1);
    for (int k = 0; k < crossing_count(); ++k) {
        auto [i, j] = crossings[k];
        if (i >= 0 && i < static_cast<int>(edges.size())) m[i] = k;
        if (j >= 0 && j < static_cast<int>(edges.size())) m[j] = k;
    }
    return m;
}

int end_node(const Drawing& d, const std::vector<int>& cross_of_edge, int id) {
    int e = end_edge(id);
    int h = end_half(id);
    int k = id & 1;
    const EdgeId& ed = d.edges[e];
    int cross = cross_of_edge[e];
    if (cross < 0) return k == 0 ? ed.a : ed.b;
    int xnode = d.n + cross;
    if (h == 0) return k == 0 ? ed.a : xnode;
    return k == 0 ? xnode : ed.b;
}

const char* drawing_errc_name(DrawingErrc c) {
    switch (c) {
        case DrawingErrc::BadBaseGraph: return "BadBaseGraph";
        case DrawingErrc::EdgeDoublyCrossed: return "EdgeDoublyCrossed";
        case DrawingErrc::CrossingSharedEndpoint: return "CrossingSharedEndpoint";
        case DrawingErrc::BadCrossingDegree: return "BadCrossingDegree";
        case DrawingErrc::RotationInconsistent: return "RotationInconsistent";
        case DrawingErrc::Disconnected: return "Disconnected";
    }
    return "DrawingError";
}

namespace {

std::vector<int> valid_end_ids(const Drawing& d, const std::vector<int>& cox) {
    std::vector<int> ids;
    ids.reserve(d.segment_count() * 2);
    for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
        ids.push_back(end_id(e, 0, 0));
        ids.push_back(end_id(e, 0, 1));
        if (cox[e] >= 0) {
            ids.push_back(end_id(e, 1, 0));
            ids.push_back(end_id(e, 1, 1));
        }
    }
    return ids;
}

}  // namespace

std::vector<DrawingError> validate_drawing(const Drawing& d) {
    std::vector<DrawingError> errs;
    auto fail = [&](DrawingErrc k, std::string m) {
        errs.push_back({k, std::move(m)});
    };

    if (d.n < 0) {
        fail(DrawingErrc::BadBaseGraph, "negative vertex count");
        return errs;
    }

    int m = static_cast<int>(d.edges.size());
    std::set<EdgeId> seen;
    for (int i = 0; i < m; ++i) {
        const EdgeId& e = d.edges[i];
        if (e.a >= e.b)
            fail(DrawingErrc::BadBaseGraph,
                 "edge " + std::to_string(i) + " is a loop");
        else if (e.a < 0 || e.b >= d.n)
            fail(DrawingErrc::BadBaseGraph,
                 "edge " + std::to_string(i) + " endpoint out of range");
        else if (!seen.insert(e).second)
            fail(DrawingErrc::BadBaseGraph,
                 "duplicate edge (" + std::to_string(e.a) + "," +
                     std::to_string(e.b) + ")");
    }
    if (!errs.empty()) return errs;

    std::vector<int> times_crossed(m, 0);
    for (int k = 0; k < d.crossing_count(); ++k) {
        auto [i, j] = d.crossings[k];
        if (i < 0 || i >= m || j < 0 || j >= m || i == j) {
            fail(DrawingErrc::BadBaseGraph,
                 "crossing " + std::to_string(k) + " references bad edge indices");
            continue;
        }
        ++times_crossed[i];
        ++times_crossed[j];
        const EdgeId& ei = d.edges[i];
        const EdgeId& ej = d.edges[j];
        if (ei.contains(ej.a) || ei.contains(ej.b))
            fail(DrawingErrc::CrossingSharedEndpoint,
                 "crossing " + std::to_string(k) + " edges share an endpoint");
    }
    for (int e = 0; e < m; ++e)
        if (times_crossed[e] > 1)
            fail(DrawingErrc::EdgeDoublyCrossed,
                 "edge " + std::to_string(e) + " appears in " +
                     std::to_string(times_crossed[e]) + " crossing pairs");
    if (!errs.empty()) return errs;

    std::vector<int> cox = d.crossing_of_edge();
    int nodes = d.node_count();
    if (static_cast<int>(d.rotation.size()) != nodes) {
        fail(DrawingErrc::RotationInconsistent,
             "rotation table has " + std::to_string(d.rotation.size()) +
                 " nodes, expected " + std::to_string(nodes));
        return errs;
    }

    // every valid segment-end exactly once, at its own node
    std::vector<int> expected = valid_end_ids(d, cox);
    int max_id = 4 * m;
    std::vector<char> is_valid(max_id, 0);
    for (int id : expected) is_valid[id] = 1;
    std::vector<int> count(max_id, 0);
    for (int node = 0; node < nodes && errs.empty(); ++node) {
        for (int id : d.rotation[node]) {
            if (id < 0 || id >= max_id || !is_valid[id]) {
                fail(DrawingErrc::RotationInconsistent,
                     "node " + std::to_string(node) + " lists unknown end " +
                         std::to_string(id));
                break;
            }
            if (++count[id] > 1) {
                fail(DrawingErrc::RotationInconsistent,
                     "end " + std::to_string(id) + " listed twice");
                break;
            }
            if (end_node(d, cox, id) != node) {
                fail(DrawingErrc::RotationInconsistent,
                     "end " + std::to_string(id) + " listed at node " +
                         std::to_string(node) + " but belongs to node " +
                         std::to_string(end_node(d, cox, id)));
                break;
            }
        }
    }
    if (!errs.empty()) return errs;
    for (int id : expected)
        if (count[id] == 0) {
            fail(DrawingErrc::RotationInconsistent,
                 "end " + std::to_string(id) + " missing from rotation");
            return errs;
        }

    // crossing nodes: degree 4, the two segments of each edge opposite
    for (int k = 0; k < d.crossing_count(); ++k) {
        const auto& r = d.rotation[d.n + k];
        if (r.size() != 4) {
            fail(DrawingErrc::BadCrossingDegree,
                 "crossing node " + std::to_string(d.n + k) + " has degree " +
                     std::to_string(r.size()));
            continue;
        }
        if (end_edge(r[0]) != end_edge(r[2]) || end_edge(r[1]) != end_edge(r[3]))
            fail(DrawingErrc::BadCrossingDegree,
                 "crossing node " + std::to_string(d.n + k) +
                     ": segments of a crossed edge are not opposite");
    }
    if (!errs.empty()) return errs;

    // planarized graph connected (single lone vertex allowed)
    if (d.segment_count() == 0) {
        if (nodes > 1) fail(DrawingErrc::Disconnected, "no segments, several nodes");
    } else {
        std::vector<int> comp(nodes, -1);
        std::queue<int> q;
        comp[end_node(d, cox, expected[0])] = 0;
        q.push(end_node(d, cox, expected[0]));
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int id : d.rotation[v]) {
                int w = end_node(d, cox, opposite_end(id));
                if (comp[w] == -1) {
                    comp[w] = 0;
                    q.push(w);
                }
            }
        }
        for (int v = 0; v < nodes; ++v)
            if (comp[v] == -1) {
                fail(DrawingErrc::Disconnected,
                     "node " + std::to_string(v) + " unreachable");
                break;
            }
    }
    return errs;
}

namespace {

void require_valid(const Drawing& d) {
    auto errs = validate_drawing(d);
    if (!errs.empty())
        throw Error(Errc::PreconditionUnmet,
                    std::string(drawing_errc_name(errs[0].kind)) + ": " +
                        errs[0].message);
}

// Face tracing on a drawing that already passed validation.
FaceTrace trace_faces(const Drawing& d) {
    std::vector<int> cox = d.crossing_of_edge();
    std::vector<int> ends = valid_end_ids(d, cox);

    // end id -> (node, position) for rotation successor lookups
    std::unordered_map<int, std::pair<int, int>> pos;
    pos.reserve(ends.size() * 2);
    for (int node = 0; node < d.node_count(); ++node)
        for (int i = 0; i < static_cast<int>(d.rotation[node].size()); ++i)
            pos[d.rotation[node][i]] = {node, i};

    FaceTrace out;
    std::set<int> visited;
    std::sort(ends.begin(), ends.end());
    for (int start : ends) {
        if (visited.count(start)) continue;
        std::vector<int> walk;
        int cur = start;
        do {
            visited.insert(cur);
            walk.push_back(cur);
            auto [node, idx] = pos.at(opposite_end(cur));
            const auto& r = d.rotation[node];
            cur = r[(idx + 1) % r.size()];
        } while (cur != start);
        out.faces.push_back(std::move(walk));
    }

    int V = d.node_count();
    int E = d.segment_count();
    int F = static_cast<int>(out.faces.size());
    if (E == 0 && V == 1) F = 1;  // a lone vertex still bounds the sphere face
    out.lambda = V - E + F;
    return out;
}

}  // namespace

FaceTrace euler_characteristic(const Drawing& d) {
    require_valid(d);
    return trace_faces(d);
}

BoundsReport check_bounds(const Drawing& d) {
    FaceTrace t = euler_characteristic(d);
    Graph base = d.base_graph();

    BoundsReport r;
    r.lambda = t.lambda;
    r.cr = d.crossing_count();
    r.girth = base.girth();
    long long v_minus_lambda = base.vertex_count() - r.lambda;
    r.thm1_slack = v_minus_lambda - r.cr;
    r.thm1_ok = r.thm1_slack >= 0;
    if (r.girth) {
        int g = *r.girth;  // >= 3 in a simple graph
        Rat bound = Rat(2 * g - 2, g - 2) * Rat(v_minus_lambda);
        r.thm2_slack = bound - Rat(base.edge_count());
        r.thm2_ok = *r.thm2_slack >= Rat(0);
    }
    return r;
}

Graph ringel_graph(const Drawing& planar) {
    if (planar.crossing_count() > 0)
        throw Error(Errc::NotPlanarDrawing,
                    std::to_string(planar.crossing_count()) + " crossings present");
    require_valid(planar);
    FaceTrace t = trace_faces(planar);
    if (t.lambda != 2)
        throw Error(Errc::NotPlanarDrawing,
                    "drawing traces to lambda=" + std::to_string(t.lambda));

    std::vector<int> cox = planar.crossing_of_edge();
    int F = static_cast<int>(t.faces.size());

    std::unordered_map<int, int> face_of;
    for (int f = 0; f < F; ++f)
        for (int dart : t.faces[f]) face_of[dart] = f;

    std::set<EdgeId> out;
    for (const EdgeId& e : planar.edges) out.insert(e);
    for (int f = 0; f < F; ++f)
        for (int dart : t.faces[f])
            out.insert(EdgeId(end_node(planar, cox, dart), planar.n + f));
    for (int e = 0; e < static_cast<int>(planar.edges.size()); ++e) {
        int f1 = face_of.at(end_id(e, 0, 0));
        int f2 = face_of.at(end_id(e, 0, 1));
        if (f1 != f2) out.insert(EdgeId(planar.n + f1, planar.n + f2));
    }

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(out.size());
    for (const EdgeId& e : out) pairs.emplace_back(e.a, e.b);
    return Graph::build(planar.n + F, pairs);
}

// ---------------------------------------------------------------------------
// generators

namespace {

struct GenFace {
    std::array<int, 3> darts{};
    bool alive = true;
    bool used = false;  // consumed by a crossing insertion
};

// Incremental rotation-system builder.  All faces stay triangles: vertex
// insertion splits one into three, a crossing replaces two by four.
struct Builder {
    int n_real = 0;
    std::vector<EdgeId> edges;
    std::map<EdgeId, int> edge_index;
    std::vector<int> cross_of;
    std::vector<std::pair<int, int>> crossings;
    std::vector<std::vector<int>> rot;
    std::vector<GenFace> faces;
    std::unordered_map<int, int> face_of;  // dart -> alive face

    int add_edge(int u, int v) {
        EdgeId e(u, v);
        int idx = static_cast<int>(edges.size());
        edges.push_back(e);
        edge_index[e] = idx;
        cross_of.push_back(-1);
        return idx;
    }

    int node_of(int id) const {
        int e = end_edge(id), h = end_half(id), k = id & 1;
        if (cross_of[e] < 0) return k == 0 ? edges[e].a : edges[e].b;
        int x = n_real + cross_of[e];
        if (h == 0) return k == 0 ? edges[e].a : x;
        return k == 0 ? x : edges[e].b;
    }

    int tail(int dart) const { return node_of(dart); }

    void insert_after(int node, int after, int id) {
        auto& r = rot[node];
        auto it = std::find(r.begin(), r.end(), after);
        assert(it != r.end());
        r.insert(it + 1, id);
    }

    void replace_end(int node, int old_id, int new_id) {
        auto& r = rot[node];
        auto it = std::find(r.begin(), r.end(), old_id);
        assert(it != r.end());
        *it = new_id;
    }

    int add_face(int d0, int d1, int d2, bool used) {
        int idx = static_cast<int>(faces.size());
        faces.push_back({{d0, d1, d2}, true, used});
        face_of[d0] = idx;
        face_of[d1] = idx;
        face_of[d2] = idx;
        return idx;
    }

    void kill_face(int f) {
        faces[f].alive = false;
        for (int dart : faces[f].darts) {
            auto it = face_of.find(dart);
            if (it != face_of.end() && it->second == f) face_of.erase(it);
        }
    }

    void init_triangle() {
        rot.assign(3, {});
        int e0 = add_edge(0, 1), e1 = add_edge(0, 2), e2 = add_edge(1, 2);
        rot[0] = {end_id(e0, 0, 0), end_id(e1, 0, 0)};
        rot[1] = {end_id(e0, 0, 1), end_id(e2, 0, 0)};
        rot[2] = {end_id(e1, 0, 1), end_id(e2, 0, 1)};
        add_face(end_id(e0, 0, 0), end_id(e2, 0, 0), end_id(e1, 0, 1), false);
        add_face(end_id(e0, 0, 1), end_id(e1, 0, 0), end_id(e2, 0, 1), false);
    }

    // Split face (a->b, b->c, c->a) into three around new vertex w.
    void insert_vertex(int face_idx, int w) {
        GenFace f = faces[face_idx];
        int d1 = f.darts[0], d2 = f.darts[1], d3 = f.darts[2];
        int a = tail(d1), b = tail(d2), c = tail(d3);
        rot.emplace_back();
        int ea = add_edge(a, w), eb = add_edge(b, w), ec = add_edge(c, w);
        // w is the largest id so far, so each new edge's end 0 sits at the
        // old corner and end 1 at w
        insert_after(a, opposite_end(d3), end_id(ea, 0, 0));
        insert_after(b, opposite_end(d1), end_id(eb, 0, 0));
        insert_after(c, opposite_end(d2), end_id(ec, 0, 0));
        rot[w] = {end_id(ea, 0, 1), end_id(ec, 0, 1), end_id(eb, 0, 1)};
        kill_face(face_idx);
        add_face(d1, end_id(eb, 0, 0), end_id(ea, 0, 1), false);
        add_face(d2, end_id(ec, 0, 0), end_id(eb, 0, 1), false);
        add_face(d3, end_id(ea, 0, 0), end_id(ec, 0, 1), false);
    }

    // Quadrilateral move: faces (a->b, b->c, c->a) and (b->a, a->d, d->b)
    // turn into four triangles around a new crossing of ab and the fresh
    // chord cd.  Both faces must be untouched triangulation faces.
    bool try_crossing(int f1_idx, int which) {
        if (f1_idx < 0 || f1_idx >= static_cast<int>(faces.size())) return false;
        const GenFace f1 = faces[f1_idx];
        if (!f1.alive || f1.used) return false;
        int d1 = f1.darts[which % 3];
        int d2 = f1.darts[(which + 1) % 3];
        int d3 = f1.darts[(which + 2) % 3];

        auto it = face_of.find(opposite_end(d1));
        if (it == face_of.end() || it->second == f1_idx) return false;
        int f2_idx = it->second;
        const GenFace f2 = faces[f2_idx];
        if (!f2.alive || f2.used) return false;

        int j = 0;
        while (f2.darts[j] != opposite_end(d1)) ++j;
        int e2 = f2.darts[(j + 1) % 3];
        int e3 = f2.darts[(j + 2) % 3];

        int a = tail(d1), b = tail(d2), c = tail(d3), dd = tail(e3);
        if (c == dd || edge_index.count(EdgeId(c, dd))) return false;

        int eab = end_edge(d1);
        if (cross_of[eab] != -1) return false;

        int k = static_cast<int>(crossings.size());
        assert(static_cast<int>(rot.size()) == n_real + k);
        int ecd = add_edge(c, dd);
        crossings.emplace_back(eab, ecd);
        cross_of[eab] = k;
        cross_of[ecd] = k;

        int p = edges[eab].a, q = edges[eab].b;
        int ab_at_a = (a == p) ? end_id(eab, 0, 0) : end_id(eab, 1, 1);
        int ab_at_b = (b == p) ? end_id(eab, 0, 0) : end_id(eab, 1, 1);
        int ab_x_a = (a == p) ? end_id(eab, 0, 1) : end_id(eab, 1, 0);
        int ab_x_b = (b == p) ? end_id(eab, 0, 1) : end_id(eab, 1, 0);
        int r = edges[ecd].a;
        int cd_at_c = (c == r) ? end_id(ecd, 0, 0) : end_id(ecd, 1, 1);
        int cd_at_d = (dd == r) ? end_id(ecd, 0, 0) : end_id(ecd, 1, 1);
        int cd_x_c = (c == r) ? end_id(ecd, 0, 1) : end_id(ecd, 1, 0);
        int cd_x_d = (dd == r) ? end_id(ecd, 0, 1) : end_id(ecd, 1, 0);

        // ab keeps its end id at the min endpoint; the max endpoint's end
        // moves from half 0 to half 1 in place
        replace_end(q, end_id(eab, 0, 1), end_id(eab, 1, 1));
        insert_after(c, opposite_end(d2), cd_at_c);
        insert_after(dd, opposite_end(e2), cd_at_d);
        rot.push_back({ab_x_a, cd_x_c, ab_x_b, cd_x_d});

        kill_face(f1_idx);
        kill_face(f2_idx);
        add_face(d3, ab_at_a, cd_x_c, true);  // (c->a, a->x, x->c)
        add_face(e2, cd_at_d, ab_x_a, true);  // (a->d, d->x, x->a)
        add_face(e3, ab_at_b, cd_x_d, true);  // (d->b, b->x, x->d)
        add_face(d2, cd_at_c, ab_x_b, true);  // (b->c, c->x, x->b)
        return true;
    }

    Drawing finish() const {
        int m = static_cast<int>(edges.size());
        std::vector<int> order(m);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int i, int j) { return edges[i] < edges[j]; });
        std::vector<int> newidx(m);
        for (int i = 0; i < m; ++i) newidx[order[i]] = i;

        Drawing d;
        d.n = n_real;
        d.edges.resize(m);
        for (int i = 0; i < m; ++i) d.edges[newidx[i]] = edges[i];
        d.crossings.reserve(crossings.size());
        for (auto [i, j] : crossings)
            d.crossings.emplace_back(std::min(newidx[i], newidx[j]),
                                     std::max(newidx[i], newidx[j]));
        d.rotation.resize(rot.size());
        for (std::size_t node = 0; node < rot.size(); ++node) {
            d.rotation[node].reserve(rot[node].size());
            for (int id : rot[node])
                d.rotation[node].push_back(
                    end_id(newidx[end_edge(id)], end_half(id), id & 1));
        }
        return d;
    }
};

void build_triangulation(Builder& b, int n, DetRng& rng) {
    b.n_real = n;
    b.init_triangle();
    for (int w = 3; w < n; ++w) {
        int f;
        do {
            f = rng.below(static_cast<int>(b.faces.size()));
        } while (!b.faces[f].alive);
        b.insert_vertex(f, w);
    }
}

}  // namespace

Drawing generate_planar_triangulation(int n, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("triangulation needs n >= 3");
    DetRng rng(seed);
    Builder b;
    build_triangulation(b, n, rng);
    return b.finish();
}

Drawing generate_one_planar(int n, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("generate_one_planar needs n >= 3");
    DetRng rng(seed);
    Builder b;
    build_triangulation(b, n, rng);

    int target = rng.below(std::max(1, n / 4) + 1);
    int placed = 0;
    for (int attempt = 0; placed < target && attempt < 20 * target + 20; ++attempt) {
        int f = rng.below(static_cast<int>(b.faces.size()));
        int which = rng.below(3);
        if (b.try_crossing(f, which)) ++placed;
    }
    return b.finish();
}

}  // namespace aec
