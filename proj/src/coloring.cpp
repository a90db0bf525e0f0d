#include "aec/coloring.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>

namespace aec {

int default_palette_size(const Graph& g) {
    return 3 * g.degree_profile().max_degree + 70;
}

ListAssignment uniform_lists(const Graph& g, std::optional<int> k) {
    ListAssignment out;
    if (g.edge_count() == 0) return out;
    int kk = k ? *k : default_palette_size(g);
    if (kk <= 0) throw std::invalid_argument("uniform_lists: k must be positive");
    std::vector<int> palette(kk);
    std::iota(palette.begin(), palette.end(), 0);
    for (const EdgeId& e : g.edges()) out.lists[e] = palette;
    return out;
}

namespace {

// Mutable partial-coloring state with the localized safety check.  For
// each vertex we keep color -> neighbor, which a proper coloring keeps
// single-valued, so alternating walks are forced.
class Extender {
public:
    explicit Extender(int n) : at_(n) {}

    void set(const EdgeId& e, int color) {
        at_[e.a][color] = e.b;
        at_[e.b][color] = e.a;
        colors_[e] = color;
    }

    void erase(const EdgeId& e) {
        auto it = colors_.find(e);
        assert(it != colors_.end());
        at_[e.a].erase(it->second);
        at_[e.b].erase(it->second);
        colors_.erase(it);
    }

    std::optional<int> color_of(int u, int v) const {
        auto it = colors_.find(EdgeId(u, v));
        if (it == colors_.end()) return std::nullopt;
        return it->second;
    }

    const std::unordered_map<int, int>& colors_at(int v) const { return at_[v]; }
    const std::map<EdgeId, int>& all() const { return colors_; }

    // Could edge (u,v) take `color` without an adjacent clash and without
    // closing a bichromatic cycle?  Any new cycle alternates (color, beta)
    // for some beta present at both endpoints and must run from v back
    // to u along forced alternating steps, so we just walk it.
    bool safe(int u, int v, int color) const {
        if (at_[u].count(color) || at_[v].count(color)) return false;
        for (const auto& [beta, first] : at_[v]) {
            if (!at_[u].count(beta)) continue;
            int prev = beta;
            int cur = first;
            while (true) {
                if (cur == u) return false;  // the (color,beta) cycle closes
                int want = (prev == beta) ? color : beta;
                auto it = at_[cur].find(want);
                if (it == at_[cur].end()) break;
                prev = want;
                cur = it->second;
            }
        }
        return true;
    }

private:
    std::vector<std::unordered_map<int, int>> at_;
    std::map<EdgeId, int> colors_;
};

std::vector<int> find_cycle(const std::map<int, std::vector<int>>& sub) {
    std::map<int, int> state;  // 0 fresh, 1 on path, 2 done
    std::vector<int> path, cycle;
    std::function<bool(int, int)> dfs = [&](int v, int parent) {
        state[v] = 1;
        path.push_back(v);
        for (int w : sub.at(v)) {
            if (w == parent) continue;
            if (state[w] == 1) {
                auto it = std::find(path.begin(), path.end(), w);
                cycle.assign(it, path.end());
                return true;
            }
            if (state[w] == 0 && dfs(w, v)) return true;
        }
        state[v] = 2;
        path.pop_back();
        return false;
    };
    for (const auto& [v, nbrs] : sub)
        if (state[v] == 0 && dfs(v, -1)) break;
    return cycle;
}

}  // namespace

VerifyReport verify_coloring(const Graph& g, const EdgeColoring& c) {
    for (const EdgeId& e : g.edges())
        if (!c.colors.count(e))
            throw Error(Errc::IncompleteColoring,
                        "edge (" + std::to_string(e.a) + "," +
                            std::to_string(e.b) + ") has no color");

    VerifyReport rep;
    int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> at(n);  // (color, neighbor)
    for (const EdgeId& e : g.edges()) {
        int col = c.colors.at(e);
        at[e.a].emplace_back(col, e.b);
        at[e.b].emplace_back(col, e.a);
    }

    rep.proper = true;
    for (int v = 0; v < n && rep.proper; ++v) {
        auto lst = at[v];
        std::sort(lst.begin(), lst.end());
        for (std::size_t i = 1; i < lst.size(); ++i)
            if (lst[i].first == lst[i - 1].first) {
                rep.proper = false;
                rep.clash = AdjacentClash{v, EdgeId(v, lst[i - 1].second),
                                          EdgeId(v, lst[i].second), lst[i].first};
                break;
            }
    }

    std::set<std::pair<int, int>> pairs;
    for (int v = 0; v < n; ++v) {
        std::vector<int> cols;
        cols.reserve(at[v].size());
        for (const auto& [col, w] : at[v]) cols.push_back(col);
        std::sort(cols.begin(), cols.end());
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
        for (std::size_t i = 0; i < cols.size(); ++i)
            for (std::size_t j = i + 1; j < cols.size(); ++j)
                pairs.emplace(cols[i], cols[j]);
    }

    std::map<int, std::vector<EdgeId>> klass;
    for (const EdgeId& e : g.edges()) klass[c.colors.at(e)].push_back(e);

    rep.acyclic = true;
    for (const auto& [a, b] : pairs) {
        std::map<int, std::vector<int>> sub;
        for (int col : {a, b})
            for (const EdgeId& e : klass[col]) {
                sub[e.a].push_back(e.b);
                sub[e.b].push_back(e.a);
            }
        std::vector<int> cyc = find_cycle(sub);
        if (!cyc.empty()) {
            rep.acyclic = false;
            rep.witness = BichromaticWitness{std::move(cyc), a, b};
            break;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// elimination

namespace {

Graph graph_from_adj(int n, const std::vector<std::set<int>>& adj) {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v < n; ++v)
        for (int w : adj[v])
            if (w > v) pairs.emplace_back(v, w);
    return Graph::build(n, pairs);
}

EdgeId designated_edge(const Reducible& r, const std::vector<std::set<int>>& adj) {
    switch (r.kind) {
        case ConfigKind::C1:
        case ConfigKind::C2:
        case ConfigKind::C3:
            return EdgeId(r.center, r.witnesses.front());
        case ConfigKind::C4: {
            // remove the edge to the neighbor beyond the six
            // quoted witnesses
            std::set<int> quoted(r.witnesses.begin(), r.witnesses.end());
            for (int u : adj[r.center])
                if (!quoted.count(u)) return EdgeId(r.center, u);
            break;
        }
        case ConfigKind::C5:
        case ConfigKind::C6:
        case ConfigKind::C7:
        case ConfigKind::C8:
            return EdgeId(r.witnesses.front(), r.center);
        case ConfigKind::C9:
            for (int u : r.witnesses)
                if (adj[u].size() == 4) return EdgeId(u, r.center);
            break;
    }
    throw Error(Errc::PreconditionUnmet, "configuration witnesses inconsistent");
}

EliminationStep make_step(const std::vector<std::set<int>>& adj, EdgeId e,
                          Reducible ctx, int center) {
    EliminationStep s;
    s.edge = e;
    s.center = center;
    s.other = e.other(center);
    s.context = std::move(ctx);
    s.center_nbrs.assign(adj[s.center].begin(), adj[s.center].end());
    s.other_nbrs.assign(adj[s.other].begin(), adj[s.other].end());
    auto note = [&](int v) { s.degrees[v] = static_cast<int>(adj[v].size()); };
    note(s.center);
    note(s.other);
    for (int w : s.center_nbrs) note(w);
    for (int w : s.other_nbrs) note(w);
    return s;
}

}  // namespace

std::vector<EliminationStep> elimination_order(const Graph& g) {
    DensityCertificate cert = is_linear(g, LinearityParams{Rat(4), -1});
    if (!cert.verdict) throw DensityRefusal(std::move(cert));

    int n = g.vertex_count();
    std::vector<std::set<int>> adj(n);
    for (const EdgeId& e : g.edges()) {
        adj[e.a].insert(e.b);
        adj[e.b].insert(e.a);
    }

    std::vector<EliminationStep> steps;
    steps.reserve(g.edge_count());
    long long remaining = g.edge_count();
    while (remaining > 0) {
        int low = -1;
        for (int v = 0; v < n; ++v)
            if (!adj[v].empty() && adj[v].size() <= 3) {
                low = v;
                break;
            }
        EliminationStep step;
        if (low >= 0) {
            int u = *adj[low].begin();
            step = make_step(
                adj, EdgeId(low, u),
                Reducible{Reducible::Variant::LowDegree, ConfigKind::C1, low, {}},
                low);
        } else {
            // every non-isolated vertex has degree >= 4 here, and every
            // subgraph of a certified graph stays within e <= 4v-1, so the
            // structural lemma promises a configuration
            Graph cur = graph_from_adj(n, adj);
            auto r = find_configuration(cur);
            if (!r)
                throw LemmaViolationError(
                    LemmaViolation{"no configuration although delta >= 4 on the "
                                   "non-isolated part and e <= 4v-1",
                                   discharging_audit(cur)},
                    cur);
            step = make_step(adj, designated_edge(*r, adj), *r, r->center);
        }
        adj[step.edge.a].erase(step.edge.b);
        adj[step.edge.b].erase(step.edge.a);
        --remaining;
        steps.push_back(std::move(step));
    }
    return steps;
}

// ---------------------------------------------------------------------------
// extension recipes

namespace {

std::vector<int> h_neighbors(const std::vector<int>& nbrs, int excluded) {
    std::vector<int> out;
    out.reserve(nbrs.size());
    for (int w : nbrs)
        if (w != excluded) out.push_back(w);
    return out;
}

std::set<int> color_set(const Extender& ext, int v) {
    std::set<int> out;
    for (const auto& [c, w] : ext.colors_at(v)) out.insert(c);
    return out;
}

bool is_small_center_kind(const Reducible& r) {
    return r.variant == Reducible::Variant::LowDegree ||
           r.kind == ConfigKind::C1 || r.kind == ConfigKind::C2 ||
           r.kind == ConfigKind::C3;
}

bool is_big_center_kind(const Reducible& r) {
    return r.variant == Reducible::Variant::Config &&
           (r.kind == ConfigKind::C5 || r.kind == ConfigKind::C6 ||
            r.kind == ConfigKind::C7 || r.kind == ConfigKind::C8);
}

// Forbidden set of the per-configuration recipe; `list` minus it is the
// candidate set A.
std::set<int> recipe_forbidden(const Extender& ext, const EliminationStep& step,
                               ForbiddenTrace& trace) {
    const Reducible& ctx = step.context;
    int v = step.center;
    int u = step.other;
    std::set<int> forbidden;
    auto take = [&](int x) {
        for (const auto& [c, w] : ext.colors_at(x)) forbidden.insert(c);
    };

    if (is_small_center_kind(ctx)) {
        // A = L \ (C(u) + colors at v's remaining neighbors); any cycle
        // through uv would have to leave v through one of them carrying
        // the new color
        trace.recipe = "small-side";
        take(u);
        for (int x : h_neighbors(step.center_nbrs, u)) take(x);
    } else if (ctx.kind == ConfigKind::C4) {
        // two branches around whether some c(v x_j) avoids C(x7)
        std::set<int> c_x7 = color_set(ext, u);
        int skip = -1, skip_color = -1;
        for (int xi : ctx.witnesses) {
            auto col = ext.color_of(v, xi);
            if (col && !c_x7.count(*col)) {
                skip = xi;
                skip_color = *col;
                break;
            }
        }
        if (skip >= 0) {
            trace.recipe = "c4-skip-witness";
            for (int xi : ctx.witnesses)
                if (xi != skip) take(xi);
            take(u);
            forbidden.insert(skip_color);  // keep the extension proper at v
        } else {
            trace.recipe = "c4-all-witnesses";
            for (int xi : ctx.witnesses) take(xi);
            take(u);
        }
    } else if (is_big_center_kind(ctx)) {
        // A = L \ (C(u) + C(v) + big-neighbor colors + C(W_H(v,u)))
        trace.recipe = "big-side";
        take(u);
        take(v);
        std::set<int> c_u = color_set(ext, u);
        for (int w : h_neighbors(step.center_nbrs, u)) {
            if (step.degrees.at(w) > 7) take(w);
            auto col = ext.color_of(v, w);
            if (col && c_u.count(*col)) take(w);  // w in W_H(v,u)
        }
    } else {  // C9
        trace.recipe = "c9";
        take(u);
        take(v);
        std::set<int> c_u = color_set(ext, u);
        for (int w : h_neighbors(step.center_nbrs, u)) {
            auto col = ext.color_of(v, w);
            if (col && c_u.count(*col)) take(w);
        }
    }
    trace.set_sizes["forbidden"] = static_cast<int>(forbidden.size());
    return forbidden;
}

// Big-side colors at the C9 center: c(vw) for remaining neighbors w whose
// removal-time degree exceeds 7.
std::set<int> c9_big_colors(const Extender& ext, const EliminationStep& step) {
    std::set<int> big;
    for (int w : h_neighbors(step.center_nbrs, step.other)) {
        if (step.degrees.at(w) <= 7) continue;
        auto col = ext.color_of(step.center, w);
        if (col) big.insert(*col);
    }
    return big;
}

// Recolor maneuver: while some edge at the degree-4 witness u carries
// a big-side color, erase it and recolor from its own list away from the
// big-side colors and the other witnesses' palettes.
bool c9_maneuver(Extender& ext, const EliminationStep& step,
                 const ListAssignment& lists, ExtensionResult& res) {
    int v = step.center;
    int u = step.other;
    std::set<int> big = c9_big_colors(ext, step);
    if (big.empty()) return false;

    std::vector<int> u_rest = h_neighbors(step.other_nbrs, v);
    bool changed = false;
    for (int x : u_rest) {
        auto cux = ext.color_of(u, x);
        if (!cux || !big.count(*cux)) continue;
        EdgeId ux(u, x);
        auto lit = lists.lists.find(ux);
        if (lit == lists.lists.end()) continue;
        int old = *cux;
        ext.erase(ux);
        std::set<int> forbid = big;
        for (const auto& [c, w] : ext.colors_at(x)) forbid.insert(c);
        for (int y : u_rest)
            if (y != x)
                for (const auto& [c, w] : ext.colors_at(y)) forbid.insert(c);
        int chosen = -1;
        for (int c : lit->second)
            if (!forbid.count(c) && ext.safe(u, x, c)) {
                chosen = c;
                break;
            }
        if (chosen < 0) {
            ext.set(ux, old);
            continue;
        }
        ext.set(ux, chosen);
        res.recolored.emplace_back(ux, chosen);
        changed = true;
    }
    return changed;
}

ExtensionResult extend_on(Extender& ext, const EliminationStep& step,
                          const ListAssignment& lists) {
    ExtensionResult res;
    const EdgeId& e = step.edge;
    auto lit = lists.lists.find(e);
    if (lit == lists.lists.end() || lit->second.empty())
        throw Error(Errc::PreconditionUnmet,
                    "no color list for edge (" + std::to_string(e.a) + "," +
                        std::to_string(e.b) + ")");
    const std::vector<int>& list = lit->second;

    auto attempt = [&]() -> bool {
        std::set<int> forbidden = recipe_forbidden(ext, step, res.trace);
        for (int c : list) {
            if (forbidden.count(c)) continue;
            if (ext.safe(e.a, e.b, c)) {
                ext.set(e, c);
                res.ok = true;
                res.color = c;
            } else {
                res.trace.rejected.push_back(c);
            }
            return res.ok;  // smallest color of A only; the fallback rescans
        }
        return false;
    };

    if (attempt()) return res;

    if (step.context.variant == Reducible::Variant::Config &&
        step.context.kind == ConfigKind::C9 && c9_maneuver(ext, step, lists, res)) {
        res.trace.c9_recolor = true;
        if (attempt()) return res;
    }

    res.trace.fallback_scan = true;
    for (int c : list) {
        if (ext.safe(e.a, e.b, c)) {
            ext.set(e, c);
            res.ok = true;
            res.color = c;
            return res;
        }
        res.trace.rejected.push_back(c);
    }
    res.ok = false;
    return res;
}

}  // namespace

ExtensionResult extend_coloring(EdgeColoring& h_coloring,
                                const EliminationStep& step,
                                const ListAssignment& lists) {
    int n = step.edge.b + 1;
    for (const auto& [e, c] : h_coloring.colors) n = std::max(n, e.b + 1);
    for (int w : step.center_nbrs) n = std::max(n, w + 1);
    for (int w : step.other_nbrs) n = std::max(n, w + 1);
    Extender ext(n);
    for (const auto& [e, c] : h_coloring.colors) ext.set(e, c);
    ExtensionResult res = extend_on(ext, step, lists);
    h_coloring.colors = ext.all();
    return res;
}

ColorOutcome color_graph(const Graph& g, const ListAssignment& lists) {
    ColorOutcome out;
    int want = default_palette_size(g);
    for (const EdgeId& e : g.edges()) {
        auto it = lists.lists.find(e);
        if (it == lists.lists.end() || it->second.empty())
            throw Error(Errc::PreconditionUnmet,
                        "list assignment misses edge (" + std::to_string(e.a) +
                            "," + std::to_string(e.b) + ")");
        if (static_cast<int>(it->second.size()) < want)
            out.small_lists.push_back(e);  // advisory; the engine still tries
    }

    std::vector<EliminationStep> steps = elimination_order(g);

    Extender ext(g.vertex_count());
    for (std::size_t i = steps.size(); i-- > 0;) {
        ExtensionResult res = extend_on(ext, steps[i], lists);
        if (!res.ok) {
            FailureReport fr;
            fr.step_index = i;
            fr.step = steps[i];
            fr.n = g.vertex_count();
            for (const auto& [e, c] : ext.all()) fr.edges.push_back(e);
            fr.edges.push_back(steps[i].edge);
            std::sort(fr.edges.begin(), fr.edges.end());
            fr.trace = std::move(res.trace);
            out.failure = std::move(fr);
            return out;
        }
    }

    out.coloring.colors = ext.all();
    out.final_check = verify_coloring(g, out.coloring);
    out.success = out.final_check.proper && out.final_check.acyclic;
    return out;
}

std::optional<int> chi_a_bruteforce(const Graph& g, int k_max,
                                    EdgeColoring* witness) {
    if (g.edge_count() > 20)
        throw Error(Errc::TooLarge, "bruteforce capped at e(G) <= 20");
    if (g.edge_count() == 0) {
        if (witness) witness->colors.clear();
        return 0;
    }

    const auto& edges = g.edges();
    int delta = g.degree_profile().max_degree;

    for (int k = delta; k <= k_max; ++k) {
        Extender ext(g.vertex_count());
        // colors are interchangeable, so a fresh color may only follow the
        // highest one already used
        std::function<bool(std::size_t, int)> rec = [&](std::size_t i, int used) {
            if (i == edges.size()) return true;
            int cap = std::min(k - 1, used);
            for (int c = 0; c <= cap; ++c) {
                if (!ext.safe(edges[i].a, edges[i].b, c)) continue;
                ext.set(edges[i], c);
                if (rec(i + 1, std::max(used, c + 1))) return true;
                ext.erase(edges[i]);
            }
            return false;
        };
        if (rec(0, 0)) {
            if (witness) witness->colors = ext.all();
            return k;
        }
    }
    return std::nullopt;
}

}  // namespace aec
