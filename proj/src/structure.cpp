#include "aec/structure.hpp"

#include <algorithm>
#include <cassert>

namespace aec {

const char* config_kind_name(ConfigKind k) {
    switch (k) {
        case ConfigKind::C1: return "C1";
        case ConfigKind::C2: return "C2";
        case ConfigKind::C3: return "C3";
        case ConfigKind::C4: return "C4";
        case ConfigKind::C5: return "C5";
        case ConfigKind::C6: return "C6";
        case ConfigKind::C7: return "C7";
        case ConfigKind::C8: return "C8";
        case ConfigKind::C9: return "C9";
    }
    return "?";
}

namespace {

// C1..C4 ask for a k-vertex with a quota of 19^- neighbors.
struct SmallCenterRule {
    ConfigKind kind;
    int center_degree;
    int quota;
};
constexpr SmallCenterRule kSmallCenterRules[] = {
    {ConfigKind::C1, 4, 1},
    {ConfigKind::C2, 5, 2},
    {ConfigKind::C3, 6, 4},
    {ConfigKind::C4, 7, 6},
};

std::optional<Reducible> config_at(const Graph& g, const std::vector<int>& deg,
                                   int v) {
    int d = deg[v];
    for (const auto& rule : kSmallCenterRules) {
        if (d != rule.center_degree) continue;
        std::vector<int> low;
        for (int u : g.neighbors(v)) {
            if (deg[u] <= 19) low.push_back(u);
            if (static_cast<int>(low.size()) == rule.quota) break;
        }
        if (static_cast<int>(low.size()) == rule.quota)
            return Reducible{Reducible::Variant::Config, rule.kind, v,
                             std::move(low)};
    }

    std::vector<int> small;
    for (int u : g.neighbors(v))
        if (deg[u] <= 7) small.push_back(u);
    int s = static_cast<int>(small.size());

    auto ranged = [&](ConfigKind kind, int lo, int hi,
                      int slack) -> std::optional<Reducible> {
        if (d >= lo && d <= hi && s >= d - slack)
            return Reducible{Reducible::Variant::Config, kind, v, small};
        return std::nullopt;
    };
    if (auto r = ranged(ConfigKind::C5, 20, 22, 3)) return r;
    if (auto r = ranged(ConfigKind::C6, 23, 25, 2)) return r;
    if (auto r = ranged(ConfigKind::C7, 26, 28, 1)) return r;
    if (auto r = ranged(ConfigKind::C8, 29, 31, 0)) return r;

    // C9: at least d(v)-7 small neighbors, one of them a 4-vertex
    if (s >= d - 7) {
        bool has4 = std::any_of(small.begin(), small.end(),
                                [&](int u) { return deg[u] == 4; });
        if (has4)
            return Reducible{Reducible::Variant::Config, ConfigKind::C9, v,
                             std::move(small)};
    }
    return std::nullopt;
}

}  // namespace

std::optional<Reducible> find_configuration(const Graph& g) {
    DegreeProfile p = g.degree_profile();
    for (int v = 0; v < g.vertex_count(); ++v)
        if (auto r = config_at(g, p.degree, v)) return r;
    return std::nullopt;
}

std::optional<Reducible> find_reducible(const Graph& g) {
    DegreeProfile p = g.degree_profile();
    for (int v = 0; v < g.vertex_count(); ++v)
        if (p.degree[v] <= 3)
            return Reducible{Reducible::Variant::LowDegree, ConfigKind::C1, v, {}};
    for (int v = 0; v < g.vertex_count(); ++v)
        if (auto r = config_at(g, p.degree, v)) return r;
    return std::nullopt;
}

bool recheck_reducible(const Graph& g, const Reducible& r) {
    DegreeProfile p = g.degree_profile();
    const auto& deg = p.degree;
    if (r.center < 0 || r.center >= g.vertex_count()) return false;
    int d = deg[r.center];

    if (r.variant == Reducible::Variant::LowDegree) return d <= 3;

    for (int u : r.witnesses)
        if (!g.has_edge(r.center, u)) return false;

    auto all_below = [&](int cap) {
        return std::all_of(r.witnesses.begin(), r.witnesses.end(),
                           [&](int u) { return deg[u] <= cap; });
    };
    int w = static_cast<int>(r.witnesses.size());
    switch (r.kind) {
        case ConfigKind::C1: return d == 4 && w >= 1 && all_below(19);
        case ConfigKind::C2: return d == 5 && w >= 2 && all_below(19);
        case ConfigKind::C3: return d == 6 && w >= 4 && all_below(19);
        case ConfigKind::C4: return d == 7 && w >= 6 && all_below(19);
        case ConfigKind::C5: return d >= 20 && d <= 22 && w >= d - 3 && all_below(7);
        case ConfigKind::C6: return d >= 23 && d <= 25 && w >= d - 2 && all_below(7);
        case ConfigKind::C7: return d >= 26 && d <= 28 && w >= d - 1 && all_below(7);
        case ConfigKind::C8: return d >= 29 && d <= 31 && w >= d && all_below(7);
        case ConfigKind::C9:
            return w >= d - 7 && all_below(7) &&
                   std::any_of(r.witnesses.begin(), r.witnesses.end(),
                               [&](int u) { return deg[u] == 4; });
    }
    return false;
}

ChargeReport discharging_audit(const Graph& g) {
    DegreeProfile p = g.degree_profile();
    ChargeReport rep;
    rep.initial.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        rep.initial.emplace_back(p.degree[v] - 8);
    rep.final_ = rep.initial;

    const Rat one(1), three_quarters(3, 4);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (p.degree[v] < 20) continue;  // only big vertices send
        for (int u : g.neighbors(v)) {
            int du = p.degree[u];
            if (du == 4) {
                rep.transfers.push_back({v, u, one});
                rep.final_[v] -= one;
                rep.final_[u] += one;
            } else if (du >= 5 && du <= 7) {
                rep.transfers.push_back({v, u, three_quarters});
                rep.final_[v] -= three_quarters;
                rep.final_[u] += three_quarters;
            }
        }
    }

    Rat before(0), after(0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        before += rep.initial[v];
        after += rep.final_[v];
    }
    assert(before == after);
    rep.total = after;
    return rep;
}

std::variant<Reducible, LemmaViolation> verify_lemma(const Graph& g) {
    DegreeProfile p = g.degree_profile();
    if (g.vertex_count() == 0 || p.min_degree < 4)
        throw Error(Errc::PreconditionUnmet,
                    "delta(G) = " + std::to_string(p.min_degree) + " < 4");
    long long e = g.edge_count(), v = g.vertex_count();
    if (e > 4 * v - 1)
        throw Error(Errc::PreconditionUnmet,
                    "e(G) = " + std::to_string(e) + " > 4 v(G) - 1 = " +
                        std::to_string(4 * v - 1));

    if (auto r = find_reducible(g)) return *r;
    return LemmaViolation{
        "no configuration found although delta >= 4 and e <= 4v-1",
        discharging_audit(g)};
}

}  // namespace aec
