#include "aec/json_io.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace aec {

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw Error(Errc::ParseError, what);
}

void expect_keys(const Json& j, const std::set<std::string>& keys,
                 const std::string& where) {
    if (!j.is_object()) bad(where + ": expected an object");
    for (const auto& [k, v] : j.items())
        if (!keys.count(k)) bad(where + ": unknown field '" + k + "'");
    for (const auto& k : keys)
        if (!j.contains(k)) bad(where + ": missing field '" + k + "'");
}

int as_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) bad(where + ": expected an integer");
    return j.get<int>();
}

}  // namespace

Json certificate_json(const DensityCertificate& cert) {
    return Json{{"max_excess", cert.max_excess.str()},
                {"witness", cert.witness},
                {"verdict", cert.verdict}};
}

Json reducible_json(const Reducible& r) {
    Json j;
    j["kind"] = r.variant == Reducible::Variant::LowDegree
                    ? "low_degree"
                    : config_kind_name(r.kind);
    j["center"] = r.center;
    j["witnesses"] = r.witnesses;
    return j;
}

Json charge_report_json(const ChargeReport& rep) {
    Json init = Json::array(), fin = Json::array(), tr = Json::array();
    for (const Rat& r : rep.initial) init.push_back(r.str());
    for (const Rat& r : rep.final_) fin.push_back(r.str());
    for (const ChargeTransfer& t : rep.transfers)
        tr.push_back(Json::array({t.from, t.to, t.amount.str()}));
    return Json{{"initial", init},
                {"final", fin},
                {"transfers", tr},
                {"total", rep.total.str()}};
}

Json bounds_json(const BoundsReport& rep) {
    Json j;
    j["lambda"] = rep.lambda;
    j["cr"] = rep.cr;
    j["girth"] = rep.girth ? Json(*rep.girth) : Json("acyclic");
    j["thm1_ok"] = rep.thm1_ok;
    j["thm1_slack"] = rep.thm1_slack;
    j["thm2_ok"] = rep.thm2_ok ? Json(*rep.thm2_ok) : Json("not_applicable");
    j["thm2_slack"] = rep.thm2_slack ? Json(rep.thm2_slack->str()) : Json();
    return j;
}

Json verify_report_json(const VerifyReport& rep) {
    Json j;
    j["proper"] = rep.proper;
    j["acyclic"] = rep.acyclic;
    if (rep.clash)
        j["clash"] = Json{{"vertex", rep.clash->vertex},
                          {"edges",
                           Json::array({Json::array({rep.clash->e1.a, rep.clash->e1.b}),
                                        Json::array({rep.clash->e2.a, rep.clash->e2.b})})},
                          {"color", rep.clash->color}};
    else
        j["clash"] = Json();
    if (rep.witness)
        j["witness"] = Json{{"cycle", rep.witness->cycle},
                            {"colors", Json::array({rep.witness->color_a,
                                                    rep.witness->color_b})}};
    else
        j["witness"] = Json();
    return j;
}

Json coloring_json(const EdgeColoring& c) {
    Json edges = Json::array();
    for (const auto& [e, col] : c.colors)
        edges.push_back(Json::array({e.a, e.b, col}));
    return Json{{"edges", edges}};
}

EdgeColoring coloring_from_json(const Json& j) {
    expect_keys(j, {"edges"}, "coloring");
    if (!j["edges"].is_array()) bad("coloring: 'edges' must be an array");
    EdgeColoring c;
    for (const Json& row : j["edges"]) {
        if (!row.is_array() || row.size() != 3) bad("coloring: rows are [u,v,color]");
        EdgeId e(as_int(row[0], "coloring.u"), as_int(row[1], "coloring.v"));
        c.colors[e] = as_int(row[2], "coloring.color");
    }
    return c;
}

Json lists_json(const ListAssignment& l) {
    Json rows = Json::array();
    for (const auto& [e, colors] : l.lists)
        rows.push_back(Json::array({e.a, e.b, colors}));
    return Json{{"lists", rows}};
}

ListAssignment lists_from_json(const Json& j, const Graph& g) {
    if (j.contains("k")) {
        expect_keys(j, {"k"}, "lists");
        return uniform_lists(g, as_int(j["k"], "lists.k"));
    }
    expect_keys(j, {"lists"}, "lists");
    ListAssignment out;
    for (const Json& row : j["lists"]) {
        if (!row.is_array() || row.size() != 3) bad("lists: rows are [u,v,[colors]]");
        EdgeId e(as_int(row[0], "lists.u"), as_int(row[1], "lists.v"));
        std::vector<int> colors;
        for (const Json& c : row[2]) colors.push_back(as_int(c, "lists.color"));
        std::sort(colors.begin(), colors.end());
        colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
        if (colors.empty()) bad("lists: empty list for an edge");
        out.lists[e] = std::move(colors);
    }
    return out;
}

Json drawing_json(const Drawing& d) {
    Json edges = Json::array();
    for (const EdgeId& e : d.edges) edges.push_back(Json::array({e.a, e.b}));
    Json crossings = Json::array();
    for (auto [i, j2] : d.crossings) crossings.push_back(Json::array({i, j2}));
    Json rotation = Json::object();
    for (int node = 0; node < d.node_count(); ++node)
        rotation[std::to_string(node)] = d.rotation[node];
    return Json{{"n", d.n},
                {"edges", edges},
                {"crossings", crossings},
                {"rotation", rotation}};
}

Drawing drawing_from_json(const Json& j) {
    expect_keys(j, {"n", "edges", "crossings", "rotation"}, "drawing");
    Drawing d;
    d.n = as_int(j["n"], "drawing.n");
    if (!j["edges"].is_array()) bad("drawing: 'edges' must be an array");
    for (const Json& row : j["edges"]) {
        if (!row.is_array() || row.size() != 2) bad("drawing: edges are [u,v]");
        int u = as_int(row[0], "drawing.edge.u");
        int v = as_int(row[1], "drawing.edge.v");
        if (u == v) bad("drawing: loop edge (" + std::to_string(u) + ")");
        d.edges.emplace_back(u, v);
    }
    for (const Json& row : j["crossings"]) {
        if (!row.is_array() || row.size() != 2) bad("drawing: crossings are [eI,eJ]");
        d.crossings.emplace_back(as_int(row[0], "drawing.crossing"),
                                 as_int(row[1], "drawing.crossing"));
    }
    if (!j["rotation"].is_object()) bad("drawing: 'rotation' must be an object");
    d.rotation.assign(d.node_count(), {});
    for (const auto& [key, value] : j["rotation"].items()) {
        int node;
        try {
            node = std::stoi(key);
        } catch (const std::logic_error&) {
            bad("drawing.rotation: bad node key '" + key + "'");
        }
        if (node < 0 || node >= d.node_count())
            bad("drawing.rotation: node " + key + " out of range");
        if (!value.is_array()) bad("drawing.rotation: entries are arrays");
        for (const Json& idj : value)
            d.rotation[node].push_back(as_int(idj, "drawing.rotation.end"));
    }
    return d;
}

Json step_json(const EliminationStep& s) {
    Json degrees = Json::object();
    for (const auto& [v, deg] : s.degrees) degrees[std::to_string(v)] = deg;
    return Json{{"edge", Json::array({s.edge.a, s.edge.b})},
                {"context", reducible_json(s.context)},
                {"center", s.center},
                {"other", s.other},
                {"center_nbrs", s.center_nbrs},
                {"other_nbrs", s.other_nbrs},
                {"degrees", degrees}};
}

Json failure_json(const FailureReport& f) {
    Json edges = Json::array();
    for (const EdgeId& e : f.edges) edges.push_back(Json::array({e.a, e.b}));
    Json trace{{"recipe", f.trace.recipe},
               {"rejected", f.trace.rejected},
               {"fallback_scan", f.trace.fallback_scan},
               {"c9_recolor", f.trace.c9_recolor}};
    Json sizes = Json::object();
    for (const auto& [k, v] : f.trace.set_sizes) sizes[k] = v;
    trace["set_sizes"] = sizes;
    return Json{{"step_index", f.step_index},
                {"step", step_json(f.step)},
                {"graph", Json{{"n", f.n}, {"edges", edges}}},
                {"trace", trace}};
}

Json drawing_errors_json(const std::vector<DrawingError>& errs) {
    Json out = Json::array();
    for (const DrawingError& e : errs)
        out.push_back(Json{{"kind", drawing_errc_name(e.kind)},
                           {"message", e.message}});
    return out;
}

}  // namespace aec
