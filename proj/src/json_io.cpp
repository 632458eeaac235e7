#include "tesler/json_io.hpp"

#include <string>

#include "tesler/errors.hpp"

namespace tesler {

namespace {

json pos_json(const Pos& p) { return json::array({p.i, p.j}); }

Pos pos_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw Error("position must be a two-element integer array");
    return Pos{j[0].get<int>(), j[1].get<int>()};
}

json ratmat_json(const RatMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(rat_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

json rat_json(const Rat& q) { return json(rat_str(q)); }

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw Error("expected a rational as \"p/q\" string or integer");
}

json ratvec_json(const RatVec& v) {
    json out = json::array();
    for (const Rat& q : v) out.push_back(rat_json(q));
    return out;
}

RatVec ratvec_from_json(const json& j) {
    if (!j.is_array()) throw Error("expected an array of rationals");
    RatVec out;
    out.reserve(j.size());
    for (const json& e : j) out.push_back(rat_from_json(e));
    return out;
}

json utmatrix_json(const UTMatrix& m) {
    json entries = json::object();
    for (const Pos& p : UTMatrix::positions(m.size())) {
        const Rat& v = m.at(p.i, p.j);
        if (v != 0) entries[std::to_string(p.i) + "," + std::to_string(p.j)] = rat_json(v);
    }
    return json{{"n", m.size()}, {"entries", std::move(entries)}};
}

UTMatrix utmatrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw Error("matrix object needs an integer \"n\"");
    const int n = j["n"].get<int>();
    if (n < 1) throw Error("matrix size must be positive");
    UTMatrix m(n);
    if (!j.contains("entries")) return m;
    if (!j["entries"].is_object()) throw Error("matrix \"entries\" must be an object");
    for (const auto& [key, val] : j["entries"].items()) {
        const auto comma = key.find(',');
        int i = 0, col = 0;
        try {
            if (comma == std::string::npos) throw std::invalid_argument(key);
            i = std::stoi(key.substr(0, comma));
            col = std::stoi(key.substr(comma + 1));
        } catch (const std::exception&) {
            throw Error("matrix entry key must look like \"i,j\": " + key);
        }
        if (i < 1 || col < i || col > n)
            throw Error("matrix entry outside the upper triangle: " + key);
        m.at(i, col) = rat_from_json(val);
    }
    return m;
}

json support_json(const FaceSupport& s) {
    json out = json::array();
    for (const Pos& p : s.s) out.push_back(pos_json(p));
    return out;
}

FaceSupport support_from_json(int n, const json& j) {
    if (!j.is_array()) throw Error("face support must be an array of positions");
    std::vector<Pos> positions;
    positions.reserve(j.size());
    for (const json& e : j) positions.push_back(pos_from_json(e));
    return FaceSupport(n, std::move(positions));
}

json mdp_json(const Mdp& m) {
    return json{{"kind", m.kind == ConeKind::Normal ? "normal" : "feasible"},
                {"codim", m.k()},
                {"entries", ratmat_json(m.m)}};
}

json ehrhart_json(const EhrhartPoly& p) {
    return json{{"n", p.n},
                {"a", ratvec_json(p.a)},
                {"support", support_json(p.support)},
                {"dim", p.dim()},
                {"coeffs", ratvec_json(p.coeffs)}};
}

json vertex_graph_json(const VertexGraph& g) {
    json vertices = json::array();
    for (const UTMatrix& v : g.vertices) vertices.push_back(utmatrix_json(v));
    json free_cols = json::array();
    for (const auto& f : g.free_cols) free_cols.push_back(f);
    json supports = json::array();
    for (const FaceSupport& s : g.supports) supports.push_back(support_json(s));
    json edges = json::array();
    for (const auto& [u, v] : g.edges) edges.push_back(json::array({u, v}));
    return json{{"n", g.n},           {"a", ratvec_json(g.a)}, {"vertices", std::move(vertices)},
                {"free_cols", std::move(free_cols)}, {"supports", std::move(supports)},
                {"edges", std::move(edges)}};
}

VertexGraph vertex_graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("vertices") || !j.contains("edges"))
        throw Error("vertex graph needs \"n\", \"vertices\" and \"edges\"");
    VertexGraph g;
    g.n = j["n"].get<int>();
    if (j.contains("a")) g.a = ratvec_from_json(j["a"]);
    for (const json& v : j["vertices"]) g.vertices.push_back(utmatrix_from_json(v));
    for (const json& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw Error("edge must be a pair of vertex indices");
        const auto u = e[0].get<std::size_t>();
        const auto v = e[1].get<std::size_t>();
        if (u >= g.vertices.size() || v >= g.vertices.size())
            throw Error("edge references a vertex that is not in the file");
        g.edges.emplace_back(u, v);
    }
    return g;
}

std::vector<UTMatrix> vertex_list_from_json(const json& j) {
    if (j.is_object() && j.contains("vertices")) return vertex_list_from_json(j["vertices"]);
    if (!j.is_array()) throw Error("expected an array of matrices or a graph object");
    std::vector<UTMatrix> out;
    out.reserve(j.size());
    for (const json& v : j) out.push_back(utmatrix_from_json(v));
    return out;
}

std::vector<std::size_t> index_map_from_json(const json& j) {
    if (!j.is_array()) throw Error("vertex map must be an array of indices");
    std::vector<std::size_t> out;
    out.reserve(j.size());
    for (const json& e : j) {
        if (!e.is_number_integer() || e.get<long>() < 0)
            throw Error("vertex map entries must be non-negative integers");
        out.push_back(e.get<std::size_t>());
    }
    return out;
}

json table_report_json(const TableReport& r) {
    json cases = json::array();
    for (const CaseReport& c : r.cases)
        cases.push_back(json{{"codim", c.tag.codim},
                             {"label", to_string(c.tag.label)},
                             {"count", c.count},
                             {"prototype_match", c.mdp_match},
                             {"alpha_match", c.alpha_match},
                             {"alpha", rat_json(c.alpha)}});
    json failures = json::array();
    for (const FaceFailure& f : r.failures)
        failures.push_back(json{{"support", support_json(f.support)}, {"error", f.what}});
    return json{{"n", r.n},
                {"pass", r.all_pass()},
                {"certificate_ok", r.certificate_ok},
                {"vertices_checked", r.vertices_checked},
                {"codim2_faces", r.codim2_faces},
                {"codim3_faces", r.codim3_faces},
                {"inverse_ok", r.inverse_ok},
                {"cases", std::move(cases)},
                {"failures", std::move(failures)}};
}

json positivity_json(const PositivityReport& r) {
    json faces2 = json::array();
    for (const FaceSupport& s : r.min_codim2_faces) faces2.push_back(support_json(s));
    json faces3 = json::array();
    for (const FaceSupport& s : r.min_codim3_faces) faces3.push_back(support_json(s));
    return json{{"n", r.n},
                {"all_positive", r.all_positive},
                {"codim2",
                 json{{"min", rat_json(r.min_codim2)},
                      {"faces", std::move(faces2)},
                      {"formula_match", r.codim2_formula_match}}},
                {"codim3", json{{"min", rat_json(r.min_codim3)}, {"faces", std::move(faces3)}}}};
}

json mcmullen_json(const McMullenReport& r) {
    json terms = json::array();
    for (const McMullenTerm& t : r.terms)
        terms.push_back(json{{"dim", t.dim},
                             {"coefficient", rat_json(t.coeff)},
                             {"weighted_sum", rat_json(t.weighted)},
                             {"match", t.match}});
    return json{{"n", r.n},
                {"a", ratvec_json(r.a)},
                {"coeffs", ratvec_json(r.ehrhart)},
                {"terms", std::move(terms)},
                {"all_match", r.all_match()}};
}

}  // namespace tesler
