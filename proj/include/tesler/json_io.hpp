#pragma once

#include <json.hpp>
#include <vector>

#include "tesler/alpha.hpp"
#include "tesler/cones.hpp"
#include "tesler/ehrhart.hpp"
#include "tesler/vertices.hpp"

namespace tesler {

using json = nlohmann::json;

// Rationals travel as "p" or "p/q" strings so nothing is ever rounded.
json rat_json(const Rat& q);
Rat rat_from_json(const json& j);
json ratvec_json(const RatVec& v);
RatVec ratvec_from_json(const json& j);

// Matrices are sparse objects keyed "i,j"; absent positions are zero.
json utmatrix_json(const UTMatrix& m);
UTMatrix utmatrix_from_json(const json& j);

json support_json(const FaceSupport& s);
FaceSupport support_from_json(int n, const json& j);

json mdp_json(const Mdp& m);
json ehrhart_json(const EhrhartPoly& p);

json vertex_graph_json(const VertexGraph& g);
// Needs "n", "vertices" and "edges"; hook sums are carried along when
// present.  Free columns and supports are derived data and are not read.
VertexGraph vertex_graph_from_json(const json& j);
// Accepts either a bare array of matrices or an object with a "vertices"
// key, so a saved graph file works directly as a vertex list.
std::vector<UTMatrix> vertex_list_from_json(const json& j);
std::vector<std::size_t> index_map_from_json(const json& j);

json table_report_json(const TableReport& r);
json positivity_json(const PositivityReport& r);
json mcmullen_json(const McMullenReport& r);

}  // namespace tesler
