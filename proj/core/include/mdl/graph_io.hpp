#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mdl/lattice.hpp"
#include "mdl/matching.hpp"
#include "mdl/plane_graph.hpp"
#include "mdl/ztransform.hpp"

namespace mdl {

/// {"vertices":[{"id":..,"color":"white"|"black"}], "edges":[[u,v],...],
///  "rotation":{"<id>":[edge ids clockwise]}, "outer_face": int}
/// Throws ParseError on malformed JSON or missing fields.
GraphDescription parse_graph_description(std::string_view json_text);
PlaneBipartiteGraph graph_from_json(std::string_view json_text);
PlaneBipartiteGraph read_graph_file(const std::string& path);

/// Vertex ids are the graph labels; outer_face is always written.
std::string graph_to_json(const PlaneBipartiteGraph& g);
std::string matchings_to_json(const std::vector<Matching>& matchings);
/// {"elements":[labels], "covers":[[lower, upper],...]}
std::string poset_to_json(const FinitePoset& p);
/// Poset fields plus "rank", "bottom", "top" and optionally "meet"/"join" tables.
std::string lattice_to_json(const FiniteLattice& l, bool with_tables = false);

std::string graph_to_dot(const PlaneBipartiteGraph& g);
std::string dual_to_dot(const PlaneBipartiteGraph& g, bool include_outer);
std::string zdigraph_to_dot(const ZDigraph& z);
/// Hasse diagram, one rank per row.
std::string hasse_to_dot(const FiniteLattice& l);
std::string poset_to_dot(const FinitePoset& p);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace mdl
