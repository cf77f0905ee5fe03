#include "mdl/graph_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace mdl {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

json poset_fields(const FinitePoset& p) {
  json covers = json::array();
  for (auto [a, b] : p.covers()) covers.push_back({a, b});
  return {{"elements", p.labels()}, {"covers", covers}};
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

GraphDescription parse_graph_description(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  GraphDescription d;
  try {
    for (const auto& v : field(j, "vertices")) {
      const auto color = field(v, "color").get<std::string>();
      if (color != "white" && color != "black") fail(ErrorCode::ParseError, "color must be white or black");
      d.vertices.push_back({field(v, "id").get<int>(), color == "white" ? Color::White : Color::Black});
    }
    for (const auto& e : field(j, "edges")) {
      if (!e.is_array() || e.size() != 2) fail(ErrorCode::ParseError, "edge must be a pair of vertex ids");
      d.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    if (j.contains("rotation"))
      for (const auto& [key, rot] : j.at("rotation").items()) {
        std::size_t used = 0;
        int vid = 0;
        try {
          vid = std::stoi(key, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != key.size() || key.empty()) fail(ErrorCode::ParseError, "rotation key '" + key + "' is not a vertex id");
        d.rotation[vid] = rot.get<std::vector<EdgeId>>();
      }
    if (j.contains("outer_face") && !j.at("outer_face").is_null()) d.outer_face = j.at("outer_face").get<FaceId>();
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  return d;
}

PlaneBipartiteGraph graph_from_json(std::string_view json_text) { return load_graph(parse_graph_description(json_text)); }

PlaneBipartiteGraph read_graph_file(const std::string& path) { return graph_from_json(read_text_file(path)); }

std::string graph_to_json(const PlaneBipartiteGraph& g) {
  json vertices = json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    vertices.push_back({{"id", g.label(static_cast<VertexId>(v))},
                        {"color", g.color(static_cast<VertexId>(v)) == Color::White ? "white" : "black"}});
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({g.label(e.u), g.label(e.v)});
  json rotation = json::object();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    auto r = g.rotation(static_cast<VertexId>(v));
    rotation[std::to_string(g.label(static_cast<VertexId>(v)))] = std::vector<EdgeId>(r.begin(), r.end());
  }
  json j = {{"vertices", vertices}, {"edges", edges}, {"rotation", rotation}, {"outer_face", g.outer_face()}};
  return j.dump(2);
}

std::string matchings_to_json(const std::vector<Matching>& matchings) {
  json j = json::array();
  for (const auto& m : matchings) j.push_back(m.edges);
  return j.dump();
}

std::string poset_to_json(const FinitePoset& p) { return poset_fields(p).dump(2); }

std::string lattice_to_json(const FiniteLattice& l, bool with_tables) {
  json j = poset_fields(l.poset());
  std::vector<int> rank;
  for (int x = 0; x < static_cast<int>(l.size()); ++x) rank.push_back(l.rank(x));
  j["rank"] = rank;
  j["bottom"] = l.bottom();
  j["top"] = l.top();
  if (with_tables) {
    json meet = json::array(), join = json::array();
    for (int x = 0; x < static_cast<int>(l.size()); ++x) {
      std::vector<int> mrow, jrow;
      for (int y = 0; y < static_cast<int>(l.size()); ++y) {
        mrow.push_back(l.meet(x, y));
        jrow.push_back(l.join(x, y));
      }
      meet.push_back(mrow);
      join.push_back(jrow);
    }
    j["meet"] = meet;
    j["join"] = join;
  }
  return j.dump(2);
}

std::string graph_to_dot(const PlaneBipartiteGraph& g) {
  std::ostringstream os;
  os << "graph G {\n  node [shape=circle, style=filled];\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    os << "  v" << v << " [label=\"" << g.label(static_cast<VertexId>(v)) << "\", fillcolor="
       << (g.color(static_cast<VertexId>(v)) == Color::White ? "white" : "black, fontcolor=white") << "];\n";
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    os << "  v" << g.edge(static_cast<EdgeId>(e)).u << " -- v" << g.edge(static_cast<EdgeId>(e)).v << " [label=\"e"
       << e << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string dual_to_dot(const PlaneBipartiteGraph& g, bool include_outer) {
  const auto d = oriented_dual(g, include_outer);
  std::ostringstream os;
  os << "digraph dual {\n";
  for (FaceId f : d.nodes)
    os << "  f" << f << " [label=\"f" << f << (f == g.outer_face() ? " (outer)" : "") << "\"];\n";
  for (const auto& a : d.arcs)
    os << "  f" << d.nodes[static_cast<std::size_t>(a.from)] << " -> f" << d.nodes[static_cast<std::size_t>(a.to)]
       << " [label=\"e" << a.edge << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string zdigraph_to_dot(const ZDigraph& z) {
  std::ostringstream os;
  os << "digraph Z {\n";
  for (std::size_t i = 0; i < z.matchings.size(); ++i) os << "  M" << i << ";\n";
  for (const auto& a : z.arcs) os << "  M" << a.from << " -> M" << a.to << " [label=\"f" << a.face << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string hasse_to_dot(const FiniteLattice& l) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  std::map<int, std::vector<int>> by_rank;
  for (int x = 0; x < static_cast<int>(l.size()); ++x) by_rank[l.rank(x)].push_back(x);
  for (const auto& [r, xs] : by_rank) {
    os << "  { rank=same;";
    for (int x : xs) os << " n" << x << ";";
    os << " }\n";
  }
  for (int x = 0; x < static_cast<int>(l.size()); ++x) os << "  n" << x << " [label=" << quote(l.label(x)) << "];\n";
  for (auto [a, b] : l.poset().covers()) os << "  n" << a << " -> n" << b << " [arrowhead=none];\n";
  os << "}\n";
  return os.str();
}

std::string poset_to_dot(const FinitePoset& p) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n";
  for (int x = 0; x < static_cast<int>(p.size()); ++x) os << "  n" << x << " [label=" << quote(p.label(x)) << "];\n";
  for (auto [a, b] : p.covers()) os << "  n" << a << " -> n" << b << " [arrowhead=none];\n";
  os << "}\n";
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::InvalidInput, "cannot write " + path);
  out << content;
  if (!out) fail(ErrorCode::InvalidInput, "write failed for " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::InvalidInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace mdl
