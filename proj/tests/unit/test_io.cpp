#include <filesystem>

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "mdl/generators.hpp"
#include "mdl/spec_string.hpp"

using namespace mdl;
using fixture::code_of;
using nlohmann::json;

TEST_CASE("spec strings") {
  CHECK(parse_graph_spec("L(1)").inner_face_count() == 1);
  CHECK(parse_graph_spec("L(3,2,1)").inner_face_count() == 6);
  CHECK(parse_graph_spec("P(2,3)").inner_face_count() == 6);
  CHECK(parse_graph_spec("T(4)").inner_face_count() == 10);
  CHECK(parse_graph_spec("C(8)").vertex_count() == 8);
  CHECK(parse_graph_spec(" P( 2 , 2 ) ").inner_face_count() == 4);
  CHECK(parse_graph_spec("tree:1").inner_face_count() == 1);
  CHECK(parse_graph_spec("tree:a>b,b>c").inner_face_count() == 3);
  CHECK(parse_graph_spec("link:C(6)+P(2,1)+C(4)").inner_face_count() == 4);

  CHECK(code_of([] { parse_graph_spec(""); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_graph_spec("P(2"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_graph_spec("P(2,x)"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_graph_spec("Q(2)"); }) == ErrorCode::InvalidSpec);
  CHECK(code_of([] { parse_graph_spec("P(2)"); }) == ErrorCode::InvalidSpec);
  CHECK(code_of([] { parse_graph_spec("T(0)"); }) == ErrorCode::InvalidSpec);
  CHECK(code_of([] { parse_graph_spec("L(1,2)"); }) == ErrorCode::InvalidRowLengths);
  CHECK(code_of([] { parse_graph_spec("C(7)"); }) == ErrorCode::InvalidSpec);
  CHECK(code_of([] { parse_graph_spec("tree:1>"); }) == ErrorCode::ParseError);
}

TEST_CASE("tree arcs keep numeric order of labels") {
  const auto t = parse_tree_arcs("10>2,2>3");
  CHECK(t.nodes == 3);
  // 2 -> node 0, 3 -> node 1, 10 -> node 2
  CHECK(t.arcs == std::vector<std::pair<int, int>>{{2, 0}, {0, 1}});
}

TEST_CASE("serialized forms") {
  const auto g = parse_graph_spec("P(2,1)");
  const auto j = json::parse(graph_to_json(g));
  CHECK(j["vertices"].size() == g.vertex_count());
  CHECK(j["edges"].size() == g.edge_count());
  CHECK(j["outer_face"].get<FaceId>() == g.outer_face());

  const auto ms = enumerate_perfect_matchings(g);
  CHECK(json::parse(matchings_to_json(ms)).size() == 3);

  const auto l = matching_lattice(matching_poset(g));
  const auto lj = json::parse(lattice_to_json(l, true));
  CHECK(lj["meet"].size() == l.size());
  CHECK(lj["top"].get<int>() == l.top());
  CHECK(json::parse(poset_to_json(FinitePoset::chain(3))).is_object());

  CHECK(graph_to_dot(g).find("graph") != std::string::npos);
  CHECK(dual_to_dot(g, true).find("digraph") != std::string::npos);
  CHECK(zdigraph_to_dot(build_z_digraph(g)).find("->") != std::string::npos);
  CHECK(hasse_to_dot(l).find("rankdir=BT") != std::string::npos);
  CHECK(poset_to_dot(FinitePoset::chain(2)).find("->") != std::string::npos);
}

TEST_CASE("file helpers") {
  const auto dir = std::filesystem::temp_directory_path() / "mdl_io_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "g.json").string();
  write_text_file(path, graph_to_json(parse_graph_spec("T(2)")));
  CHECK(read_graph_file(path).inner_face_count() == 3);
  std::filesystem::remove_all(dir);
  CHECK(code_of([&] { read_text_file(path); }) == ErrorCode::InvalidInput);
}
