#include <algorithm>
#include <map>

#include "doctest.h"
#include "fixtures.hpp"
#include "mdl/elementary.hpp"
#include "mdl/generators.hpp"
#include "mdl/spec_string.hpp"
#include "oracles.hpp"

using namespace mdl;
using fixture::code_of;

namespace {

std::vector<std::size_t> face_lengths(const PlaneBipartiteGraph& g) {
  std::vector<std::size_t> out;
  for (const auto& f : g.faces()) out.push_back(f.boundary.size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("hexagon loads with two faces") {
  const auto g = fixture::hexagon();
  CHECK(g.face_count() == 2);
  CHECK(g.face(g.outer_face()).is_outer);
  CHECK(face_lengths(g) == std::vector<std::size_t>{6, 6});
}

TEST_CASE("hexagon without an outer face is ambiguous") {
  CHECK(code_of([] { graph_from_json(fixture::cycle6("wbwbwb")); }) == ErrorCode::InputRequired);
}

TEST_CASE("K2 has only the outer face") {
  const auto g = fixture::k2();
  CHECK(g.face_count() == 1);
  CHECK(g.inner_faces().empty());
  CHECK(g.label(0) == 7);
}

TEST_CASE("ladder and two-hexagon chain face lengths") {
  CHECK(face_lengths(graph_from_json(fixture::kLadder)) == std::vector<std::size_t>{4, 4, 6});
  CHECK(face_lengths(parse_graph_spec("P(2,1)")) == std::vector<std::size_t>{6, 6, 10});
}

TEST_CASE("every edge is traversed once in each direction") {
  for (const char* spec : {"P(2,2)", "T(3)", "tree:1>2,2>3,2>4", "link:C(6)+P(2,1)"}) {
    const auto g = parse_graph_spec(spec);
    std::vector<int> used(2 * g.edge_count(), 0);
    for (const auto& f : g.faces())
      for (auto d : f.boundary) ++used[static_cast<std::size_t>(d)];
    CHECK(std::all_of(used.begin(), used.end(), [](int u) { return u == 1; }));
    CHECK(static_cast<long>(g.vertex_count()) - static_cast<long>(g.edge_count()) +
              static_cast<long>(g.face_count()) == 2);
  }
}

TEST_CASE("input validation errors") {
  CHECK(code_of([] { graph_from_json(fixture::cycle6("wwbwbb", ",\"outer_face\":0")); }) ==
        ErrorCode::ImproperColoring);
  CHECK(code_of([] {
          graph_from_json(R"({"vertices":[{"id":0,"color":"white"},{"id":1,"color":"black"},{"id":2,"color":"white"}],
                              "edges":[[0,1],[1,2],[2,0]]})");
        }) == ErrorCode::NotBipartite);
  CHECK(code_of([] {
          graph_from_json(R"({"vertices":[{"id":0,"color":"white"},{"id":1,"color":"black"},
                                          {"id":2,"color":"white"},{"id":3,"color":"black"}],
                              "edges":[[0,1],[2,3]]})");
        }) == ErrorCode::Disconnected);
  CHECK(code_of([] {
          graph_from_json(R"({"vertices":[{"id":0,"color":"white"},{"id":1,"color":"black"}],
                              "edges":[[0,1],[1,0]]})");
        }) == ErrorCode::DuplicateEdge);
  CHECK(code_of([] { graph_from_json("{\"vertices\": ["); }) == ErrorCode::ParseError);
  CHECK(code_of([] { graph_from_json(R"({"edges":[]})"); }) == ErrorCode::ParseError);
}

TEST_CASE("K33 has no planar rotation") {
  std::string v, e, rot;
  for (int i = 0; i < 6; ++i)
    v += std::string(i ? "," : "") + "{\"id\":" + std::to_string(i) + ",\"color\":\"" + (i < 3 ? "white" : "black") + "\"}";
  std::map<int, std::vector<int>> at;
  int k = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) {
      e += std::string(k ? "," : "") + "[" + std::to_string(a) + "," + std::to_string(b) + "]";
      at[a].push_back(k);
      at[b].push_back(k);
      ++k;
    }
  for (auto& [x, es] : at) {
    rot += std::string(rot.empty() ? "" : ",") + "\"" + std::to_string(x) + "\":[";
    for (std::size_t i = 0; i < es.size(); ++i) rot += (i ? "," : "") + std::to_string(es[i]);
    rot += "]";
  }
  const std::string text = "{\"vertices\":[" + v + "],\"edges\":[" + e + "],\"rotation\":{" + rot + "}}";
  CHECK(code_of([&] { graph_from_json(text); }) == ErrorCode::EulerViolation);
}

TEST_CASE("dual arcs follow the black-to-white rule") {
  const auto g = fixture::hexagon();
  const auto d = oriented_dual(g, true);
  CHECK(d.arcs.size() == 6);
  int outward = 0;
  for (const auto& a : d.arcs) {
    const FaceId from = d.nodes[static_cast<std::size_t>(a.from)];
    // the walk of `from` runs the edge black -> white
    for (auto dart : g.face(from).boundary)
      if (dart_edge(dart) == a.edge) CHECK_FALSE(g.white_to_black(dart));
    outward += from == g.outer_face();
  }
  CHECK(outward == 3);

  const auto chain = parse_graph_spec("P(2,1)");
  CHECK(oriented_dual(chain, false).arcs.size() == 1);
  const auto two = parse_graph_spec("tree:1>2");
  const auto inner = oriented_dual(two, false);
  REQUIRE(inner.arcs.size() == 1);
}

TEST_CASE("faces inside a cycle") {
  const auto h = truncated_parallelogram(TruncatedParallelogramSpec::parallelogram(2, 2));
  const auto& g = h.graph;
  std::vector<EdgeId> boundary;
  for (auto d : g.face(g.outer_face()).boundary) boundary.push_back(dart_edge(d));
  CHECK(faces_inside_cycle(g, boundary) == g.inner_faces());

  const FaceId f = h.hexagons[3].face;
  const auto fe = g.face_edges(f);
  CHECK(faces_inside_cycle(g, fe) == std::vector<FaceId>{f});

  // left column: h(1,1) and h(2,1)
  const auto a = g.face_edges(h.hexagons[0].face);
  const auto b = g.face_edges(h.hexagons[2].face);
  std::vector<EdgeId> sa(a.begin(), a.end()), sb(b.begin(), b.end()), col;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  std::set_symmetric_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(col));
  auto want = std::vector<FaceId>{h.hexagons[0].face, h.hexagons[2].face};
  std::sort(want.begin(), want.end());
  CHECK(faces_inside_cycle(g, col) == want);

  CHECK(code_of([&] { faces_inside_cycle(g, std::vector<EdgeId>{sa[0], sa[1]}); }) == ErrorCode::NotACycle);
}

TEST_CASE("clockwise cycle keeps the interior on the right") {
  const auto g = parse_graph_spec("P(2,2)");
  for (FaceId f : g.inner_faces()) {
    const auto edges = g.face_edges(f);
    for (auto d : clockwise_cycle(g, edges)) CHECK(g.face_of_dart(d) == f);
  }
}

TEST_CASE("e-cuts agree with brute-force directed bonds") {
  for (const char* spec : {"C(6)", "C(4)", "P(2,1)", "tree:1>2", "tree:1>2,3>2", "T(2)"}) {
    CAPTURE(spec);
    const auto g = parse_graph_spec(spec);
    const auto report = find_e_cuts(g);
    std::set<std::vector<int>> got;
    for (const auto& c : report.cuts) {
      got.insert(c.edges);
      for (EdgeId e : c.edges) {
        const VertexId w = g.white_end(e);
        CHECK(std::binary_search(c.white_bank.begin(), c.white_bank.end(), w));
      }
      CHECK(c.white_bank.size() + c.black_bank.size() == g.vertex_count());
    }
    CHECK(got == oracle::directed_bonds(g));
  }
  CHECK(find_e_cuts(parse_graph_spec("C(6)")).cuts.size() == 9);
  CHECK(find_e_cuts(fixture::k2()).cuts.empty());
  CHECK(find_e_cuts(parse_graph_spec("P(2,2)")).outside_guaranteed_class);
  CHECK_FALSE(find_e_cuts(parse_graph_spec("P(2,1)")).outside_guaranteed_class);
}

TEST_CASE("e-cuts meet every matching once on outerplane graphs") {
  for (const char* spec : {"C(6)", "P(2,1)", "P(3,1)", "tree:1>2,1>3", "tree:2>1,3>1,1>4"}) {
    const auto g = parse_graph_spec(spec);
    const auto ms = enumerate_perfect_matchings(g);
    for (const auto& c : find_e_cuts(g).cuts)
      for (const auto& m : ms)
        CHECK(std::count_if(c.edges.begin(), c.edges.end(), [&](EdgeId e) { return m.contains(e); }) == 1);
  }
}

TEST_CASE("outerplane detection") {
  CHECK(is_two_connected_outerplane(parse_graph_spec("P(3,1)")));
  CHECK(is_two_connected_outerplane(parse_graph_spec("tree:1>2,1>3,1>4")));
  CHECK_FALSE(is_two_connected_outerplane(parse_graph_spec("P(2,2)")));
  CHECK_FALSE(is_two_connected_outerplane(parse_graph_spec("link:C(6)+C(6)")));
}

TEST_CASE("elementary structure") {
  for (const char* spec : {"L(1)", "P(2,2)", "T(3)", "L(3,1)"}) {
    const auto s = elementary_structure(parse_graph_spec(spec));
    CHECK(s.is_elementary);
    CHECK(s.is_weakly_elementary);
    CHECK(s.forbidden_edges.empty());
  }
  const auto linked = parse_graph_spec("link:C(6)+C(6)");
  const auto s = elementary_structure(linked);
  CHECK_FALSE(s.is_elementary);
  CHECK(s.is_weakly_elementary);
  REQUIRE(s.forbidden_edges.size() == 1);
  CHECK(s.forbidden_edges.front() == static_cast<EdgeId>(linked.edge_count() - 1));
  CHECK(s.elementary_components.size() == 2);

  const auto k2 = elementary_structure(fixture::k2());
  CHECK(k2.is_elementary);

  const auto path = graph_from_json(R"({"vertices":[{"id":0,"color":"white"},{"id":1,"color":"black"},
      {"id":2,"color":"white"}],"edges":[[0,1],[1,2]]})");
  CHECK(code_of([&] { elementary_structure(path); }) == ErrorCode::NoPerfectMatching);
}

TEST_CASE("JSON round trip keeps the embedding") {
  for (const char* spec : {"T(3)", "tree:1>2,3>2", "link:C(4)+P(2,1)"}) {
    const auto g = parse_graph_spec(spec);
    const auto text = graph_to_json(g);
    const auto back = graph_from_json(text);
    CHECK(graph_to_json(back) == text);
    CHECK(back.outer_face() == g.outer_face());
    CHECK(face_lengths(back) == face_lengths(g));
  }
}
