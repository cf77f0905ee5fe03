#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "mdl/generators.hpp"
#include "mdl/spec_string.hpp"

using namespace mdl;
using fixture::code_of;

TEST_CASE("row profile validation") {
  CHECK(code_of([] { TruncatedParallelogramSpec{{1, 2}}.validate(); }) == ErrorCode::InvalidRowLengths);
  CHECK(code_of([] { TruncatedParallelogramSpec{{}}.validate(); }) == ErrorCode::InvalidRowLengths);
  CHECK(code_of([] { TruncatedParallelogramSpec{{2, 0}}.validate(); }) == ErrorCode::InvalidRowLengths);
  const auto t = TruncatedParallelogramSpec::prolate_triangle(3);
  CHECK(t.rows == std::vector<int>{3, 2, 1});
  CHECK(t.hexagon_count() == 6);
  CHECK(t.name() == "L(3,2,1)");
  CHECK(TruncatedParallelogramSpec::parallelogram(2, 3).rows == std::vector<int>{3, 3});
}

TEST_CASE("hexagon systems have hexagonal inner faces") {
  for (const auto& spec : row_profiles(6)) {
    CAPTURE(spec.name());
    const auto h = truncated_parallelogram(spec);
    const auto& g = h.graph;
    CHECK(g.inner_face_count() == static_cast<std::size_t>(spec.hexagon_count()));
    CHECK(h.hexagons.size() == g.inner_face_count());
    for (std::size_t i = 0; i < h.hexagons.size(); ++i) {
      const auto& hex = h.hexagons[i];
      CHECK(g.face(hex.face).boundary.size() == 6);
      CHECK(h.hexagon_of_face(hex.face) == static_cast<int>(i));
      const auto vs = g.face_vertices(hex.face);
      std::vector<VertexId> a(vs.begin(), vs.end()), b(hex.vertices.begin(), hex.vertices.end());
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
    }
    // every edge has a slant and the perimeter pieces lie on the outer face
    CHECK(h.slant.size() == g.edge_count());
    const auto outer = g.face_edges(g.outer_face());
    std::vector<EdgeId> o(outer.begin(), outer.end());
    std::sort(o.begin(), o.end());
    for (EdgeId e : h.left_perimeter) CHECK(std::binary_search(o.begin(), o.end(), e));
    for (EdgeId e : h.bottom_perimeter) CHECK(std::binary_search(o.begin(), o.end(), e));
    CHECK(std::binary_search(h.left_perimeter.begin(), h.left_perimeter.end(), h.forcing_edge));
  }
}

TEST_CASE("hexagon poset") {
  const auto p = hexagon_poset(TruncatedParallelogramSpec{{2, 1}});
  REQUIRE(p.size() == 3);
  CHECK(p.label(0) == "h1,1");
  CHECK(p.label(1) == "h1,2");
  CHECK(p.label(2) == "h2,1");
  CHECK(p.less(0, 1));
  CHECK(p.less(0, 2));
  CHECK_FALSE(p.comparable(1, 2));
}

TEST_CASE("matching geometry in parallelograms") {
  for (const auto& spec : {TruncatedParallelogramSpec::parallelogram(2, 3), TruncatedParallelogramSpec{{3, 2, 2}}}) {
    const auto h = truncated_parallelogram(spec);
    const auto mp = matching_poset(h.graph);
    const auto ext = extremal_matchings(h.graph, mp);
    const auto& root = mp.z.matchings[static_cast<std::size_t>(ext.root)];
    for (const auto& m : mp.z.matchings) {
      const auto view = matching_geometry(h, m, root);
      CHECK(view.uniform_slant);
      CHECK(view.alternating_hexagons_consistent);
      if (m == root) {
        CHECK(view.cycle.empty());
        CHECK(view.hexagons.empty());
      }
    }
    CHECK(code_of([&] { matching_geometry(h, Matching{{0}}, root); }) == ErrorCode::NotAMatching);
  }
}

TEST_CASE("parallelogram isomorphism certificate") {
  for (const auto& spec : row_profiles(5)) {
    CAPTURE(spec.name());
    const auto cert = verify_iso_parallelogram(truncated_parallelogram(spec));
    CHECK(cert.generic_iso);
    CHECK(cert.psi.size() == static_cast<std::size_t>(spec.hexagon_count()));
    CHECK(cert.ideals.ideals.size() == cert.mp.z.matchings.size());
  }
}

TEST_CASE("row profiles and tree shapes are counted correctly") {
  CHECK(row_profiles(10).size() == 138);
  CHECK(row_profiles(3).size() == 6);
  const std::size_t shapes[] = {0, 1, 1, 1, 2, 3, 6, 11};
  for (int n = 1; n <= 7; ++n) CHECK(tree_shapes(n).size() == shapes[n]);
  for (const auto& t : tree_shapes(6)) CHECK_NOTHROW(t.validate());
}

TEST_CASE("orienting a tree") {
  const auto path = tree_shapes(3).front();
  const auto flipped = orient(path, 0b01);
  CHECK(flipped.arcs[0] == std::make_pair(path.arcs[0].second, path.arcs[0].first));
  CHECK(flipped.arcs[1] == path.arcs[1]);
}

TEST_CASE("tree validation") {
  CHECK(code_of([] { OrientedTree{3, {{0, 1}, {1, 0}}}.validate(); }) == ErrorCode::NotATree);
  CHECK(code_of([] { OrientedTree{3, {{0, 1}}}.validate(); }) == ErrorCode::NotATree);
  CHECK(code_of([] { OrientedTree{2, {{0, 5}}}.validate(); }) == ErrorCode::NotATree);
  CHECK(code_of([] { parse_graph_spec("tree:1>2,2>3,3>1"); }) == ErrorCode::NotATree);
}

TEST_CASE("tree realization reproduces the orientation") {
  std::mt19937 rng(99);
  for (int n = 1; n <= 6; ++n)
    for (const auto& shape : tree_shapes(n)) {
      const std::uint64_t masks = std::uint64_t{1} << shape.arcs.size();
      for (int trial = 0; trial < 4; ++trial) {
        const auto t = orient(shape, rng() % masks);
        for (bool optimize : {false, true}) {
          const auto r = realize_tree(t, optimize);
          const auto& g = r.graph;
          CHECK(is_two_connected_outerplane(g));
          CHECK(g.inner_face_count() == static_cast<std::size_t>(n));
          for (int v = 0; v < n; ++v) {
            const int want = optimize ? 2 * std::max({t.in_degree(v), t.out_degree(v), 2})
                                      : 2 * std::max(t.max_degree(), 2);
            CHECK(g.face(r.face_of_node[static_cast<std::size_t>(v)]).boundary.size() ==
                  static_cast<std::size_t>(want));
          }
          const auto dual = oriented_dual(g, false);
          std::set<std::pair<int, int>> got, want;
          for (const auto& a : dual.arcs) got.emplace(dual.nodes[static_cast<std::size_t>(a.from)],
                                                      dual.nodes[static_cast<std::size_t>(a.to)]);
          for (const auto& [a, b] : t.arcs)
            want.emplace(r.face_of_node[static_cast<std::size_t>(a)], r.face_of_node[static_cast<std::size_t>(b)]);
          CHECK(got == want);
        }
      }
    }
}

TEST_CASE("embedding from inner faces") {
  // two squares sharing the edge 1-4, listed clockwise
  const std::vector<Color> colors{Color::White, Color::Black, Color::White,
                                  Color::Black, Color::White, Color::Black};
  const auto g = embed_from_inner_faces(colors, {{0, 1, 4, 3}, {1, 2, 5, 4}});
  CHECK(g.inner_face_count() == 2);
  CHECK(g.face(g.outer_face()).boundary.size() == 6);
  CHECK(code_of([&] { embed_from_inner_faces(colors, {{0, 1, 4, 3}, {0, 1, 4, 3}}); }) ==
        ErrorCode::EmbeddingConflict);
}

TEST_CASE("linking components") {
  const auto g = link_components({even_cycle(6), even_cycle(4)});
  CHECK(g.vertex_count() == 10);
  CHECK(g.edge_count() == 11);
  CHECK(g.inner_face_count() == 2);
  const auto& link = g.edge(static_cast<EdgeId>(g.edge_count() - 1));
  CHECK(g.color(link.u) != g.color(link.v));
  CHECK(enumerate_perfect_matchings(g).size() == 4);
  CHECK(code_of([] { even_cycle(5); }) == ErrorCode::InvalidSpec);
  CHECK(code_of([] { link_components({}); }) == ErrorCode::InvalidInput);
}
