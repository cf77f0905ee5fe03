#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "mdl/generators.hpp"
#include "mdl/spec_string.hpp"
#include "oracles.hpp"

using namespace mdl;
using fixture::code_of;

namespace {

std::vector<oracle::EdgeSet> as_sets(const std::vector<Matching>& ms) {
  std::vector<oracle::EdgeSet> out;
  for (const auto& m : ms) out.push_back(m.edges);
  return out;
}

}  // namespace

TEST_CASE("enumeration agrees with the naive oracle") {
  for (const char* spec : {"C(4)", "C(6)", "C(10)", "L(1)", "P(2,1)", "P(2,2)", "P(3,2)", "T(2)", "T(3)", "L(3,1)",
                           "L(2,2,1)", "tree:1>2,3>2", "tree:1>2,1>3,1>4", "link:C(6)+P(2,1)"}) {
    CAPTURE(spec);
    const auto g = parse_graph_spec(spec);
    CHECK(as_sets(enumerate_perfect_matchings(g)) == oracle::perfect_matchings(g.vertex_count(), g.edges()));
  }
}

TEST_CASE("parallelogram counts are binomial") {
  auto binom = [](int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      const auto g = parse_graph_spec("P(" + std::to_string(m) + "," + std::to_string(n) + ")");
      CHECK(static_cast<long>(enumerate_perfect_matchings(g).size()) == binom(m + n, m));
    }
}

TEST_CASE("prolate triangle counts are Catalan") {
  const long catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (int m = 1; m <= 5; ++m)
    CHECK(static_cast<long>(enumerate_perfect_matchings(parse_graph_spec("T(" + std::to_string(m) + ")")).size()) ==
          catalan[m + 1]);
}

TEST_CASE("hexagon matchings and face classes") {
  const auto g = fixture::hexagon();
  const auto ms = enumerate_perfect_matchings(g);
  REQUIRE(ms.size() == 2);
  const FaceId inner = g.inner_faces().front();
  std::vector<Orientation> seen;
  for (const auto& m : ms) {
    const auto cls = classify_alternating_faces(g, m);
    REQUIRE(cls.size() == 1);
    CHECK(cls[0].face == inner);
    seen.push_back(cls[0].orientation);
  }
  std::sort(seen.begin(), seen.end());
  CHECK(seen == std::vector<Orientation>{Orientation::Proper, Orientation::Improper});
  // every edge sits in exactly one of the two
  CHECK(forcing_edges(g).size() == 6);
}

TEST_CASE("flipping a face swaps its class") {
  for (const char* spec : {"P(2,2)", "T(3)", "tree:1>2,3>2"}) {
    const auto g = parse_graph_spec(spec);
    for (const auto& m : enumerate_perfect_matchings(g))
      for (const auto& fc : classify_alternating_faces(g, m)) {
        const auto m2 = flip(m, g.face_edges(fc.face));
        REQUIRE(is_perfect_matching(g, m2));
        bool found = false;
        for (const auto& back : classify_alternating_faces(g, m2))
          if (back.face == fc.face) {
            found = true;
            CHECK(back.orientation != fc.orientation);
          }
        CHECK(found);
      }
  }
}

TEST_CASE("alternating cycles agree with the oracle") {
  for (const char* spec : {"C(6)", "P(2,1)", "P(2,2)", "T(2)", "tree:1>2,1>3", "link:C(6)+C(4)"}) {
    CAPTURE(spec);
    const auto g = parse_graph_spec(spec);
    const auto ms = enumerate_perfect_matchings(g);
    for (const auto& m : ms) {
      std::set<oracle::EdgeSet> got;
      for (const auto& c : all_alternating_cycles(g, m, ms)) {
        got.insert(c.edges);
        CHECK(c.cycle.size() == c.edges.size());
        CHECK(faces_inside_cycle(g, c.edges) == c.enclosed_faces);
      }
      CHECK(got == oracle::alternating_cycles(g, m));
    }
  }
}

TEST_CASE("root alternating cycle counts") {
  auto count_at_root = [](const char* spec) {
    const auto g = parse_graph_spec(spec);
    const auto mp = matching_poset(g);
    const auto ext = extremal_matchings(g, mp);
    return all_alternating_cycles(g, mp.z.matchings[static_cast<std::size_t>(ext.root)]).size();
  };
  CHECK(count_at_root("P(2,1)") == 2);
  CHECK(count_at_root("T(2)") == 4);
}

TEST_CASE("symmetric difference splits into cycles with opposite classes") {
  std::mt19937 rng(20261018);
  for (const char* spec : {"P(3,2)", "L(3,2,2)", "T(4)", "tree:1>2,2>3,4>2,5>4"}) {
    const auto g = parse_graph_spec(spec);
    const auto ms = enumerate_perfect_matchings(g);
    std::uniform_int_distribution<std::size_t> pick(0, ms.size() - 1);
    for (int trial = 0; trial < 40; ++trial) {
      const auto& a = ms[pick(rng)];
      const auto& b = ms[pick(rng)];
      const auto ab = symmetric_difference_cycles(g, a, b);
      const auto ba = symmetric_difference_cycles(g, b, a);
      std::vector<EdgeId> all, want;
      for (const auto& c : ab) all.insert(all.end(), c.edges.begin(), c.edges.end());
      std::sort(all.begin(), all.end());
      std::set_symmetric_difference(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                                    std::back_inserter(want));
      CHECK(all == want);
      REQUIRE(ab.size() == ba.size());
      for (const auto& c : ab)
        for (const auto& d : ba)
          if (c.edges == d.edges) CHECK(c.orientation != d.orientation);
      CHECK(flip(a, want) == b);
    }
  }
}

TEST_CASE("forcing edge of a parallelogram") {
  for (const auto& spec : {TruncatedParallelogramSpec::parallelogram(1, 1), TruncatedParallelogramSpec::parallelogram(2, 3),
                           TruncatedParallelogramSpec::prolate_triangle(3), TruncatedParallelogramSpec{{4, 2, 1}}}) {
    const auto h = truncated_parallelogram(spec);
    const auto ms = enumerate_perfect_matchings(h.graph);
    CHECK(std::count_if(ms.begin(), ms.end(), [&](const Matching& m) { return m.contains(h.forcing_edge); }) == 1);
    const auto forcing = forcing_edges(h.graph, ms);
    CHECK(std::binary_search(forcing.begin(), forcing.end(), h.forcing_edge));
    CHECK(h.slant[static_cast<std::size_t>(h.forcing_edge)] == Slant::Vertical);
  }
}

TEST_CASE("matching validation") {
  const auto g = fixture::hexagon();
  CHECK_FALSE(is_perfect_matching(g, Matching{{0, 1}}));
  CHECK_FALSE(is_perfect_matching(g, Matching{{0, 2}}));
  CHECK(is_perfect_matching(g, Matching{{0, 2, 4}}));
  CHECK(code_of([&] { require_perfect_matching(g, Matching{{0, 1, 2}}); }) == ErrorCode::NotAMatching);
  CHECK(code_of([&] { require_perfect_matching(g, Matching{{0, 99}}); }) == ErrorCode::NotAMatching);
}

TEST_CASE("matching cap is enforced") {
  Caps caps;
  caps.max_matchings = 10;
  CHECK(code_of([&] { enumerate_perfect_matchings(parse_graph_spec("P(3,3)"), caps); }) ==
        ErrorCode::SizeCapExceeded);
}
