#pragma once

#include <functional>
#include <random>
#include <string>

#include "doctest.h"

#include "mdl/graph_io.hpp"
#include "mdl/plane_graph.hpp"
#include "mdl/poset.hpp"

namespace fixture {

// 6-vertex ladder: two squares sharing the edge 1-4
inline const char* kLadder = R"({
  "vertices": [{"id":0,"color":"white"},{"id":1,"color":"black"},{"id":2,"color":"white"},
               {"id":3,"color":"black"},{"id":4,"color":"white"},{"id":5,"color":"black"}],
  "edges": [[0,1],[1,2],[3,4],[4,5],[0,3],[1,4],[2,5]],
  "rotation": {"1":[1,5,0], "4":[5,3,2]}
})";

inline std::string cycle6(const std::string& colors, const std::string& extra = "") {
  std::string v;
  for (int i = 0; i < 6; ++i)
    v += std::string(i ? "," : "") + "{\"id\":" + std::to_string(i) + ",\"color\":\"" +
         (colors[static_cast<std::size_t>(i)] == 'w' ? "white" : "black") + "\"}";
  return "{\"vertices\":[" + v + "],\"edges\":[[0,1],[1,2],[2,3],[3,4],[4,5],[5,0]]" + extra + "}";
}

inline mdl::PlaneBipartiteGraph hexagon() { return mdl::graph_from_json(cycle6("wbwbwb", ",\"outer_face\":1")); }

inline mdl::PlaneBipartiteGraph k2() {
  return mdl::graph_from_json(R"({"vertices":[{"id":7,"color":"white"},{"id":9,"color":"black"}],"edges":[[7,9]]})");
}

inline mdl::ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const mdl::Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return mdl::ErrorCode::InvalidInput;
}

// random order: i < j with probability p
inline mdl::FinitePoset random_poset(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> rel;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    labels.push_back("p" + std::to_string(i));
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) rel.emplace_back(i, j);
  }
  return mdl::FinitePoset::from_relations(labels, rel);
}

}  // namespace fixture
