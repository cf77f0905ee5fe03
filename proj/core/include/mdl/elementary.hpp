#pragma once

#include <vector>

#include "mdl/matching.hpp"

namespace mdl {

struct ElementaryStructure {
  std::vector<EdgeId> forbidden_edges;
  // vertex sets of the components of G minus forbidden edges, K2 components dropped
  std::vector<std::vector<VertexId>> elementary_components;
  bool is_elementary = false;
  bool is_weakly_elementary = false;
};

/// Forbidden edges come from full enumeration. Weak elementarity is checked by
/// brute force over every alternating cycle of every matching, so it is only
/// meant for small graphs. Throws NoPerfectMatching or SizeCapExceeded.
ElementaryStructure elementary_structure(const PlaneBipartiteGraph& g, const Caps& caps = {});

/// Every edge of the subgraph lies in one of its perfect matchings.
bool subgraph_is_elementary(const PlaneBipartiteGraph& g, const std::vector<EdgeId>& edges, const Caps& caps = {});

}  // namespace mdl
