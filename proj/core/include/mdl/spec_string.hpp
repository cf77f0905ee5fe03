#pragma once

#include <string_view>

#include "mdl/generators.hpp"

namespace mdl {

/// Graph families by name:
///   L(r1,...,rm)   truncated parallelogram, bottom row first
///   P(m,n)         parallelogram L(m;n)
///   T(m)           prolate triangle L(m,m-1,...,1)
///   C(n)           even cycle
///   tree:1>2,1>3   outerplane realization of an oriented tree ("tree:1" is one node)
///   link:A+B+...   linked components
/// Throws ParseError on malformed text, InvalidSpec on out-of-range values.
PlaneBipartiteGraph parse_graph_spec(std::string_view text, bool optimize_trees = false);

/// Nodes are numbered by sorted label. Throws ParseError, NotATree.
OrientedTree parse_tree_arcs(std::string_view arcs);

}  // namespace mdl
