#pragma once

#include <compare>
#include <span>
#include <vector>

#include "mdl/plane_graph.hpp"

namespace mdl {

/// A perfect matching, identified by its sorted edge ids.
struct Matching {
  std::vector<EdgeId> edges;

  bool contains(EdgeId e) const;
  auto operator<=>(const Matching&) const = default;
};

enum class Orientation { Proper, Improper };

const char* to_string(Orientation o);

/// Low-level enumeration on any simple graph. Branches on an uncovered vertex
/// of minimum remaining degree. Result is sorted lexicographically.
std::vector<Matching> enumerate_perfect_matchings(std::size_t vertex_count, std::span<const Edge> edges,
                                                  const Caps& caps = {});

std::vector<Matching> enumerate_perfect_matchings(const PlaneBipartiteGraph& g, const Caps& caps = {});

bool is_perfect_matching(const PlaneBipartiteGraph& g, const Matching& m);
void require_perfect_matching(const PlaneBipartiteGraph& g, const Matching& m);

/// Edge-wise symmetric difference with an arbitrary edge set.
Matching flip(const Matching& m, std::span<const EdgeId> edges);

struct FaceClass {
  FaceId face = 0;
  Orientation orientation = Orientation::Proper;
};

/// Inner faces whose boundary is m-alternating, with their clockwise class.
std::vector<FaceClass> classify_alternating_faces(const PlaneBipartiteGraph& g, const Matching& m);

struct AlternatingCycleReport {
  std::vector<DartId> cycle;  // clockwise
  std::vector<EdgeId> edges;  // sorted
  Orientation orientation = Orientation::Proper;
  std::vector<FaceId> enclosed_faces;
};

/// Class of an m-alternating cycle given as a clockwise dart sequence.
Orientation cycle_orientation(const PlaneBipartiteGraph& g, const Matching& m, std::span<const DartId> clockwise);

/// Decomposes m1 xor m2 into its cycles; classes are relative to m1.
std::vector<AlternatingCycleReport> symmetric_difference_cycles(const PlaneBipartiteGraph& g, const Matching& m1,
                                                                const Matching& m2);

/// Edges lying in exactly one of the given matchings.
std::vector<EdgeId> forcing_edges(const PlaneBipartiteGraph& g, std::span<const Matching> matchings);
std::vector<EdgeId> forcing_edges(const PlaneBipartiteGraph& g, const Caps& caps = {});

/// Every m-alternating cycle, found as the single-cycle differences m xor m'.
std::vector<AlternatingCycleReport> all_alternating_cycles(const PlaneBipartiteGraph& g, const Matching& m,
                                                           std::span<const Matching> matchings);
std::vector<AlternatingCycleReport> all_alternating_cycles(const PlaneBipartiteGraph& g, const Matching& m,
                                                           const Caps& caps = {});

}  // namespace mdl
