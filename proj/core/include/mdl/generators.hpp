#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "mdl/matching.hpp"
#include "mdl/plane_graph.hpp"
#include "mdl/poset.hpp"
#include "mdl/ztransform.hpp"

namespace mdl {

/// Row lengths r1 >= r2 >= ... >= rm > 0, bottom row first.
struct TruncatedParallelogramSpec {
  std::vector<int> rows;

  static TruncatedParallelogramSpec parallelogram(int m, int n);
  static TruncatedParallelogramSpec prolate_triangle(int m);
  /// Throws InvalidRowLengths.
  void validate() const;
  int hexagon_count() const;
  std::string name() const;  // "L(3,2,1)"
};

enum class Slant : std::uint8_t { Vertical, Rising, Falling };

struct Hexagon {
  int row = 0;  // 0-based, bottom row first
  int col = 0;  // 0-based, left column first
  FaceId face = 0;
  // top, upper right, lower right, bottom, lower left, upper left (clockwise)
  std::array<VertexId, 6> vertices{};
};

/// A truncated parallelogram with the layout data the matching analysis needs.
/// Rows stack upward, each shifted half a hexagon to the left of the one
/// below. One edge direction is vertical and the valleys are white.
struct HexSystem {
  TruncatedParallelogramSpec spec;
  PlaneBipartiteGraph graph;
  std::vector<Hexagon> hexagons;      // row-major; index matches hexagon_poset
  std::vector<Slant> slant;           // per edge
  std::vector<EdgeId> left_perimeter;   // L, sorted
  std::vector<EdgeId> bottom_perimeter; // B, sorted
  EdgeId forcing_edge = 0;            // left vertical edge of the bottom-left hexagon

  int hexagon_of_face(FaceId f) const;
};

HexSystem truncated_parallelogram(const TruncatedParallelogramSpec& spec);

/// h_ij <= h_kl iff i <= k and j <= l; labels "h<i>,<j>" counted from 1.
FinitePoset hexagon_poset(const TruncatedParallelogramSpec& spec);

/// C_M = M xor root, H_M the hexagons it bounds, P_M = (L u B) xor C_M.
struct SubparallelogramView {
  std::vector<EdgeId> cycle;
  std::vector<int> hexagons;  // indices into HexSystem::hexagons, sorted
  std::vector<EdgeId> path;
  // edges of M off P_M all run from upper left to lower right
  bool uniform_slant = false;
  // each M-alternating hexagon meets P_M in 3 consecutive edges, and is proper iff inside H_M
  bool alternating_hexagons_consistent = false;
};

/// Throws NotAMatching.
SubparallelogramView matching_geometry(const HexSystem& h, const Matching& m, const Matching& root);

struct ParallelogramCertificate {
  MatchingPoset mp;
  FinitePoset faces;          // hexagon_poset
  IdealLattice ideals;        // J(F(H))
  std::vector<int> map;       // matching -> ideal, via H_M
  std::vector<std::pair<int, int>> psi;  // join-irreducible matching -> hexagon
  bool generic_iso = false;
};

/// M -> H_M is an isomorphism M(H) -> J(F(H)); psi maps join-irreducibles to
/// the right-up-most hexagon of H_M. Throws IsoFailure.
ParallelogramCertificate verify_iso_parallelogram(const HexSystem& h, const Caps& caps = {});

/// Orientation of a tree on nodes 0..n-1.
struct OrientedTree {
  int nodes = 1;
  std::vector<std::pair<int, int>> arcs;

  /// Throws NotATree.
  void validate() const;
  int in_degree(int v) const;
  int out_degree(int v) const;
  int max_degree() const;
};

struct TreeRealization {
  PlaneBipartiteGraph graph;
  std::vector<FaceId> face_of_node;
};

/// Two-connected outerplane graph whose inner oriented dual is the tree. Each
/// node becomes a face of length 2*max(max degree, 2), or 2*max(in, out, 2)
/// when `optimize` is set. Throws NotATree, IsoFailure.
TreeRealization realize_tree(const OrientedTree& t, bool optimize = false);
PlaneBipartiteGraph tree_to_outerplane(const OrientedTree& t, bool optimize = false);

/// Plane graph assembled from inner faces given as clockwise vertex cycles.
/// Throws EmbeddingConflict when the faces do not close up into a disc.
PlaneBipartiteGraph embed_from_inner_faces(const std::vector<Color>& colors,
                                           const std::vector<std::vector<VertexId>>& faces);

/// Joins consecutive graphs with one new edge between opposite-coloured outer
/// vertices; the first such pair in index order is used. Throws ColorClash.
PlaneBipartiteGraph link_components(const std::vector<PlaneBipartiteGraph>& graphs);

/// Cycle of length n (even, >= 4), vertex 0 white.
PlaneBipartiteGraph even_cycle(int n);

/// Every monotone row profile with 1..max_hexagons hexagons, by size then
/// reverse lexicographic rows.
std::vector<TruncatedParallelogramSpec> row_profiles(int max_hexagons);

/// One tree per isomorphism class on `nodes` nodes; arcs point from the
/// smaller to the larger id.
std::vector<OrientedTree> tree_shapes(int nodes);

/// Bit i of `mask` reverses arc i.
OrientedTree orient(const OrientedTree& shape, std::uint64_t mask);

}  // namespace mdl
