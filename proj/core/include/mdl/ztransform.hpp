#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mdl/lattice.hpp"
#include "mdl/matching.hpp"
#include "mdl/poset.hpp"

namespace mdl {

/// Z-transformation digraph: arc M -> M' labelled f when the boundary of f is
/// proper M-alternating and M' = M xor boundary(f).
struct ZDigraph {
  struct Arc {
    int from = 0;
    int to = 0;
    FaceId face = 0;
  };
  std::vector<Matching> matchings;  // sorted; node i is matchings[i]
  std::vector<Arc> arcs;            // sorted by (from, to)
  std::vector<std::vector<int>> out;  // arc indices
  std::vector<std::vector<int>> in;

  int index_of(const Matching& m) const;
  std::optional<FaceId> arc_label(int from, int to) const;
};

/// Throws NoPerfectMatching, SizeCapExceeded, CycleDetected.
ZDigraph build_z_digraph(const PlaneBipartiteGraph& g, const Caps& caps = {});

/// M' <= M iff Z has a path M -> M'. Element i of `poset` is matching i and is
/// labelled "M<i>". The cover relation is certified equal to the arc set.
struct MatchingPoset {
  ZDigraph z;
  FinitePoset poset;
  std::vector<std::vector<int>> components;
};

MatchingPoset matching_poset(ZDigraph z);
MatchingPoset matching_poset(const PlaneBipartiteGraph& g, const Caps& caps = {});

/// The lattice M(G). Throws MultipleSources when the poset is not connected.
FiniteLattice matching_lattice(const MatchingPoset& mp);

/// One lattice per component; `elements[c][k]` is the matching behind element k.
struct ComponentLattices {
  std::vector<FiniteLattice> lattices;
  std::vector<std::vector<int>> elements;
};
ComponentLattices component_lattices(const MatchingPoset& mp);

struct ExtremalMatchings {
  int source = 0;  // top
  int root = 0;    // bottom
  // no improper source-alternating and no proper root-alternating cycle
  bool cycle_property_verified = false;
};

/// One entry per component. Throws MultipleSources / MultipleSinks if a
/// component has more than one.
std::vector<ExtremalMatchings> extremal_matchings_per_component(const PlaneBipartiteGraph& g, const MatchingPoset& mp);
/// Single-component form; throws MultipleSources / MultipleSinks with a breakdown otherwise.
ExtremalMatchings extremal_matchings(const PlaneBipartiteGraph& g, const MatchingPoset& mp);

/// Signed count of the cycles of M xor M' enclosing f: +1 when proper with
/// respect to M, -1 when improper. Throws NotComparable unless M' <= M.
int delta_cycle_count(const PlaneBipartiteGraph& g, const MatchingPoset& mp, int m, int m_prime, FaceId f);
/// Same for every inner face at once, indexed by face id (outer face entry 0).
std::vector<int> delta_cycle_counts(const PlaneBipartiteGraph& g, const MatchingPoset& mp, int m, int m_prime);

/// Occurrences of f among the arc labels of the node sequence `path`. Throws NotAPath.
int path_face_multiplicity(const ZDigraph& z, std::span<const int> path, FaceId f);

struct PathSet {
  std::vector<std::vector<int>> paths;
  bool truncated = false;
};
/// Directed paths from `from` to `to`, at most `max_paths` of them.
PathSet directed_paths(const ZDigraph& z, int from, int to, std::size_t max_paths);

struct FacePoset {
  FinitePoset poset;           // labels "f<id>"
  std::vector<FaceId> faces;   // element k is face faces[k]
  int element_of(FaceId f) const;
};

/// f1 <= f2 iff the inner dual has a directed path f2 -> f1. Throws
/// NotOuterplane, DirectedCycleInInnerDual.
FacePoset face_poset_outerplane(const PlaneBipartiteGraph& g);

/// Faces inside the cycles of M xor root, as a set over the face poset;
/// certified to be a down-set (IsoFailure otherwise).
Bitset sigma(const PlaneBipartiteGraph& g, const FacePoset& fp, const Matching& m, const Matching& root);

struct SigmaCertificate {
  MatchingPoset mp;
  FacePoset faces;
  IdealLattice ideals;
  std::vector<int> map;  // matching index -> ideal index
};

/// sigma is a bijection onto the down-sets and preserves order both ways.
/// Throws NotOuterplane, IsoFailure.
SigmaCertificate verify_iso_matchings_ideals(const PlaneBipartiteGraph& g, const Caps& caps = {});

}  // namespace mdl
