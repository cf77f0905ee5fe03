#include "mdl/ztransform.hpp"

#include <algorithm>
#include <map>

namespace mdl {

int ZDigraph::index_of(const Matching& m) const {
  auto it = std::lower_bound(matchings.begin(), matchings.end(), m);
  if (it == matchings.end() || *it != m) return -1;
  return static_cast<int>(it - matchings.begin());
}

std::optional<FaceId> ZDigraph::arc_label(int from, int to) const {
  for (int a : out[static_cast<std::size_t>(from)])
    if (arcs[static_cast<std::size_t>(a)].to == to) return arcs[static_cast<std::size_t>(a)].face;
  return std::nullopt;
}

ZDigraph build_z_digraph(const PlaneBipartiteGraph& g, const Caps& caps) {
  if (g.inner_face_count() > caps.max_inner_faces)
    fail(ErrorCode::SizeCapExceeded, std::to_string(g.inner_face_count()) + " inner faces exceeds the cap of " +
                                         std::to_string(caps.max_inner_faces));
  ZDigraph z;
  z.matchings = enumerate_perfect_matchings(g, caps);
  if (z.matchings.empty()) fail(ErrorCode::NoPerfectMatching, "graph has no perfect matching");
  const std::size_t n = z.matchings.size();
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& fc : classify_alternating_faces(g, z.matchings[i])) {
      if (fc.orientation != Orientation::Proper) continue;
      const auto boundary = g.face_edges(fc.face);
      const int j = z.index_of(flip(z.matchings[i], boundary));
      if (j < 0) fail(ErrorCode::NotAMatching, "face flip left the matching set");
      z.arcs.push_back({static_cast<int>(i), j, fc.face});
    }
  std::sort(z.arcs.begin(), z.arcs.end(),
            [](const ZDigraph::Arc& a, const ZDigraph::Arc& b) { return std::pair(a.from, a.to) < std::pair(b.from, b.to); });
  z.out.assign(n, {});
  z.in.assign(n, {});
  for (std::size_t a = 0; a < z.arcs.size(); ++a) {
    z.out[static_cast<std::size_t>(z.arcs[a].from)].push_back(static_cast<int>(a));
    z.in[static_cast<std::size_t>(z.arcs[a].to)].push_back(static_cast<int>(a));
  }
  std::vector<std::size_t> indeg(n);
  std::vector<int> ready;
  for (std::size_t v = 0; v < n; ++v)
    if ((indeg[v] = z.in[v].size()) == 0) ready.push_back(static_cast<int>(v));
  std::size_t seen = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++seen;
    for (int a : z.out[static_cast<std::size_t>(v)]) {
      const auto t = static_cast<std::size_t>(z.arcs[static_cast<std::size_t>(a)].to);
      if (--indeg[t] == 0) ready.push_back(static_cast<int>(t));
    }
  }
  if (seen != n) fail(ErrorCode::CycleDetected, "Z-transformation digraph has a directed cycle");
  return z;
}

MatchingPoset matching_poset(ZDigraph z) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < z.matchings.size(); ++i) labels.push_back("M" + std::to_string(i));
  std::vector<std::pair<int, int>> covers;
  for (const auto& a : z.arcs) covers.emplace_back(a.to, a.from);
  MatchingPoset mp;
  mp.poset = FinitePoset(std::move(labels), std::move(covers));
  mp.components = mp.poset.components();
  mp.z = std::move(z);
  return mp;
}

MatchingPoset matching_poset(const PlaneBipartiteGraph& g, const Caps& caps) {
  return matching_poset(build_z_digraph(g, caps));
}

FiniteLattice matching_lattice(const MatchingPoset& mp) {
  if (mp.components.size() != 1)
    fail(ErrorCode::MultipleSources, "matching poset has " + std::to_string(mp.components.size()) + " components");
  return lattice_from_poset(mp.poset);
}

ComponentLattices component_lattices(const MatchingPoset& mp) {
  ComponentLattices out;
  for (const auto& comp : mp.components) {
    out.lattices.push_back(lattice_from_poset(mp.poset.induced(comp)));
    out.elements.push_back(comp);
  }
  return out;
}

namespace {

ExtremalMatchings extremes_of(const PlaneBipartiteGraph& g, const MatchingPoset& mp, const std::vector<int>& comp,
                              std::size_t index) {
  std::vector<int> sources, sinks;
  for (int v : comp) {
    if (mp.z.in[static_cast<std::size_t>(v)].empty()) sources.push_back(v);
    if (mp.z.out[static_cast<std::size_t>(v)].empty()) sinks.push_back(v);
  }
  const std::string where = "component " + std::to_string(index);
  if (sources.size() != 1)
    fail(ErrorCode::MultipleSources, where + " has " + std::to_string(sources.size()) + " sources");
  if (sinks.size() != 1) fail(ErrorCode::MultipleSinks, where + " has " + std::to_string(sinks.size()) + " sinks");
  ExtremalMatchings e{sources.front(), sinks.front(), true};
  const auto& ms = mp.z.matchings;
  for (const auto& c : all_alternating_cycles(g, ms[static_cast<std::size_t>(e.source)], ms))
    if (c.orientation == Orientation::Improper) e.cycle_property_verified = false;
  for (const auto& c : all_alternating_cycles(g, ms[static_cast<std::size_t>(e.root)], ms))
    if (c.orientation == Orientation::Proper) e.cycle_property_verified = false;
  return e;
}

}  // namespace

std::vector<ExtremalMatchings> extremal_matchings_per_component(const PlaneBipartiteGraph& g,
                                                                const MatchingPoset& mp) {
  std::vector<ExtremalMatchings> out;
  for (std::size_t c = 0; c < mp.components.size(); ++c) out.push_back(extremes_of(g, mp, mp.components[c], c));
  return out;
}

ExtremalMatchings extremal_matchings(const PlaneBipartiteGraph& g, const MatchingPoset& mp) {
  if (mp.components.size() > 1) {
    std::string sizes;
    for (const auto& c : mp.components) sizes += (sizes.empty() ? "" : ", ") + std::to_string(c.size());
    fail(ErrorCode::MultipleSources,
         std::to_string(mp.components.size()) + " components of sizes " + sizes + ", one source each");
  }
  return extremes_of(g, mp, mp.components.front(), 0);
}

std::vector<int> delta_cycle_counts(const PlaneBipartiteGraph& g, const MatchingPoset& mp, int m, int m_prime) {
  if (!mp.poset.leq(m_prime, m))
    fail(ErrorCode::NotComparable, mp.poset.label(m_prime) + " is not below " + mp.poset.label(m));
  std::vector<int> delta(g.face_count(), 0);
  const auto& ms = mp.z.matchings;
  for (const auto& c :
       symmetric_difference_cycles(g, ms[static_cast<std::size_t>(m)], ms[static_cast<std::size_t>(m_prime)]))
    for (FaceId f : c.enclosed_faces) delta[static_cast<std::size_t>(f)] += c.orientation == Orientation::Proper ? 1 : -1;
  return delta;
}

int delta_cycle_count(const PlaneBipartiteGraph& g, const MatchingPoset& mp, int m, int m_prime, FaceId f) {
  return delta_cycle_counts(g, mp, m, m_prime)[static_cast<std::size_t>(f)];
}

int path_face_multiplicity(const ZDigraph& z, std::span<const int> path, FaceId f) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const auto label = z.arc_label(path[i], path[i + 1]);
    if (!label)
      fail(ErrorCode::NotAPath, "no arc M" + std::to_string(path[i]) + " -> M" + std::to_string(path[i + 1]));
    if (*label == f) ++count;
  }
  return count;
}

PathSet directed_paths(const ZDigraph& z, int from, int to, std::size_t max_paths) {
  PathSet out;
  // prune to nodes that still reach `to`
  std::vector<bool> reaches(z.matchings.size(), false);
  std::vector<int> stack{to};
  reaches[static_cast<std::size_t>(to)] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int a : z.in[static_cast<std::size_t>(v)]) {
      const int u = z.arcs[static_cast<std::size_t>(a)].from;
      if (!reaches[static_cast<std::size_t>(u)]) {
        reaches[static_cast<std::size_t>(u)] = true;
        stack.push_back(u);
      }
    }
  }
  if (!reaches[static_cast<std::size_t>(from)]) return out;
  std::vector<int> path{from};
  auto dfs = [&](auto&& self, int v) -> void {
    if (out.truncated) return;
    if (v == to) {
      if (out.paths.size() == max_paths) {
        out.truncated = true;
        return;
      }
      out.paths.push_back(path);
      return;
    }
    for (int a : z.out[static_cast<std::size_t>(v)]) {
      const int w = z.arcs[static_cast<std::size_t>(a)].to;
      if (!reaches[static_cast<std::size_t>(w)]) continue;
      path.push_back(w);
      self(self, w);
      path.pop_back();
    }
  };
  dfs(dfs, from);
  return out;
}

int FacePoset::element_of(FaceId f) const {
  auto it = std::find(faces.begin(), faces.end(), f);
  return it == faces.end() ? -1 : static_cast<int>(it - faces.begin());
}

FacePoset face_poset_outerplane(const PlaneBipartiteGraph& g) {
  if (!is_two_connected_outerplane(g)) fail(ErrorCode::NotOuterplane, "graph is not 2-connected outerplane");
  const auto dual = oriented_dual(g, false);
  FacePoset fp;
  fp.faces = dual.nodes;
  std::vector<std::string> labels;
  for (FaceId f : fp.faces) labels.push_back("f" + std::to_string(f));
  std::vector<std::pair<int, int>> less;
  for (const auto& a : dual.arcs) less.emplace_back(a.to, a.from);
  try {
    fp.poset = FinitePoset::from_relations(std::move(labels), less);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::CycleDetected) fail(ErrorCode::DirectedCycleInInnerDual, "inner dual has a directed cycle");
    throw;
  }
  return fp;
}

Bitset sigma(const PlaneBipartiteGraph& g, const FacePoset& fp, const Matching& m, const Matching& root) {
  Bitset s(fp.faces.size());
  for (const auto& c : symmetric_difference_cycles(g, m, root))
    for (FaceId f : c.enclosed_faces) {
      const int k = fp.element_of(f);
      if (k < 0) fail(ErrorCode::NotOuterplane, "face " + std::to_string(f) + " is not in the face poset");
      s.set(static_cast<std::size_t>(k));
    }
  for (auto k = s.find_first(); k != Bitset::npos; k = s.find_next(k))
    if (!fp.poset.down_set(static_cast<int>(k)).is_subset_of(s))
      fail(ErrorCode::IsoFailure, "sigma image is not a down-set at " + fp.poset.label(static_cast<int>(k)));
  return s;
}

SigmaCertificate verify_iso_matchings_ideals(const PlaneBipartiteGraph& g, const Caps& caps) {
  if (!is_two_connected_outerplane(g)) fail(ErrorCode::NotOuterplane, "graph is not 2-connected outerplane");
  SigmaCertificate cert;
  cert.mp = matching_poset(g, caps);
  cert.faces = face_poset_outerplane(g);
  cert.ideals = order_ideal_lattice(cert.faces.poset, caps.max_lattice_elements);
  const auto ext = extremal_matchings(g, cert.mp);
  const auto& ms = cert.mp.z.matchings;
  const Matching& root = ms[static_cast<std::size_t>(ext.root)];
  if (ms.size() != cert.ideals.ideals.size())
    fail(ErrorCode::IsoFailure, std::to_string(ms.size()) + " matchings but " +
                                    std::to_string(cert.ideals.ideals.size()) + " order ideals");
  std::vector<int> hit(ms.size(), -1);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const int k = cert.ideals.index_of(sigma(g, cert.faces, ms[i], root));
    if (k < 0 || hit[static_cast<std::size_t>(k)] >= 0)
      fail(ErrorCode::IsoFailure, "sigma is not injective at " + cert.mp.poset.label(static_cast<int>(i)));
    hit[static_cast<std::size_t>(k)] = static_cast<int>(i);
    cert.map.push_back(k);
  }
  const int n = static_cast<int>(ms.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (cert.mp.poset.leq(a, b) !=
          cert.ideals.lattice.leq(cert.map[static_cast<std::size_t>(a)], cert.map[static_cast<std::size_t>(b)]))
        fail(ErrorCode::IsoFailure, "sigma breaks order on (" + cert.mp.poset.label(a) + ", " +
                                        cert.mp.poset.label(b) + ")");
  return cert;
}

}  // namespace mdl
