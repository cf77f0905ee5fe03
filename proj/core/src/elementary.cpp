#include "mdl/elementary.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace mdl {

namespace {

// pair-count bound for the brute-force weak elementarity check
constexpr std::size_t kMaxWeakPairs = 50'000'000;

std::vector<int> components_of(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& e : edges) parent[static_cast<std::size_t>(find(e.u))] = find(e.v);
  std::vector<int> comp(n);
  for (std::size_t v = 0; v < n; ++v) comp[v] = find(static_cast<int>(v));
  return comp;
}

}  // namespace

bool subgraph_is_elementary(const PlaneBipartiteGraph& g, const std::vector<EdgeId>& edges, const Caps& caps) {
  std::map<VertexId, int> local;
  for (EdgeId e : edges) {
    local.emplace(g.edge(e).u, 0);
    local.emplace(g.edge(e).v, 0);
  }
  int next = 0;
  for (auto& [v, id] : local) id = next++;
  std::vector<Edge> sub;
  for (EdgeId e : edges) sub.push_back({local.at(g.edge(e).u), local.at(g.edge(e).v)});
  const auto comp = components_of(local.size(), sub);
  if (std::any_of(comp.begin(), comp.end(), [&](int c) { return c != comp.front(); })) return false;
  const auto ms = enumerate_perfect_matchings(local.size(), sub, caps);
  std::vector<bool> allowed(sub.size(), false);
  for (const auto& m : ms)
    for (EdgeId e : m.edges) allowed[static_cast<std::size_t>(e)] = true;
  return !ms.empty() && std::all_of(allowed.begin(), allowed.end(), [](bool b) { return b; });
}

ElementaryStructure elementary_structure(const PlaneBipartiteGraph& g, const Caps& caps) {
  if (g.inner_face_count() > caps.max_inner_faces)
    fail(ErrorCode::SizeCapExceeded, std::to_string(g.inner_face_count()) + " inner faces exceeds the cap of " +
                                         std::to_string(caps.max_inner_faces));
  const auto ms = enumerate_perfect_matchings(g, caps);
  if (ms.empty()) fail(ErrorCode::NoPerfectMatching, "graph has no perfect matching");

  ElementaryStructure out;
  std::vector<bool> allowed(g.edge_count(), false);
  for (const auto& m : ms)
    for (EdgeId e : m.edges) allowed[static_cast<std::size_t>(e)] = true;
  std::vector<Edge> kept;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (allowed[e])
      kept.push_back(g.edge(static_cast<EdgeId>(e)));
    else
      out.forbidden_edges.push_back(static_cast<EdgeId>(e));
  }
  const auto comp = components_of(g.vertex_count(), kept);
  std::map<int, std::vector<VertexId>> groups;
  for (std::size_t v = 0; v < comp.size(); ++v) groups[comp[v]].push_back(static_cast<VertexId>(v));
  for (auto& [root, vs] : groups)
    if (vs.size() > 2) out.elementary_components.push_back(std::move(vs));
  std::sort(out.elementary_components.begin(), out.elementary_components.end());
  out.is_elementary = out.forbidden_edges.empty() && (groups.size() == 1);

  if (ms.size() * ms.size() / 2 > kMaxWeakPairs)
    fail(ErrorCode::SizeCapExceeded, "too many matchings for the weak elementarity check");
  // every alternating cycle is the difference of two matchings differing on one cycle
  std::map<std::vector<FaceId>, bool> cache;
  out.is_weakly_elementary = true;
  for (std::size_t i = 0; i < ms.size() && out.is_weakly_elementary; ++i)
    for (std::size_t j = i + 1; j < ms.size() && out.is_weakly_elementary; ++j) {
      std::vector<EdgeId> diff;
      std::set_symmetric_difference(ms[i].edges.begin(), ms[i].edges.end(), ms[j].edges.begin(), ms[j].edges.end(),
                                    std::back_inserter(diff));
      std::set<VertexId> touched;
      for (EdgeId e : diff) {
        touched.insert(g.edge(e).u);
        touched.insert(g.edge(e).v);
      }
      if (touched.size() != diff.size()) continue;  // more than one cycle
      {
        // one cycle iff the edges form a single connected piece
        std::map<VertexId, int> local;
        for (VertexId v : touched) local.emplace(v, static_cast<int>(local.size()));
        std::vector<Edge> sub;
        for (EdgeId e : diff) sub.push_back({local.at(g.edge(e).u), local.at(g.edge(e).v)});
        const auto c = components_of(local.size(), sub);
        if (std::any_of(c.begin(), c.end(), [&](int x) { return x != c.front(); })) continue;
      }
      auto faces = faces_inside_cycle(g, diff);
      auto it = cache.find(faces);
      if (it == cache.end()) {
        std::set<EdgeId> region(diff.begin(), diff.end());
        for (FaceId f : faces)
          for (EdgeId e : g.face_edges(f)) region.insert(e);
        it = cache.emplace(faces, subgraph_is_elementary(g, {region.begin(), region.end()}, caps)).first;
      }
      out.is_weakly_elementary = it->second;
    }
  return out;
}

}  // namespace mdl
