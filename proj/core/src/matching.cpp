#include "mdl/matching.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

namespace mdl {

bool Matching::contains(EdgeId e) const { return std::binary_search(edges.begin(), edges.end(), e); }

const char* to_string(Orientation o) { return o == Orientation::Proper ? "proper" : "improper"; }

namespace {

constexpr std::size_t kMaskBits = 64;

class MatchingEnumerator {
 public:
  MatchingEnumerator(std::size_t n, std::span<const Edge> edges, std::size_t cap)
      : n_(n), edges_(edges), cap_(cap), adj_(n) {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      adj_[static_cast<std::size_t>(edges[e].u)].push_back({edges[e].v, static_cast<EdgeId>(e)});
      adj_[static_cast<std::size_t>(edges[e].v)].push_back({edges[e].u, static_cast<EdgeId>(e)});
    }
  }

  std::vector<Matching> run() {
    if (n_ % 2 == 1) return {};
    const std::uint64_t all = n_ == kMaskBits ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
    recurse(all);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  struct Arc {
    VertexId to;
    EdgeId edge;
  };

  void recurse(std::uint64_t free) {
    if (free == 0) {
      Matching m{chosen_};
      std::sort(m.edges.begin(), m.edges.end());
      out_.push_back(std::move(m));
      if (out_.size() > cap_)
        fail(ErrorCode::SizeCapExceeded, "more than " + std::to_string(cap_) + " perfect matchings");
      return;
    }
    // uncovered vertex with the fewest uncovered neighbours
    int best = -1;
    int best_deg = 1 << 30;
    for (std::uint64_t rest = free; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      int deg = 0;
      for (const auto& a : adj_[static_cast<std::size_t>(v)])
        if (free >> a.to & 1) ++deg;
      if (deg < best_deg) {
        best_deg = deg;
        best = v;
        if (deg <= 1) break;
      }
    }
    if (best_deg == 0) return;
    const std::uint64_t without_best = free & ~(std::uint64_t{1} << best);
    for (const auto& a : adj_[static_cast<std::size_t>(best)]) {
      if (!(free >> a.to & 1)) continue;
      chosen_.push_back(a.edge);
      recurse(without_best & ~(std::uint64_t{1} << a.to));
      chosen_.pop_back();
    }
  }

  std::size_t n_;
  std::span<const Edge> edges_;
  std::size_t cap_;
  std::vector<std::vector<Arc>> adj_;
  std::vector<EdgeId> chosen_;
  std::vector<Matching> out_;
};

}  // namespace

std::vector<Matching> enumerate_perfect_matchings(std::size_t vertex_count, std::span<const Edge> edges,
                                                  const Caps& caps) {
  if (vertex_count > caps.max_vertices || vertex_count > kMaskBits)
    fail(ErrorCode::SizeCapExceeded, std::to_string(vertex_count) + " vertices exceeds the cap of " +
                                         std::to_string(std::min(caps.max_vertices, kMaskBits)));
  return MatchingEnumerator(vertex_count, edges, caps.max_matchings).run();
}

std::vector<Matching> enumerate_perfect_matchings(const PlaneBipartiteGraph& g, const Caps& caps) {
  return enumerate_perfect_matchings(g.vertex_count(), g.edges(), caps);
}

bool is_perfect_matching(const PlaneBipartiteGraph& g, const Matching& m) {
  if (!std::is_sorted(m.edges.begin(), m.edges.end())) return false;
  std::vector<int> cover(g.vertex_count(), 0);
  for (EdgeId e : m.edges) {
    if (e < 0 || static_cast<std::size_t>(e) >= g.edge_count()) return false;
    ++cover[static_cast<std::size_t>(g.edge(e).u)];
    ++cover[static_cast<std::size_t>(g.edge(e).v)];
  }
  return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

void require_perfect_matching(const PlaneBipartiteGraph& g, const Matching& m) {
  if (!is_perfect_matching(g, m)) fail(ErrorCode::NotAMatching, "edge set is not a sorted perfect matching");
}

Matching flip(const Matching& m, std::span<const EdgeId> edges) {
  std::vector<EdgeId> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  Matching out;
  std::set_symmetric_difference(m.edges.begin(), m.edges.end(), sorted.begin(), sorted.end(),
                                std::back_inserter(out.edges));
  return out;
}

std::vector<FaceClass> classify_alternating_faces(const PlaneBipartiteGraph& g, const Matching& m) {
  require_perfect_matching(g, m);
  std::vector<FaceClass> out;
  for (FaceId f : g.inner_faces()) {
    if (!g.face_is_simple_cycle(f)) continue;
    const auto& walk = g.face(f).boundary;
    bool alternating = true;
    for (std::size_t i = 0; i < walk.size() && alternating; ++i)
      alternating = m.contains(dart_edge(walk[i])) != m.contains(dart_edge(walk[(i + 1) % walk.size()]));
    if (!alternating) continue;
    out.push_back({f, cycle_orientation(g, m, walk)});
  }
  return out;
}

Orientation cycle_orientation(const PlaneBipartiteGraph& g, const Matching& m, std::span<const DartId> clockwise) {
  for (DartId d : clockwise)
    if (m.contains(dart_edge(d))) return g.white_to_black(d) ? Orientation::Proper : Orientation::Improper;
  fail(ErrorCode::NotAMatching, "cycle carries no matching edge");
}

namespace {

AlternatingCycleReport make_report(const PlaneBipartiteGraph& g, const Matching& m, std::vector<EdgeId> edges) {
  std::sort(edges.begin(), edges.end());
  AlternatingCycleReport r;
  r.cycle = clockwise_cycle(g, edges);
  r.enclosed_faces = faces_inside_cycle(g, edges);
  r.orientation = cycle_orientation(g, m, r.cycle);
  r.edges = std::move(edges);
  return r;
}

std::vector<std::vector<EdgeId>> split_cycles(const PlaneBipartiteGraph& g, const std::vector<EdgeId>& diff) {
  std::map<VertexId, std::vector<EdgeId>> at;
  for (EdgeId e : diff) {
    at[g.edge(e).u].push_back(e);
    at[g.edge(e).v].push_back(e);
  }
  std::vector<bool> used(g.edge_count(), false);
  std::vector<std::vector<EdgeId>> cycles;
  for (EdgeId e0 : diff) {
    if (used[static_cast<std::size_t>(e0)]) continue;
    std::vector<EdgeId> cyc;
    std::vector<EdgeId> stack{e0};
    used[static_cast<std::size_t>(e0)] = true;
    while (!stack.empty()) {
      const EdgeId e = stack.back();
      stack.pop_back();
      cyc.push_back(e);
      for (VertexId v : {g.edge(e).u, g.edge(e).v})
        for (EdgeId f : at[v])
          if (!used[static_cast<std::size_t>(f)]) {
            used[static_cast<std::size_t>(f)] = true;
            stack.push_back(f);
          }
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

}  // namespace

std::vector<AlternatingCycleReport> symmetric_difference_cycles(const PlaneBipartiteGraph& g, const Matching& m1,
                                                                const Matching& m2) {
  require_perfect_matching(g, m1);
  require_perfect_matching(g, m2);
  std::vector<EdgeId> diff;
  std::set_symmetric_difference(m1.edges.begin(), m1.edges.end(), m2.edges.begin(), m2.edges.end(),
                                std::back_inserter(diff));
  std::vector<AlternatingCycleReport> out;
  for (auto& cyc : split_cycles(g, diff)) out.push_back(make_report(g, m1, std::move(cyc)));
  std::sort(out.begin(), out.end(),
            [](const AlternatingCycleReport& a, const AlternatingCycleReport& b) { return a.edges < b.edges; });
  return out;
}

std::vector<EdgeId> forcing_edges(const PlaneBipartiteGraph& g, std::span<const Matching> matchings) {
  if (matchings.empty()) fail(ErrorCode::NoPerfectMatching, "graph has no perfect matching");
  std::vector<std::size_t> count(g.edge_count(), 0);
  for (const auto& m : matchings)
    for (EdgeId e : m.edges) ++count[static_cast<std::size_t>(e)];
  std::vector<EdgeId> out;
  for (std::size_t e = 0; e < count.size(); ++e)
    if (count[e] == 1) out.push_back(static_cast<EdgeId>(e));
  return out;
}

std::vector<EdgeId> forcing_edges(const PlaneBipartiteGraph& g, const Caps& caps) {
  const auto ms = enumerate_perfect_matchings(g, caps);
  return forcing_edges(g, ms);
}

std::vector<AlternatingCycleReport> all_alternating_cycles(const PlaneBipartiteGraph& g, const Matching& m,
                                                           std::span<const Matching> matchings) {
  require_perfect_matching(g, m);
  std::vector<AlternatingCycleReport> out;
  for (const auto& other : matchings) {
    if (other == m) continue;
    std::vector<EdgeId> diff;
    std::set_symmetric_difference(m.edges.begin(), m.edges.end(), other.edges.begin(), other.edges.end(),
                                  std::back_inserter(diff));
    auto cycles = split_cycles(g, diff);
    if (cycles.size() != 1) continue;
    out.push_back(make_report(g, m, std::move(cycles.front())));
  }
  std::sort(out.begin(), out.end(),
            [](const AlternatingCycleReport& a, const AlternatingCycleReport& b) { return a.edges < b.edges; });
  return out;
}

std::vector<AlternatingCycleReport> all_alternating_cycles(const PlaneBipartiteGraph& g, const Matching& m,
                                                           const Caps& caps) {
  const auto ms = enumerate_perfect_matchings(g, caps);
  return all_alternating_cycles(g, m, ms);
}

}  // namespace mdl
