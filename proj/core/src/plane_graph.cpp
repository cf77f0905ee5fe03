#include "mdl/plane_graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace mdl {

namespace {

std::vector<int> components(std::size_t n, const std::vector<Edge>& edges, const std::vector<bool>& removed,
                            int& count) {
  std::vector<std::vector<VertexId>> adj(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!removed.empty() && removed[e]) continue;
    adj[static_cast<std::size_t>(edges[e].u)].push_back(edges[e].v);
    adj[static_cast<std::size_t>(edges[e].v)].push_back(edges[e].u);
  }
  std::vector<int> comp(n, -1);
  count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (VertexId y : adj[x]) {
        if (comp[static_cast<std::size_t>(y)] == -1) {
          comp[static_cast<std::size_t>(y)] = count;
          stack.push_back(static_cast<std::size_t>(y));
        }
      }
    }
    ++count;
  }
  return comp;
}

bool two_colorable(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::vector<VertexId>> adj(n);
  for (const auto& e : edges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<int> side(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      auto x = q.front();
      q.pop();
      for (VertexId y : adj[x]) {
        auto& sy = side[static_cast<std::size_t>(y)];
        if (sy == -1) {
          sy = 1 - side[x];
          q.push(static_cast<std::size_t>(y));
        } else if (sy == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

PlaneBipartiteGraph PlaneBipartiteGraph::build(std::vector<Color> colors, std::vector<Edge> edges,
                                               std::vector<std::vector<EdgeId>> rotation,
                                               std::optional<FaceId> outer_face, std::vector<int> labels) {
  PlaneBipartiteGraph g;
  const std::size_t n = colors.size();
  if (n == 0) fail(ErrorCode::InvalidInput, "graph has no vertices");
  if (labels.empty()) {
    labels.resize(n);
    std::iota(labels.begin(), labels.end(), 0);
  }
  if (labels.size() != n) fail(ErrorCode::InvalidInput, "label count does not match vertex count");

  std::set<std::pair<VertexId, VertexId>> seen;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      fail(ErrorCode::InvalidInput, "edge " + std::to_string(e) + " refers to an unknown vertex");
    if (u == v) fail(ErrorCode::NotBipartite, "edge " + std::to_string(e) + " is a loop");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
      fail(ErrorCode::DuplicateEdge, "edge " + std::to_string(e) + " repeats {" + std::to_string(labels[u]) +
                                         "," + std::to_string(labels[v]) + "}");
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (colors[static_cast<std::size_t>(edges[e].u)] == colors[static_cast<std::size_t>(edges[e].v)]) {
      if (!two_colorable(n, edges)) fail(ErrorCode::NotBipartite, "graph contains an odd cycle");
      fail(ErrorCode::ImproperColoring, "edge " + std::to_string(e) + " joins two vertices of the same color");
    }
  }
  int ncomp = 0;
  components(n, edges, {}, ncomp);
  if (ncomp != 1) fail(ErrorCode::Disconnected, std::to_string(ncomp) + " components");

  // Rotation: validate as a permutation of incident edges; fill in trivial ones.
  std::vector<std::vector<EdgeId>> incident(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[static_cast<std::size_t>(edges[e].u)].push_back(static_cast<EdgeId>(e));
    incident[static_cast<std::size_t>(edges[e].v)].push_back(static_cast<EdgeId>(e));
  }
  rotation.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (rotation[v].empty()) {
      if (incident[v].size() > 2)
        fail(ErrorCode::InvalidInput, "vertex " + std::to_string(labels[v]) + " needs a rotation (degree " +
                                          std::to_string(incident[v].size()) + ")");
      rotation[v] = incident[v];
      continue;
    }
    auto a = rotation[v];
    auto b = incident[v];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      fail(ErrorCode::InvalidInput,
           "rotation at vertex " + std::to_string(labels[v]) + " is not a permutation of its incident edges");
  }

  g.colors_ = std::move(colors);
  g.labels_ = std::move(labels);
  g.edges_ = std::move(edges);
  g.rotation_ = std::move(rotation);

  const std::size_t ndarts = 2 * g.edges_.size();
  g.head_slot_.assign(ndarts, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& rot = g.rotation_[v];
    for (std::size_t k = 0; k < rot.size(); ++k) {
      const EdgeId e = rot[k];
      // dart arriving at v along e
      const DartId in = g.edges_[static_cast<std::size_t>(e)].v == static_cast<VertexId>(v) ? make_dart(e, false)
                                                                                           : make_dart(e, true);
      g.head_slot_[static_cast<std::size_t>(in)] = k;
    }
  }

  g.dart_face_.assign(ndarts, -1);
  for (std::size_t d0 = 0; d0 < ndarts; ++d0) {
    if (g.dart_face_[d0] != -1) continue;
    FaceWalk walk;
    walk.id = static_cast<FaceId>(g.faces_.size());
    DartId d = static_cast<DartId>(d0);
    while (g.dart_face_[static_cast<std::size_t>(d)] == -1) {
      g.dart_face_[static_cast<std::size_t>(d)] = walk.id;
      walk.boundary.push_back(d);
      const VertexId at = g.head(d);
      const auto& rot = g.rotation_[static_cast<std::size_t>(at)];
      const std::size_t slot = g.head_slot_[static_cast<std::size_t>(d)];
      const EdgeId next = rot[(slot + rot.size() - 1) % rot.size()];
      d = g.edges_[static_cast<std::size_t>(next)].u == at ? make_dart(next, false) : make_dart(next, true);
    }
    if (d != static_cast<DartId>(d0)) fail(ErrorCode::EulerViolation, "face tracing did not close");
    g.faces_.push_back(std::move(walk));
  }
  if (g.faces_.empty()) {
    // single vertex: one face with an empty walk
    g.faces_.push_back(FaceWalk{0, {}, true});
  }

  const long euler = static_cast<long>(n) - static_cast<long>(g.edges_.size()) + static_cast<long>(g.faces_.size());
  if (euler != 2) {
    std::ostringstream os;
    os << "V - E + F = " << n << " - " << g.edges_.size() << " + " << g.faces_.size() << " = " << euler;
    fail(ErrorCode::EulerViolation, os.str());
  }

  if (outer_face) {
    if (*outer_face < 0 || static_cast<std::size_t>(*outer_face) >= g.faces_.size())
      fail(ErrorCode::InvalidInput, "outer_face " + std::to_string(*outer_face) + " out of range");
    g.outer_face_ = *outer_face;
  } else {
    std::size_t best = 0;
    int count = 0;
    for (const auto& f : g.faces_) {
      if (f.boundary.size() > best) {
        best = f.boundary.size();
        count = 1;
        g.outer_face_ = f.id;
      } else if (f.boundary.size() == best) {
        ++count;
      }
    }
    if (count > 1)
      fail(ErrorCode::InputRequired,
           std::to_string(count) + " faces share the maximum walk length; supply outer_face");
  }
  g.faces_[static_cast<std::size_t>(g.outer_face_)].is_outer = true;
  return g;
}

VertexId PlaneBipartiteGraph::white_end(EdgeId e) const {
  const auto& ed = edge(e);
  return color(ed.u) == Color::White ? ed.u : ed.v;
}

VertexId PlaneBipartiteGraph::black_end(EdgeId e) const {
  const auto& ed = edge(e);
  return color(ed.u) == Color::Black ? ed.u : ed.v;
}

VertexId PlaneBipartiteGraph::other_end(EdgeId e, VertexId v) const {
  const auto& ed = edge(e);
  return ed.u == v ? ed.v : ed.u;
}

std::optional<EdgeId> PlaneBipartiteGraph::edge_between(VertexId a, VertexId b) const {
  for (EdgeId e : rotation(a))
    if (other_end(e, a) == b) return e;
  return std::nullopt;
}

VertexId PlaneBipartiteGraph::tail(DartId d) const {
  const auto& ed = edge(dart_edge(d));
  return (d & 1) ? ed.v : ed.u;
}

VertexId PlaneBipartiteGraph::head(DartId d) const {
  const auto& ed = edge(dart_edge(d));
  return (d & 1) ? ed.u : ed.v;
}

std::vector<FaceId> PlaneBipartiteGraph::inner_faces() const {
  std::vector<FaceId> out;
  for (const auto& f : faces_)
    if (!f.is_outer) out.push_back(f.id);
  return out;
}

std::vector<VertexId> PlaneBipartiteGraph::face_vertices(FaceId f) const {
  std::vector<VertexId> out;
  for (DartId d : face(f).boundary) out.push_back(tail(d));
  return out;
}

std::vector<EdgeId> PlaneBipartiteGraph::face_edges(FaceId f) const {
  std::vector<EdgeId> out;
  for (DartId d : face(f).boundary) out.push_back(dart_edge(d));
  return out;
}

bool PlaneBipartiteGraph::face_is_simple_cycle(FaceId f) const {
  auto vs = face_vertices(f);
  if (vs.size() < 4) return false;
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

PlaneBipartiteGraph load_graph(const GraphDescription& description) {
  std::map<int, VertexId> index;
  std::vector<Color> colors;
  std::vector<int> labels;
  for (const auto& v : description.vertices) {
    if (!index.emplace(v.id, static_cast<VertexId>(colors.size())).second)
      fail(ErrorCode::InvalidInput, "duplicate vertex id " + std::to_string(v.id));
    colors.push_back(v.color);
    labels.push_back(v.id);
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : description.edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      fail(ErrorCode::InvalidInput, "edge [" + std::to_string(a) + "," + std::to_string(b) + "] uses an unknown vertex");
    edges.push_back({ia->second, ib->second});
  }
  std::vector<std::vector<EdgeId>> rotation(colors.size());
  for (const auto& [vid, rot] : description.rotation) {
    auto it = index.find(vid);
    if (it == index.end()) fail(ErrorCode::InvalidInput, "rotation for unknown vertex " + std::to_string(vid));
    for (EdgeId e : rot)
      if (e < 0 || static_cast<std::size_t>(e) >= edges.size())
        fail(ErrorCode::InvalidInput, "rotation at " + std::to_string(vid) + " lists unknown edge " + std::to_string(e));
    rotation[static_cast<std::size_t>(it->second)] = rot;
  }
  return PlaneBipartiteGraph::build(std::move(colors), std::move(edges), std::move(rotation), description.outer_face,
                                    std::move(labels));
}

const std::vector<FaceWalk>& trace_faces(const PlaneBipartiteGraph& g) { return g.faces(); }

int DualDigraph::node_of(FaceId f) const {
  auto it = std::find(nodes.begin(), nodes.end(), f);
  return it == nodes.end() ? -1 : static_cast<int>(it - nodes.begin());
}

DualDigraph oriented_dual(const PlaneBipartiteGraph& g, bool include_outer) {
  DualDigraph dual;
  dual.includes_outer = include_outer;
  std::vector<int> node(g.face_count(), -1);
  for (const auto& f : g.faces()) {
    if (f.is_outer && !include_outer) continue;
    node[static_cast<std::size_t>(f.id)] = static_cast<int>(dual.nodes.size());
    dual.nodes.push_back(f.id);
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto eid = static_cast<EdgeId>(e);
    // the face walking e black -> white is the arc's source
    DartId bw = make_dart(eid, false);
    if (g.white_to_black(bw)) bw = dart_reverse(bw);
    const FaceId from = g.face_of_dart(bw);
    const FaceId to = g.face_of_dart(dart_reverse(bw));
    if (from == to) continue;  // bridge: no dual arc between distinct faces
    const int a = node[static_cast<std::size_t>(from)];
    const int b = node[static_cast<std::size_t>(to)];
    if (a < 0 || b < 0) continue;
    dual.arcs.push_back({a, b, eid});
  }
  return dual;
}

namespace {

void check_cycle(const PlaneBipartiteGraph& g, std::span<const EdgeId> cycle) {
  if (cycle.size() < 4) fail(ErrorCode::NotACycle, "fewer than four edges");
  std::vector<int> deg(g.vertex_count(), 0);
  std::set<EdgeId> uniq;
  for (EdgeId e : cycle) {
    if (e < 0 || static_cast<std::size_t>(e) >= g.edge_count()) fail(ErrorCode::NotACycle, "unknown edge");
    if (!uniq.insert(e).second) fail(ErrorCode::NotACycle, "repeated edge " + std::to_string(e));
    ++deg[static_cast<std::size_t>(g.edge(e).u)];
    ++deg[static_cast<std::size_t>(g.edge(e).v)];
  }
  for (int d : deg)
    if (d != 0 && d != 2) fail(ErrorCode::NotACycle, "vertex degree " + std::to_string(d) + " inside edge set");
  // connectivity of the edge set
  const VertexId start = g.edge(cycle.front()).u;
  std::set<VertexId> reached{start};
  std::vector<VertexId> stack{start};
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (EdgeId e : cycle) {
      const auto& ed = g.edge(e);
      VertexId y = -1;
      if (ed.u == x) y = ed.v;
      else if (ed.v == x) y = ed.u;
      if (y >= 0 && reached.insert(y).second) stack.push_back(y);
    }
  }
  if (reached.size() != cycle.size()) fail(ErrorCode::NotACycle, "edge set splits into several cycles");
}

std::vector<bool> inside_mask(const PlaneBipartiteGraph& g, std::span<const EdgeId> cycle) {
  std::vector<bool> on_cycle(g.edge_count(), false);
  for (EdgeId e : cycle) on_cycle[static_cast<std::size_t>(e)] = true;
  std::vector<std::vector<FaceId>> adj(g.face_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (on_cycle[e]) continue;
    const FaceId a = g.face_of_dart(make_dart(static_cast<EdgeId>(e), false));
    const FaceId b = g.face_of_dart(make_dart(static_cast<EdgeId>(e), true));
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<bool> outside(g.face_count(), false);
  std::vector<FaceId> stack{g.outer_face()};
  outside[static_cast<std::size_t>(g.outer_face())] = true;
  while (!stack.empty()) {
    auto f = stack.back();
    stack.pop_back();
    for (FaceId h : adj[static_cast<std::size_t>(f)])
      if (!outside[static_cast<std::size_t>(h)]) {
        outside[static_cast<std::size_t>(h)] = true;
        stack.push_back(h);
      }
  }
  std::vector<bool> inside(g.face_count());
  for (std::size_t f = 0; f < inside.size(); ++f) inside[f] = !outside[f];
  return inside;
}

}  // namespace

std::vector<FaceId> faces_inside_cycle(const PlaneBipartiteGraph& g, std::span<const EdgeId> cycle) {
  check_cycle(g, cycle);
  const auto inside = inside_mask(g, cycle);
  std::vector<FaceId> out;
  for (std::size_t f = 0; f < inside.size(); ++f)
    if (inside[f]) out.push_back(static_cast<FaceId>(f));
  return out;
}

std::vector<DartId> clockwise_cycle(const PlaneBipartiteGraph& g, std::span<const EdgeId> cycle) {
  check_cycle(g, cycle);
  const auto inside = inside_mask(g, cycle);
  std::vector<bool> on_cycle(g.edge_count(), false);
  for (EdgeId e : cycle) on_cycle[static_cast<std::size_t>(e)] = true;

  // start at the smallest vertex, leaving along the dart with the interior on its right
  VertexId start = g.edge(cycle.front()).u;
  for (EdgeId e : cycle) start = std::min({start, g.edge(e).u, g.edge(e).v});
  DartId first = -1;
  for (EdgeId e : g.rotation(start)) {
    if (!on_cycle[static_cast<std::size_t>(e)]) continue;
    const DartId d = g.edge(e).u == start ? make_dart(e, false) : make_dart(e, true);
    if (inside[static_cast<std::size_t>(g.face_of_dart(d))]) first = d;
  }
  if (first < 0) fail(ErrorCode::NotACycle, "cycle encloses no face");
  std::vector<DartId> out{first};
  DartId d = first;
  while (true) {
    const VertexId at = g.head(d);
    DartId next = -1;
    for (EdgeId e : g.rotation(at)) {
      if (!on_cycle[static_cast<std::size_t>(e)] || e == dart_edge(d)) continue;
      next = g.edge(e).u == at ? make_dart(e, false) : make_dart(e, true);
    }
    if (next == first) break;
    out.push_back(next);
    d = next;
  }
  return out;
}

bool is_two_connected_outerplane(const PlaneBipartiteGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 3) return false;
  std::vector<bool> on_outer(n, false);
  for (DartId d : g.face(g.outer_face()).boundary) on_outer[static_cast<std::size_t>(g.tail(d))] = true;
  if (std::find(on_outer.begin(), on_outer.end(), false) != on_outer.end()) return false;
  // a 2-connected plane graph has an outer walk that is a simple cycle through every vertex
  return g.face(g.outer_face()).boundary.size() == n;
}

ECutReport find_e_cuts(const PlaneBipartiteGraph& g, std::size_t max_cycles) {
  ECutReport report;
  report.outside_guaranteed_class = !is_two_connected_outerplane(g);
  const DualDigraph dual = oriented_dual(g, true);
  const int root = dual.node_of(g.outer_face());
  std::vector<std::vector<int>> out(dual.nodes.size());
  for (std::size_t a = 0; a < dual.arcs.size(); ++a) out[static_cast<std::size_t>(dual.arcs[a].from)].push_back(static_cast<int>(a));

  std::vector<std::vector<int>> cycles;  // arc index sequences
  std::vector<int> path;
  std::vector<bool> on_path(dual.nodes.size(), false);
  on_path[static_cast<std::size_t>(root)] = true;
  auto dfs = [&](auto&& self, int node) -> void {
    for (int a : out[static_cast<std::size_t>(node)]) {
      const int to = dual.arcs[static_cast<std::size_t>(a)].to;
      if (to == root) {
        path.push_back(a);
        cycles.push_back(path);
        path.pop_back();
        if (cycles.size() > max_cycles) fail(ErrorCode::SizeCapExceeded, "too many directed dual cycles");
        continue;
      }
      if (on_path[static_cast<std::size_t>(to)]) continue;
      on_path[static_cast<std::size_t>(to)] = true;
      path.push_back(a);
      self(self, to);
      path.pop_back();
      on_path[static_cast<std::size_t>(to)] = false;
    }
  };
  dfs(dfs, root);

  for (const auto& cyc : cycles) {
    ECut cut;
    std::vector<bool> removed(g.edge_count(), false);
    cut.dual_cycle.push_back(g.outer_face());
    for (int a : cyc) {
      const auto& arc = dual.arcs[static_cast<std::size_t>(a)];
      cut.edges.push_back(arc.edge);
      removed[static_cast<std::size_t>(arc.edge)] = true;
      if (arc.to != root) cut.dual_cycle.push_back(dual.nodes[static_cast<std::size_t>(arc.to)]);
    }
    int ncomp = 0;
    const auto comp = components(g.vertex_count(), g.edges(), removed, ncomp);
    const int white_comp = comp[static_cast<std::size_t>(g.white_end(cut.edges.front()))];
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      (comp[v] == white_comp ? cut.white_bank : cut.black_bank).push_back(static_cast<VertexId>(v));
    std::sort(cut.edges.begin(), cut.edges.end());
    report.cuts.push_back(std::move(cut));
  }
  std::sort(report.cuts.begin(), report.cuts.end(), [](const ECut& a, const ECut& b) { return a.edges < b.edges; });
  return report;
}

}  // namespace mdl
