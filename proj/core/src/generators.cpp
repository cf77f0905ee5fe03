#include "mdl/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace mdl {

TruncatedParallelogramSpec TruncatedParallelogramSpec::parallelogram(int m, int n) {
  return {std::vector<int>(static_cast<std::size_t>(std::max(m, 0)), n)};
}

TruncatedParallelogramSpec TruncatedParallelogramSpec::prolate_triangle(int m) {
  TruncatedParallelogramSpec s;
  for (int r = m; r >= 1; --r) s.rows.push_back(r);
  return s;
}

void TruncatedParallelogramSpec::validate() const {
  if (rows.empty()) fail(ErrorCode::InvalidRowLengths, "no rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] <= 0) fail(ErrorCode::InvalidRowLengths, "row " + std::to_string(i + 1) + " is not positive");
    if (i > 0 && rows[i] > rows[i - 1])
      fail(ErrorCode::InvalidRowLengths, "row " + std::to_string(i + 1) + " is longer than the row below");
  }
}

int TruncatedParallelogramSpec::hexagon_count() const { return std::accumulate(rows.begin(), rows.end(), 0); }

std::string TruncatedParallelogramSpec::name() const {
  std::string s = "L(";
  for (std::size_t i = 0; i < rows.size(); ++i) s += (i ? "," : "") + std::to_string(rows[i]);
  return s + ")";
}

int HexSystem::hexagon_of_face(FaceId f) const {
  for (std::size_t i = 0; i < hexagons.size(); ++i)
    if (hexagons[i].face == f) return static_cast<int>(i);
  return -1;
}

namespace {

using Point = std::pair<int, int>;  // doubled coordinates (x, y)

// top, UR, LR, bottom, LL, UL around a centre
std::array<Point, 6> corners(int row, int col) {
  const int x = 2 * col - row;
  const int y = 3 * row;
  return {{{x, y + 2}, {x + 1, y + 1}, {x + 1, y - 1}, {x, y - 2}, {x - 1, y - 1}, {x - 1, y + 1}}};
}

// Builds twice when needed: face ids do not depend on the outer choice.
PlaneBipartiteGraph build_with_outer_dart(std::vector<Color> colors, std::vector<Edge> edges,
                                          std::vector<std::vector<EdgeId>> rotation, DartId outer_dart) {
  auto g = PlaneBipartiteGraph::build(colors, edges, rotation, 0);
  const FaceId outer = g.face_of_dart(outer_dart);
  if (outer == 0) return g;
  return PlaneBipartiteGraph::build(std::move(colors), std::move(edges), std::move(rotation), outer);
}

DartId dart_from(const PlaneBipartiteGraph& g, VertexId a, VertexId b) {
  const auto e = g.edge_between(a, b);
  if (!e) fail(ErrorCode::InvalidInput, "no edge between " + std::to_string(a) + " and " + std::to_string(b));
  return make_dart(*e, g.edge(*e).u != a);
}

}  // namespace

HexSystem truncated_parallelogram(const TruncatedParallelogramSpec& spec) {
  spec.validate();
  std::map<Point, VertexId> id;
  for (std::size_t i = 0; i < spec.rows.size(); ++i)
    for (int j = 0; j < spec.rows[i]; ++j)
      for (const auto& p : corners(static_cast<int>(i), j)) id.emplace(p, 0);
  {
    // ids in order of (y, x)
    std::vector<Point> pts;
    for (const auto& [p, v] : id) pts.push_back(p);
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
      return std::pair(a.second, a.first) < std::pair(b.second, b.first);
    });
    for (std::size_t k = 0; k < pts.size(); ++k) id[pts[k]] = static_cast<VertexId>(k);
  }
  std::vector<Point> where(id.size());
  for (const auto& [p, v] : id) where[static_cast<std::size_t>(v)] = p;

  std::set<std::pair<VertexId, VertexId>> edge_set;
  for (std::size_t i = 0; i < spec.rows.size(); ++i)
    for (int j = 0; j < spec.rows[i]; ++j) {
      const auto c = corners(static_cast<int>(i), j);
      for (std::size_t k = 0; k < 6; ++k) {
        const VertexId a = id.at(c[k]);
        const VertexId b = id.at(c[(k + 1) % 6]);
        edge_set.emplace(std::min(a, b), std::max(a, b));
      }
    }
  std::vector<Edge> edges;
  for (auto [a, b] : edge_set) edges.push_back({a, b});

  std::vector<Color> colors(id.size());
  for (std::size_t v = 0; v < colors.size(); ++v)
    colors[v] = ((where[v].second % 3) + 3) % 3 == 1 ? Color::White : Color::Black;

  std::vector<std::vector<EdgeId>> rotation(id.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    rotation[static_cast<std::size_t>(edges[e].u)].push_back(static_cast<EdgeId>(e));
    rotation[static_cast<std::size_t>(edges[e].v)].push_back(static_cast<EdgeId>(e));
  }
  for (std::size_t v = 0; v < rotation.size(); ++v) {
    auto angle = [&](EdgeId e) {
      const auto& ed = edges[static_cast<std::size_t>(e)];
      const auto& q = where[static_cast<std::size_t>(ed.u == static_cast<VertexId>(v) ? ed.v : ed.u)];
      return std::atan2(q.second - where[v].second, q.first - where[v].first);
    };
    // clockwise = decreasing angle
    std::sort(rotation[v].begin(), rotation[v].end(), [&](EdgeId a, EdgeId b) { return angle(a) > angle(b); });
  }

  const auto c00 = corners(0, 0);
  const VertexId ll00 = id.at(c00[4]);
  const VertexId bottom00 = id.at(c00[3]);
  EdgeId outer_edge = 0;
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (std::pair(edges[e].u, edges[e].v) == std::pair(std::min(ll00, bottom00), std::max(ll00, bottom00)))
      outer_edge = static_cast<EdgeId>(e);
  // moving from LL to bottom of the first hexagon the exterior is on the right
  const DartId outer_dart = make_dart(outer_edge, edges[static_cast<std::size_t>(outer_edge)].u != ll00);

  HexSystem h{spec, build_with_outer_dart(colors, edges, rotation, outer_dart), {}, {}, {}, {}, 0};
  const auto& g = h.graph;
  for (std::size_t i = 0; i < spec.rows.size(); ++i)
    for (int j = 0; j < spec.rows[i]; ++j) {
      Hexagon hex;
      hex.row = static_cast<int>(i);
      hex.col = j;
      const auto c = corners(hex.row, j);
      for (std::size_t k = 0; k < 6; ++k) hex.vertices[k] = id.at(c[k]);
      hex.face = g.face_of_dart(dart_from(g, hex.vertices[0], hex.vertices[1]));
      h.hexagons.push_back(hex);
    }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& p = where[static_cast<std::size_t>(g.edge(static_cast<EdgeId>(e)).u)];
    const auto& q = where[static_cast<std::size_t>(g.edge(static_cast<EdgeId>(e)).v)];
    const int dx = q.first - p.first;
    const int dy = q.second - p.second;
    h.slant.push_back(dx == 0 ? Slant::Vertical : (dx * dy > 0 ? Slant::Rising : Slant::Falling));
  }
  auto edge_of = [&](const Point& a, const Point& b) { return *g.edge_between(id.at(a), id.at(b)); };
  const int m = static_cast<int>(spec.rows.size());
  for (int i = 0; i < m; ++i) {
    const auto c = corners(i, 0);
    h.left_perimeter.push_back(edge_of(c[4], c[5]));
    if (i + 1 < m) h.left_perimeter.push_back(edge_of(c[5], corners(i + 1, 0)[4]));
  }
  h.bottom_perimeter.push_back(edge_of(c00[4], c00[3]));
  for (int j = 0; j < spec.rows[0]; ++j) {
    const auto c = corners(0, j);
    h.bottom_perimeter.push_back(edge_of(c[3], c[2]));
    if (j + 1 < spec.rows[0]) h.bottom_perimeter.push_back(edge_of(c[2], corners(0, j + 1)[3]));
  }
  std::sort(h.left_perimeter.begin(), h.left_perimeter.end());
  std::sort(h.bottom_perimeter.begin(), h.bottom_perimeter.end());
  h.forcing_edge = edge_of(c00[4], c00[5]);
  return h;
}

FinitePoset hexagon_poset(const TruncatedParallelogramSpec& spec) {
  spec.validate();
  std::vector<std::string> labels;
  std::map<std::pair<int, int>, int> index;
  for (std::size_t i = 0; i < spec.rows.size(); ++i)
    for (int j = 0; j < spec.rows[i]; ++j) {
      index[{static_cast<int>(i), j}] = static_cast<int>(labels.size());
      labels.push_back("h" + std::to_string(i + 1) + "," + std::to_string(j + 1));
    }
  std::vector<std::pair<int, int>> covers;
  for (const auto& [ij, k] : index) {
    if (auto up = index.find({ij.first + 1, ij.second}); up != index.end()) covers.emplace_back(k, up->second);
    if (auto right = index.find({ij.first, ij.second + 1}); right != index.end()) covers.emplace_back(k, right->second);
  }
  return FinitePoset(std::move(labels), std::move(covers));
}

SubparallelogramView matching_geometry(const HexSystem& h, const Matching& m, const Matching& root) {
  const auto& g = h.graph;
  require_perfect_matching(g, m);
  require_perfect_matching(g, root);
  SubparallelogramView view;
  std::set_symmetric_difference(m.edges.begin(), m.edges.end(), root.edges.begin(), root.edges.end(),
                                std::back_inserter(view.cycle));
  if (!view.cycle.empty())
    for (FaceId f : faces_inside_cycle(g, view.cycle)) view.hexagons.push_back(h.hexagon_of_face(f));
  std::sort(view.hexagons.begin(), view.hexagons.end());

  std::vector<EdgeId> lb;
  std::set_union(h.left_perimeter.begin(), h.left_perimeter.end(), h.bottom_perimeter.begin(),
                 h.bottom_perimeter.end(), std::back_inserter(lb));
  std::set_symmetric_difference(lb.begin(), lb.end(), view.cycle.begin(), view.cycle.end(),
                                std::back_inserter(view.path));

  view.uniform_slant = true;
  for (EdgeId e : m.edges)
    if (!std::binary_search(view.path.begin(), view.path.end(), e) &&
        h.slant[static_cast<std::size_t>(e)] != Slant::Falling)
      view.uniform_slant = false;

  view.alternating_hexagons_consistent = true;
  for (const auto& fc : classify_alternating_faces(g, m)) {
    const int hex = h.hexagon_of_face(fc.face);
    const auto& walk = g.face(fc.face).boundary;
    std::vector<bool> on_path;
    for (DartId d : walk) on_path.push_back(std::binary_search(view.path.begin(), view.path.end(), dart_edge(d)));
    const auto shared = std::count(on_path.begin(), on_path.end(), true);
    bool consecutive = false;
    for (std::size_t s = 0; s < walk.size() && shared == 3; ++s)
      consecutive = consecutive || (on_path[s] && on_path[(s + 1) % walk.size()] && on_path[(s + 2) % walk.size()]);
    const bool inside = std::binary_search(view.hexagons.begin(), view.hexagons.end(), hex);
    if (!consecutive || (fc.orientation == Orientation::Proper) != inside) view.alternating_hexagons_consistent = false;
  }
  return view;
}

ParallelogramCertificate verify_iso_parallelogram(const HexSystem& h, const Caps& caps) {
  ParallelogramCertificate cert;
  cert.mp = matching_poset(h.graph, caps);
  cert.faces = hexagon_poset(h.spec);
  cert.ideals = order_ideal_lattice(cert.faces, caps.max_lattice_elements);
  const auto ext = extremal_matchings(h.graph, cert.mp);
  const auto& ms = cert.mp.z.matchings;
  const auto& root = ms[static_cast<std::size_t>(ext.root)];
  const std::size_t n = ms.size();
  if (n != cert.ideals.ideals.size())
    fail(ErrorCode::IsoFailure, std::to_string(n) + " matchings but " + std::to_string(cert.ideals.ideals.size()) +
                                    " order ideals of the hexagon poset");

  std::vector<std::vector<int>> hm(n);
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const auto view = matching_geometry(h, ms[i], root);
    const std::string who = cert.mp.poset.label(static_cast<int>(i));
    if (!view.uniform_slant) fail(ErrorCode::IsoFailure, who + ": matching edges off P_M are not uniformly slanted");
    if (!view.alternating_hexagons_consistent)
      fail(ErrorCode::IsoFailure, who + ": an alternating hexagon does not meet P_M as expected");
    if (!view.cycle.empty() && !std::binary_search(view.cycle.begin(), view.cycle.end(), h.forcing_edge))
      fail(ErrorCode::IsoFailure, who + ": C_M misses the forcing edge");
    Bitset ideal(h.hexagons.size());
    for (int k : view.hexagons) ideal.set(static_cast<std::size_t>(k));
    const int k = cert.ideals.index_of(ideal);
    if (k < 0) fail(ErrorCode::IsoFailure, who + ": H_M is not a down-set of the hexagon poset");
    if (used[static_cast<std::size_t>(k)]) fail(ErrorCode::IsoFailure, who + ": H_M repeats");
    used[static_cast<std::size_t>(k)] = true;
    cert.map.push_back(k);
    hm[i] = view.hexagons;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (cert.mp.poset.leq(static_cast<int>(a), static_cast<int>(b)) !=
          cert.ideals.lattice.leq(cert.map[a], cert.map[b]))
        fail(ErrorCode::IsoFailure, "M -> H_M breaks order on (" + cert.mp.poset.label(static_cast<int>(a)) + ", " +
                                        cert.mp.poset.label(static_cast<int>(b)) + ")");

  const auto lattice = matching_lattice(cert.mp);
  const auto irr = join_irreducibles(lattice);
  for (int x : irr.elements) {
    std::vector<int> proper;
    for (const auto& fc : classify_alternating_faces(h.graph, ms[static_cast<std::size_t>(x)]))
      if (fc.orientation == Orientation::Proper) proper.push_back(h.hexagon_of_face(fc.face));
    const auto& inside = hm[static_cast<std::size_t>(x)];
    std::vector<int> tops;
    for (int k : inside) {
      bool maximal = true;
      for (int other : inside) maximal = maximal && !cert.faces.less(k, other);
      if (maximal) tops.push_back(k);
    }
    if (proper.size() != 1 || tops.size() != 1 || proper.front() != tops.front())
      fail(ErrorCode::IsoFailure, cert.mp.poset.label(x) + ": psi is not the right-up-most hexagon of H_M");
    cert.psi.emplace_back(x, tops.front());
  }
  if (cert.psi.size() != h.hexagons.size())
    fail(ErrorCode::IsoFailure, "psi is not onto the hexagons");
  for (auto [x, hx] : cert.psi)
    for (auto [y, hy] : cert.psi)
      if (lattice.leq(x, y) != cert.faces.leq(hx, hy))
        fail(ErrorCode::IsoFailure, "psi breaks order on (" + lattice.label(x) + ", " + lattice.label(y) + ")");

  cert.generic_iso = static_cast<bool>(lattice_isomorphic(lattice, cert.ideals.lattice, caps.max_lattice_elements));
  if (!cert.generic_iso) fail(ErrorCode::IsoFailure, "generic isomorphism test disagrees");
  return cert;
}

void OrientedTree::validate() const {
  if (nodes < 1) fail(ErrorCode::NotATree, "a tree needs at least one node");
  if (arcs.size() != static_cast<std::size_t>(nodes - 1))
    fail(ErrorCode::NotATree, std::to_string(arcs.size()) + " arcs on " + std::to_string(nodes) + " nodes");
  std::vector<int> parent(static_cast<std::size_t>(nodes));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (auto [a, b] : arcs) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes) fail(ErrorCode::NotATree, "arc endpoint out of range");
    const int ra = find(a), rb = find(b);
    if (ra == rb) fail(ErrorCode::NotATree, "arcs contain a cycle");
    parent[static_cast<std::size_t>(ra)] = rb;
  }
}

int OrientedTree::in_degree(int v) const {
  return static_cast<int>(std::count_if(arcs.begin(), arcs.end(), [v](const auto& a) { return a.second == v; }));
}

int OrientedTree::out_degree(int v) const {
  return static_cast<int>(std::count_if(arcs.begin(), arcs.end(), [v](const auto& a) { return a.first == v; }));
}

int OrientedTree::max_degree() const {
  int d = 0;
  for (int v = 0; v < nodes; ++v) d = std::max(d, in_degree(v) + out_degree(v));
  return d;
}

PlaneBipartiteGraph embed_from_inner_faces(const std::vector<Color>& colors,
                                           const std::vector<std::vector<VertexId>>& faces) {
  const std::size_t n = colors.size();
  std::map<std::pair<VertexId, VertexId>, int> uses;
  for (const auto& f : faces)
    for (std::size_t k = 0; k < f.size(); ++k) {
      const VertexId a = f[k], b = f[(k + 1) % f.size()];
      if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
        fail(ErrorCode::InvalidInput, "face vertex out of range");
      ++uses[{std::min(a, b), std::max(a, b)}];
    }
  std::vector<Edge> edges;
  std::map<std::pair<VertexId, VertexId>, EdgeId> edge_id;
  for (const auto& [p, count] : uses) {
    if (count > 2) fail(ErrorCode::EmbeddingConflict, "edge on more than two faces");
    edge_id[p] = static_cast<EdgeId>(edges.size());
    edges.push_back({p.first, p.second});
  }
  auto eid = [&](VertexId a, VertexId b) { return edge_id.at({std::min(a, b), std::max(a, b)}); };

  // around y, the face x -> y -> z puts edge yx right after edge yz clockwise
  std::vector<std::map<EdgeId, EdgeId>> succ(n);
  for (const auto& f : faces)
    for (std::size_t k = 0; k < f.size(); ++k) {
      const VertexId x = f[k], y = f[(k + 1) % f.size()], z = f[(k + 2) % f.size()];
      if (!succ[static_cast<std::size_t>(y)].emplace(eid(y, z), eid(y, x)).second)
        fail(ErrorCode::EmbeddingConflict, "two faces claim the same corner at vertex " + std::to_string(y));
    }
  std::vector<std::vector<EdgeId>> rotation(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::set<EdgeId> incident;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (edges[e].u == static_cast<VertexId>(v) || edges[e].v == static_cast<VertexId>(v))
        incident.insert(static_cast<EdgeId>(e));
    if (incident.empty()) fail(ErrorCode::EmbeddingConflict, "vertex " + std::to_string(v) + " lies on no face");
    const auto& s = succ[v];
    std::set<EdgeId> targets;
    for (auto [a, b] : s) targets.insert(b);
    EdgeId start = *incident.begin();
    for (EdgeId e : incident)
      if (!targets.count(e)) {
        start = e;
        break;
      }
    auto& rot = rotation[v];
    for (EdgeId e = start;;) {
      rot.push_back(e);
      auto it = s.find(e);
      if (it == s.end() || it->second == start) break;
      e = it->second;
      if (rot.size() > incident.size()) break;
    }
    if (rot.size() != incident.size())
      fail(ErrorCode::EmbeddingConflict, "faces around vertex " + std::to_string(v) + " do not form a fan");
  }
  // a boundary edge seen from outside
  DartId outer_dart = -1;
  for (const auto& f : faces) {
    for (std::size_t k = 0; k < f.size() && outer_dart < 0; ++k) {
      const VertexId a = f[k], b = f[(k + 1) % f.size()];
      if (uses.at({std::min(a, b), std::max(a, b)}) == 1) {
        const EdgeId e = eid(a, b);
        outer_dart = make_dart(e, edges[static_cast<std::size_t>(e)].u != b);
      }
    }
    if (outer_dart >= 0) break;
  }
  if (outer_dart < 0) fail(ErrorCode::EmbeddingConflict, "faces leave no exterior");
  return build_with_outer_dart(colors, std::move(edges), std::move(rotation), outer_dart);
}

TreeRealization realize_tree(const OrientedTree& t, bool optimize) {
  t.validate();
  const auto n = static_cast<std::size_t>(t.nodes);
  std::vector<std::vector<std::pair<int, bool>>> adj(n);  // (neighbour, arc leaves this node)
  for (auto [a, b] : t.arcs) {
    adj[static_cast<std::size_t>(a)].emplace_back(b, true);
    adj[static_cast<std::size_t>(b)].emplace_back(a, false);
  }
  for (auto& l : adj) std::sort(l.begin(), l.end());
  const int delta = t.max_degree();
  auto half_length = [&](int v) {
    return optimize ? std::max({t.in_degree(v), t.out_degree(v), 2}) : std::max(delta, 2);
  };

  std::vector<Color> colors;
  auto fresh = [&](Color c) {
    colors.push_back(c);
    return static_cast<VertexId>(colors.size() - 1);
  };
  std::vector<std::vector<VertexId>> walk(n);
  std::vector<std::vector<bool>> taken(n);
  {
    const int k = half_length(0);
    for (int p = 0; p < 2 * k; ++p) walk[0].push_back(fresh(p % 2 == 0 ? Color::White : Color::Black));
    taken[0].assign(walk[0].size(), false);
  }
  std::vector<int> parent(n, -1);
  std::vector<int> queue{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int v = queue[qi];
    auto& w = walk[static_cast<std::size_t>(v)];
    for (auto [c, outgoing] : adj[static_cast<std::size_t>(v)]) {
      if (seen[static_cast<std::size_t>(c)]) continue;
      seen[static_cast<std::size_t>(c)] = true;
      // an arc v -> c crosses an edge that f_v runs black -> white
      const Color want_tail = outgoing ? Color::Black : Color::White;
      std::size_t p = 0;
      while (p < w.size() && (taken[static_cast<std::size_t>(v)][p] || colors[static_cast<std::size_t>(w[p])] != want_tail)) ++p;
      if (p == w.size()) fail(ErrorCode::InvalidInput, "face of node " + std::to_string(v) + " has no free side");
      taken[static_cast<std::size_t>(v)][p] = true;
      const VertexId a = w[p], b = w[(p + 1) % w.size()];
      auto& cw = walk[static_cast<std::size_t>(c)];
      cw = {b, a};
      const int k = half_length(c);
      for (int q = 2; q < 2 * k; ++q) cw.push_back(fresh(opposite(colors[static_cast<std::size_t>(cw.back())])));
      taken[static_cast<std::size_t>(c)].assign(cw.size(), false);
      taken[static_cast<std::size_t>(c)][0] = true;
      parent[static_cast<std::size_t>(c)] = v;
      queue.push_back(c);
    }
  }

  TreeRealization r{embed_from_inner_faces(colors, walk), {}};
  for (const auto& w : walk) r.face_of_node.push_back(r.graph.face_of_dart(dart_from(r.graph, w[0], w[1])));
  const auto dual = oriented_dual(r.graph, false);
  std::map<FaceId, int> node_of;
  for (std::size_t v = 0; v < n; ++v) node_of[r.face_of_node[v]] = static_cast<int>(v);
  std::vector<std::pair<int, int>> got, want(t.arcs.begin(), t.arcs.end());
  for (const auto& a : dual.arcs)
    got.emplace_back(node_of.at(dual.nodes[static_cast<std::size_t>(a.from)]),
                     node_of.at(dual.nodes[static_cast<std::size_t>(a.to)]));
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got != want) fail(ErrorCode::IsoFailure, "inner dual does not reproduce the tree orientation");
  return r;
}

PlaneBipartiteGraph tree_to_outerplane(const OrientedTree& t, bool optimize) { return realize_tree(t, optimize).graph; }

PlaneBipartiteGraph link_components(const std::vector<PlaneBipartiteGraph>& graphs) {
  if (graphs.empty()) fail(ErrorCode::InvalidInput, "nothing to link");
  PlaneBipartiteGraph acc = graphs.front();
  for (std::size_t gi = 1; gi < graphs.size(); ++gi) {
    const auto& a = acc;
    const auto& b = graphs[gi];
    auto outer_vertices = [](const PlaneBipartiteGraph& g) {
      std::set<VertexId> s;
      for (DartId d : g.face(g.outer_face()).boundary) s.insert(g.tail(d));
      return s;
    };
    const auto oa = outer_vertices(a), ob = outer_vertices(b);
    std::optional<std::pair<VertexId, VertexId>> pick;
    for (VertexId u : oa) {
      for (VertexId v : ob)
        if (a.color(u) != b.color(v)) {
          pick = std::pair(u, v);
          break;
        }
      if (pick) break;
    }
    if (!pick) fail(ErrorCode::ColorClash, "no opposite-coloured pair on the outer boundaries");
    const auto [u, v] = *pick;
    const auto na = static_cast<VertexId>(a.vertex_count());
    const auto ea = static_cast<EdgeId>(a.edge_count());

    std::vector<Color> colors = a.colors();
    colors.insert(colors.end(), b.colors().begin(), b.colors().end());
    std::vector<Edge> edges = a.edges();
    for (const auto& e : b.edges()) edges.push_back({e.u + na, e.v + na});
    const EdgeId link = static_cast<EdgeId>(edges.size());
    edges.push_back({u, v + na});
    std::vector<std::vector<EdgeId>> rotation;
    for (std::size_t x = 0; x < a.vertex_count(); ++x) {
      auto r = a.rotation(static_cast<VertexId>(x));
      rotation.emplace_back(r.begin(), r.end());
    }
    for (std::size_t x = 0; x < b.vertex_count(); ++x) {
      std::vector<EdgeId> r;
      for (EdgeId e : b.rotation(static_cast<VertexId>(x))) r.push_back(e + ea);
      rotation.push_back(std::move(r));
    }
    // put the new edge into the outer corner at w: right after the edge the outer walk leaves along
    auto insert_at_corner = [&](const PlaneBipartiteGraph& g, VertexId w, VertexId offset, EdgeId eoff) {
      const auto& walk = g.face(g.outer_face()).boundary;
      for (std::size_t i = 0; i < walk.size(); ++i) {
        if (g.head(walk[i]) != w) continue;
        const EdgeId leave = dart_edge(walk[(i + 1) % walk.size()]) + eoff;
        auto& rot = rotation[static_cast<std::size_t>(w + offset)];
        auto it = std::find(rot.begin(), rot.end(), leave);
        rot.insert(it + 1, link);
        return;
      }
      fail(ErrorCode::EmbeddingConflict, "vertex not on the outer walk");
    };
    insert_at_corner(a, u, 0, 0);
    insert_at_corner(b, v, na, ea);
    acc = build_with_outer_dart(std::move(colors), std::move(edges), std::move(rotation), make_dart(link, false));
  }
  return acc;
}

PlaneBipartiteGraph even_cycle(int n) {
  if (n < 4 || n % 2 != 0) fail(ErrorCode::InvalidSpec, "cycle length must be even and at least 4");
  std::vector<Color> colors;
  std::vector<VertexId> face;
  for (int i = 0; i < n; ++i) {
    colors.push_back(i % 2 == 0 ? Color::White : Color::Black);
    face.push_back(i);
  }
  return embed_from_inner_faces(colors, {face});
}

std::vector<TruncatedParallelogramSpec> row_profiles(int max_hexagons) {
  std::vector<TruncatedParallelogramSpec> out;
  std::vector<int> rows;
  auto extend = [&](auto&& self, int left, int cap) -> void {
    if (left == 0) {
      out.push_back({rows});
      return;
    }
    for (int r = std::min(left, cap); r >= 1; --r) {
      rows.push_back(r);
      self(self, left - r, r);
      rows.pop_back();
    }
  };
  for (int k = 1; k <= max_hexagons; ++k) extend(extend, k, k);
  return out;
}

namespace {

std::string ahu(const std::vector<std::vector<int>>& adj, int v, int from) {
  std::vector<std::string> kids;
  for (int w : adj[static_cast<std::size_t>(v)])
    if (w != from) kids.push_back(ahu(adj, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

}  // namespace

std::vector<OrientedTree> tree_shapes(int nodes) {
  if (nodes < 1) fail(ErrorCode::NotATree, "a tree needs at least one node");
  if (nodes <= 2) {
    OrientedTree t;
    t.nodes = nodes;
    if (nodes == 2) t.arcs = {{0, 1}};
    return {t};
  }
  const auto n = static_cast<std::size_t>(nodes);
  std::set<std::string> seen;
  std::vector<OrientedTree> out;
  std::vector<int> prufer(n - 2, 0);
  for (;;) {
    // decode
    std::vector<int> degree(n, 1);
    for (int x : prufer) ++degree[static_cast<std::size_t>(x)];
    OrientedTree t;
    t.nodes = nodes;
    for (int x : prufer)
      for (std::size_t leaf = 0; leaf < n; ++leaf)
        if (degree[leaf] == 1) {
          t.arcs.emplace_back(std::min<int>(static_cast<int>(leaf), x), std::max<int>(static_cast<int>(leaf), x));
          --degree[leaf];
          --degree[static_cast<std::size_t>(x)];
          break;
        }
    std::vector<int> last;
    for (std::size_t v = 0; v < n; ++v)
      if (degree[v] == 1) last.push_back(static_cast<int>(v));
    t.arcs.emplace_back(last[0], last[1]);
    std::sort(t.arcs.begin(), t.arcs.end());
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : t.arcs) {
      adj[static_cast<std::size_t>(a)].push_back(b);
      adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::string canon;
    for (int r = 0; r < nodes; ++r) {
      auto s = ahu(adj, r, -1);
      if (canon.empty() || s < canon) canon = s;
    }
    if (seen.insert(canon).second) out.push_back(std::move(t));
    // next sequence
    std::size_t i = 0;
    while (i < prufer.size() && ++prufer[i] == nodes) prufer[i++] = 0;
    if (i == prufer.size()) break;
  }
  return out;
}

OrientedTree orient(const OrientedTree& shape, std::uint64_t mask) {
  OrientedTree t = shape;
  for (std::size_t i = 0; i < t.arcs.size(); ++i)
    if (mask >> i & 1) std::swap(t.arcs[i].first, t.arcs[i].second);
  return t;
}

}  // namespace mdl
