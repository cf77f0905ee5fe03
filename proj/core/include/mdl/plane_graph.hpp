#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdl/error.hpp"

namespace mdl {

using VertexId = int;
using EdgeId = int;
using FaceId = int;
// Dart 2e runs edge e from its first listed endpoint to its second; dart 2e+1 runs back.
using DartId = int;

enum class Color : std::uint8_t { White, Black };

inline Color opposite(Color c) { return c == Color::White ? Color::Black : Color::White; }

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
};

constexpr EdgeId dart_edge(DartId d) { return d >> 1; }
constexpr DartId dart_reverse(DartId d) { return d ^ 1; }
constexpr DartId make_dart(EdgeId e, bool reversed) { return 2 * e + (reversed ? 1 : 0); }

/// One face of the embedding. Faces are traced with the face on the right of
/// every dart, so an inner face comes out clockwise as drawn and the outer
/// face counterclockwise.
struct FaceWalk {
  FaceId id = 0;
  std::vector<DartId> boundary;
  bool is_outer = false;
};

/// Raw input for `load_graph`: vertices carry caller ids, edges refer to those
/// ids, and the rotation lists edge indices clockwise around each vertex.
/// Rotations may be omitted for vertices of degree at most two.
struct GraphDescription {
  struct Vertex {
    int id = 0;
    Color color = Color::White;
  };
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;
  std::map<int, std::vector<EdgeId>> rotation;
  std::optional<FaceId> outer_face;
};

/// A connected plane bipartite graph with a fixed proper two-coloring and a
/// combinatorial embedding. Immutable once built; every accessor is const.
class PlaneBipartiteGraph {
 public:
  /// Validates and traces faces. Throws `Error` with NotBipartite,
  /// ImproperColoring, Disconnected, DuplicateEdge, EulerViolation,
  /// InputRequired or InvalidInput.
  static PlaneBipartiteGraph build(std::vector<Color> colors, std::vector<Edge> edges,
                                   std::vector<std::vector<EdgeId>> rotation,
                                   std::optional<FaceId> outer_face,
                                   std::vector<int> labels = {});

  std::size_t vertex_count() const { return colors_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t face_count() const { return faces_.size(); }
  std::size_t inner_face_count() const { return faces_.size() - 1; }

  Color color(VertexId v) const { return colors_[static_cast<std::size_t>(v)]; }
  const std::vector<Color>& colors() const { return colors_; }
  int label(VertexId v) const { return labels_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& labels() const { return labels_; }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<Edge>& edges() const { return edges_; }
  VertexId white_end(EdgeId e) const;
  VertexId black_end(EdgeId e) const;
  VertexId other_end(EdgeId e, VertexId v) const;
  std::optional<EdgeId> edge_between(VertexId a, VertexId b) const;

  std::span<const EdgeId> rotation(VertexId v) const { return rotation_[static_cast<std::size_t>(v)]; }
  std::size_t degree(VertexId v) const { return rotation_[static_cast<std::size_t>(v)].size(); }

  VertexId tail(DartId d) const;
  VertexId head(DartId d) const;
  bool white_to_black(DartId d) const { return color(tail(d)) == Color::White; }

  const std::vector<FaceWalk>& faces() const { return faces_; }
  const FaceWalk& face(FaceId f) const { return faces_[static_cast<std::size_t>(f)]; }
  FaceId outer_face() const { return outer_face_; }
  /// Inner face ids in increasing order.
  std::vector<FaceId> inner_faces() const;
  FaceId face_of_dart(DartId d) const { return dart_face_[static_cast<std::size_t>(d)]; }

  std::vector<VertexId> face_vertices(FaceId f) const;
  std::vector<EdgeId> face_edges(FaceId f) const;
  /// True when the boundary walk visits no vertex twice.
  bool face_is_simple_cycle(FaceId f) const;

 private:
  std::vector<Color> colors_;
  std::vector<int> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> rotation_;
  // position of dart d's edge inside rotation(head(d))
  std::vector<std::size_t> head_slot_;
  std::vector<FaceWalk> faces_;
  std::vector<FaceId> dart_face_;
  FaceId outer_face_ = 0;
};

PlaneBipartiteGraph load_graph(const GraphDescription& description);

const std::vector<FaceWalk>& trace_faces(const PlaneBipartiteGraph& g);

/// Oriented dual. Arc f -> f' across edge e iff f's walk traverses e black to
/// white, i.e. the white end of e lies to the right when crossing from f to f'.
struct DualDigraph {
  struct Arc {
    int from = 0;  // node index
    int to = 0;
    EdgeId edge = 0;
  };
  std::vector<FaceId> nodes;
  std::vector<Arc> arcs;
  bool includes_outer = true;

  int node_of(FaceId f) const;
};

DualDigraph oriented_dual(const PlaneBipartiteGraph& g, bool include_outer);

/// Inner faces enclosed by the cycle with the given edge set. Throws NotACycle.
std::vector<FaceId> faces_inside_cycle(const PlaneBipartiteGraph& g, std::span<const EdgeId> cycle);

/// Validates that `edges` form one simple cycle and returns its darts in
/// clockwise order (interior on the right), starting at the smallest vertex.
std::vector<DartId> clockwise_cycle(const PlaneBipartiteGraph& g, std::span<const EdgeId> cycle);

/// Two-connected and every vertex on the outer face.
bool is_two_connected_outerplane(const PlaneBipartiteGraph& g);

struct ECut {
  std::vector<EdgeId> edges;
  std::vector<VertexId> white_bank;
  std::vector<VertexId> black_bank;
  std::vector<FaceId> dual_cycle;  // face sequence, starting at the outer face
};

struct ECutReport {
  std::vector<ECut> cuts;
  bool outside_guaranteed_class = false;  // input not 2-connected outerplane
};

/// Directed cycles of the oriented dual through the outer-face node, mapped
/// back to primal minimal edge cuts. `max_cycles` bounds the enumeration.
ECutReport find_e_cuts(const PlaneBipartiteGraph& g, std::size_t max_cycles = 1000000);

}  // namespace mdl
