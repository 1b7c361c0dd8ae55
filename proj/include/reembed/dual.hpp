#pragma once

#include <vector>

#include "reembed/graph.hpp"
#include "reembed/surface.hpp"

namespace reembed {

/// Dual of the spherical embedding. Dual vertices are numbered in
/// first-traced-face order and dual edge ids coincide with primal edge ids,
/// so the primal/dual edge bijection is the identity.
struct DualMap {
  PlanarMap primal;
  Graph dual_graph;
  std::vector<FaceWalk> face_of;  // dual vertex id -> spherical facial walk

  int face_count() const { return dual_graph.vertex_count; }
};

/// Edge-induced subgraph of the dual: vertex set = endpoints of the edges.
struct EdgeSubgraph {
  std::vector<EdgeId> edges;       // sorted dual edge ids
  std::vector<VertexId> vertices;  // sorted
  std::vector<int> degrees;        // within the subgraph, aligned with vertices

  int degree_of(VertexId v) const;
  bool empty() const { return edges.empty(); }
};

DualMap build_dual(const PlanarMap& map);

// H_X: the subgraph of the dual induced by the edges dual to X.
EdgeSubgraph h_subgraph(const DualMap& dual, const TwistSet& twists);

// Every dual face has length 3, the dual is simple, and any two faces share
// at most one edge.
bool is_triangulation(const DualMap& dual);

}  // namespace reembed
