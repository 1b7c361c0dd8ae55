#include "reembed/dual.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace reembed {

int EdgeSubgraph::degree_of(VertexId v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) return 0;
  return degrees[it - vertices.begin()];
}

DualMap build_dual(const PlanarMap& map) {
  const Graph& g = map.graph;
  FaceTracer tracer(map);
  std::vector<signed char> positive(g.edge_count(), 1);
  FaceTracer::Traced traced = tracer.trace(positive);
  const int faces = static_cast<int>(traced.walks.size());
  if (g.vertex_count - g.edge_count() + faces != 2) {
    throw std::invalid_argument("build_dual: map is not spherical");
  }
  std::vector<std::pair<VertexId, VertexId>> dual_edges(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [f0, f1] = traced.face_of_side[e];
    if (f0 == f1) throw std::invalid_argument("build_dual: edge bounds a single face");
    dual_edges[e] = std::minmax(f0, f1);
  }
  DualMap dual;
  dual.primal = map;
  try {
    dual.dual_graph = Graph::from_edges(faces, std::move(dual_edges));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("build_dual: dual is not simple (input not 3-connected?)");
  }
  dual.face_of = std::move(traced.walks);
  if (!is_triangulation(dual)) {
    throw std::invalid_argument("build_dual: dual is not a triangulation (input not cubic?)");
  }
  return dual;
}

EdgeSubgraph h_subgraph(const DualMap& dual, const TwistSet& twists) {
  EdgeSubgraph h;
  h.edges = twists;
  std::sort(h.edges.begin(), h.edges.end());
  h.edges.erase(std::unique(h.edges.begin(), h.edges.end()), h.edges.end());
  std::map<VertexId, int> degree;
  for (EdgeId e : h.edges) {
    if (e < 0 || e >= dual.dual_graph.edge_count()) {
      throw std::invalid_argument("h_subgraph: unknown edge id " + std::to_string(e));
    }
    const auto [u, v] = dual.dual_graph.edges[e];
    ++degree[u];
    ++degree[v];
  }
  for (const auto& [v, d] : degree) {
    h.vertices.push_back(v);
    h.degrees.push_back(d);
  }
  return h;
}

bool is_triangulation(const DualMap& dual) {
  const Graph& d = dual.dual_graph;
  if (!d.is_simple()) return false;  // covers "two faces share at most one edge"
  // Dual faces correspond to primal vertices: each must be a triangle made of
  // the duals of the vertex's three incident edges.
  const Graph& primal = dual.primal.graph;
  for (VertexId v = 0; v < primal.vertex_count; ++v) {
    if (primal.degree(v) != 3) return false;
    std::array<EdgeId, 3> around;
    for (int i = 0; i < 3; ++i) around[i] = dual.primal.rotation[v][i];
    std::array<VertexId, 6> ends;
    for (int i = 0; i < 3; ++i) {
      ends[2 * i] = d.edges[around[i]].first;
      ends[2 * i + 1] = d.edges[around[i]].second;
    }
    std::sort(ends.begin(), ends.end());
    // three distinct corners, each met by exactly two of the edges
    if (ends[0] != ends[1] || ends[2] != ends[3] || ends[4] != ends[5]) return false;
    if (ends[0] == ends[2] || ends[2] == ends[4]) return false;
  }
  return true;
}

}  // namespace reembed
