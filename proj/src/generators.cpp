#include "reembed/generators.hpp"

#include <stdexcept>

namespace reembed {

namespace {

PlanarMap checked(const std::vector<std::vector<VertexId>>& neighbors) {
  PlanarMap map = PlanarMap::from_neighbor_lists(neighbors);
  const ValidationReport r = validate_cubic_planar(map);
  if (!r.all_ok()) {
    throw std::logic_error("generator produced an invalid map: " + r.detail.value_or("unknown"));
  }
  return map;
}

}  // namespace

PlanarMap tetrahedron() {
  return checked({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
}

PlanarMap cube() {
  return checked({{4, 1, 2},
                  {3, 0, 5},
                  {6, 0, 3},
                  {2, 1, 7},
                  {5, 0, 6},
                  {7, 1, 4},
                  {4, 2, 7},
                  {6, 3, 5}});
}

PlanarMap dodecahedron() {
  return checked({{12, 8, 16},  {17, 9, 12}, {16, 10, 13}, {13, 11, 17}, {18, 8, 14},
                  {14, 9, 19},  {15, 10, 18}, {19, 11, 15}, {10, 0, 4},  {5, 1, 11},
                  {6, 2, 8},    {9, 3, 7},   {14, 0, 1},   {3, 2, 15},  {5, 4, 12},
                  {13, 6, 7},   {17, 0, 2},  {3, 1, 16},   {6, 4, 19},  {18, 5, 7}});
}

PlanarMap prism(int m) {
  if (m < 3) throw std::invalid_argument("prism requires m >= 3");
  std::vector<std::vector<VertexId>> neighbors(2 * m);
  for (int i = 0; i < m; ++i) {
    const int next = (i + 1) % m;
    const int prev = (i + m - 1) % m;
    neighbors[i] = {next, prev, m + i};
    neighbors[m + i] = {m + prev, m + next, i};
  }
  return checked(neighbors);
}

PlanarMap truncate_vertex(const PlanarMap& map, VertexId v) {
  const int n = map.graph.vertex_count;
  if (v < 0 || v >= n) throw std::invalid_argument("truncate_vertex: vertex out of range");
  if (map.graph.degree(v) != 3) {
    throw std::invalid_argument("truncate_vertex: vertex is not cubic");
  }
  std::vector<std::vector<VertexId>> neighbors = map.neighbor_lists();
  const VertexId a = neighbors[v][0];
  const VertexId b = neighbors[v][1];
  const VertexId c = neighbors[v][2];
  // v becomes the first corner; the corners keep their spokes and form a
  // clockwise triangular face matching v's old rotation.
  const VertexId vb = n;
  const VertexId vc = n + 1;
  for (VertexId& w : neighbors[b]) {
    if (w == v) w = vb;
  }
  for (VertexId& w : neighbors[c]) {
    if (w == v) w = vc;
  }
  neighbors[v] = {a, vb, vc};
  neighbors.push_back({b, vc, v});
  neighbors.push_back({c, v, vb});
  return PlanarMap::from_neighbor_lists(neighbors);
}

PlanarMap random_truncation_sequence(std::uint64_t seed, int steps) {
  if (steps < 0) throw std::invalid_argument("random_truncation_sequence: negative steps");
  PlanarMap map = tetrahedron();
  std::uint64_t state = seed;
  for (int i = 0; i < steps; ++i) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    const VertexId v = static_cast<VertexId>((state >> 33) %
                                             static_cast<std::uint64_t>(map.graph.vertex_count));
    map = truncate_vertex(map, v);
  }
  return map;
}

}  // namespace reembed
