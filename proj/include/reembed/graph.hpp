#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reembed {

using VertexId = int;
using EdgeId = int;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph with dense 0-based vertex and edge ids.
/// Edge ids are positions in `edges`; `adjacency[v]` lists (neighbor, edge id)
/// pairs in edge-id order, so every iteration over a graph is deterministic.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adjacency;

  static Graph from_edges(int vertex_count, std::vector<std::pair<VertexId, VertexId>> edges);
  // Skips the loop/parallel checks. Only for deliberately corrupted fixtures.
  static Graph from_edges_unchecked(int vertex_count, std::vector<std::pair<VertexId, VertexId>> edges);

  int edge_count() const { return static_cast<int>(edges.size()); }
  int degree(VertexId v) const { return static_cast<int>(adjacency[v].size()); }
  bool adjacent(VertexId u, VertexId v) const;
  std::optional<EdgeId> edge_between(VertexId u, VertexId v) const;
  bool is_simple() const;
  bool is_connected() const;

  bool operator==(const Graph& other) const {
    return vertex_count == other.vertex_count && edges == other.edges;
  }
};

/// A graph with a clockwise rotation of the incident edge ends at every
/// vertex: the unique spherical embedding when the input is 3-connected.
struct PlanarMap {
  Graph graph;
  std::vector<std::vector<EdgeId>> rotation;

  static PlanarMap from_rotations(Graph graph, std::vector<std::vector<EdgeId>> rotation);
  // Builds graph and rotation from per-vertex neighbor lists given in
  // clockwise order. Edge ids are assigned by first appearance, scanning
  // vertices ascending and each list left to right.
  static PlanarMap from_neighbor_lists(const std::vector<std::vector<VertexId>>& neighbors);

  std::vector<std::vector<VertexId>> neighbor_lists() const;

  bool operator==(const PlanarMap&) const = default;
};

struct ValidationReport {
  bool simple = false;
  bool cubic = false;
  bool connected = false;
  bool three_connected = false;
  bool spherical = false;
  std::optional<std::string> detail;

  bool all_ok() const { return simple && cubic && connected && three_connected && spherical; }
};

// planar_code: optional ASCII header ">>planar_code<<", then per graph one
// byte n (1..255) followed by each vertex's 1-based neighbors in rotation
// order, each list terminated by a 0 byte. Only the one-byte variant is
// supported.
std::vector<PlanarMap> parse_planar_code(std::istream& in);
std::string write_planar_code(const std::vector<PlanarMap>& maps);

// rotation text: first line "n m", then n lines "v: a b c" with v's
// neighbors clockwise, all ids 0-based.
PlanarMap parse_rotation_text(const std::string& text);

ValidationReport validate_cubic_planar(const PlanarMap& map);

bool is_bipartite(const Graph& graph);

// True iff no set of fewer than k edges separates the graph into two or more
// components that each contain a cycle. Exhaustive over edge subsets; k <= 5.
bool cyclic_edge_connectivity_at_least(const Graph& graph, int k);

}  // namespace reembed
