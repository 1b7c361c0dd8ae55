#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "reembed/graph.hpp"

namespace reembed {

struct DualMap;

/// Edge ids whose signature is -1. Operations accept any order and ignore
/// duplicates; every set produced by the library is sorted.
using TwistSet = std::vector<EdgeId>;

struct EmbeddingScheme {
  PlanarMap map;
  std::vector<signed char> signature;  // per edge id, +1 or -1
};

/// Closed surface identified by Euler characteristic and orientability.
struct Surface {
  int euler_characteristic = 2;
  bool orientable = true;

  auto operator<=>(const Surface&) const = default;

  std::string name() const;  // sphere, projective, torus, klein, S<g>, N<h>

  static Surface sphere() { return {2, true}; }
  static Surface projective_plane() { return {1, false}; }
  static Surface torus() { return {0, true}; }
  static Surface klein_bottle() { return {0, false}; }
};

struct Arc {
  EdgeId edge;
  VertexId from;
  VertexId to;
  bool operator==(const Arc&) const = default;
};

/// Closed facial walk; consecutive arcs share a vertex.
struct FaceWalk {
  std::vector<Arc> arcs;
  int size() const { return static_cast<int>(arcs.size()); }
};

EmbeddingScheme scheme_from_twists(const PlanarMap& map, const TwistSet& twists);
std::vector<FaceWalk> trace_faces(const EmbeddingScheme& scheme);
int euler_characteristic(const EmbeddingScheme& scheme);

// Orientability by dual degree parity: the embedding for twist set X is
// orientable iff every vertex of H_X has even degree.
bool is_orientable(const DualMap& dual, const TwistSet& twists);

// Euler characteristic from the tracer, orientability from the dual parity
// test; the two are asserted consistent (orientable implies even chi).
Surface classify_surface(const PlanarMap& map, const DualMap& dual, const TwistSet& twists);
Surface classify_surface(const PlanarMap& map, const TwistSet& twists);

/// Face-tracing state machine over the 2|E| edge sides. Each edge side is a
/// mirror pair of (directed edge, handedness) states; walks are seeded from
/// the first unvisited state in id order and every side is visited exactly
/// once. The rotation successor tables are built once so sweeps over many
/// twist sets can reuse them.
class FaceTracer {
 public:
  explicit FaceTracer(const PlanarMap& map);

  int face_count(const std::vector<signed char>& signature) const;
  // Allocation-free variant for exhaustive sweeps; requires |E| <= 31.
  int face_count(std::uint32_t twist_mask, std::vector<std::uint64_t>& visited_scratch) const;

  struct Traced {
    std::vector<FaceWalk> walks;
    // Per edge id, the walk index incident with side 0 / side 1.
    std::vector<std::array<int, 2>> face_of_side;
  };
  Traced trace(const std::vector<signed char>& signature) const;

  int edge_count() const { return edge_count_; }

 private:
  template <typename Twisted, typename Visit>
  int run(const Twisted& twisted, Visit&& visit) const;

  int vertex_count_ = 0;
  int edge_count_ = 0;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<int> succ_pos_;  // per arc: next arc when arriving right-handed
  std::vector<int> succ_neg_;  // per arc: next arc when arriving left-handed
};

}  // namespace reembed
