#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "reembed/dual.hpp"

namespace reembed {

// H_X isomorphism types that characterize the three target surfaces.
// Projective plane: K2, K4. Torus: Triangle (K_{1,1,1}), C4 (K_{2,2}),
// Octahedron (K_{2,2,2}), K2M with even m, K11M with odd m. Klein bottle:
// K2M with odd m, K11M with even m, and the six sporadic graphs A1..A6:
//   A1 = two disjoint edges            A2 = K2 + K4 (disjoint)
//   A3 = K4 + K4 (disjoint)            A4 = cone over K1 + K3
//   A5 = cone over K3 + K3             A6 = two nonadjacent cone vertices
//                                           over K2 + K2
enum class PatternShape { K2, K4, Triangle, C4, Octahedron, K2M, K11M, A1, A2, A3, A4, A5, A6 };

enum class TargetSurface { Projective, Torus, Klein };

struct PatternKind {
  PatternShape shape;
  int m = 0;  // part size for K2M (m >= 1, m != 2) and K11M (m >= 2)

  bool operator==(const PatternKind&) const = default;
};

std::string pattern_name(const PatternKind& kind);
Surface pattern_surface(const PatternKind& kind);
Surface target_surface(TargetSurface target);
bool is_fixed_shape(PatternShape shape);

struct PatternMatch {
  PatternKind kind;
  EdgeSubgraph dual_edges;
  TwistSet twists;  // primal preimage; ids equal the dual edge ids
  Surface surface;
  std::optional<std::pair<VertexId, VertexId>> apexes;
  std::optional<int> m;
};

// Ascending list of dual vertices adjacent to both u and v.
std::vector<VertexId> common_neighbors(const DualMap& dual, VertexId u, VertexId v);

// All dual edge sets whose edge-induced subgraph is isomorphic to the fixed
// pattern, deduplicated by sorted edge id list and emitted in lexicographic
// order of that list. Rejects K2M/K11M.
std::vector<PatternMatch> find_fixed_pattern(const DualMap& dual, PatternShape shape);

long long count_k4_subgraphs(const DualMap& dual);

/// Emits the K_{2,|S|} / K_{1,1,|S|} matches with apex pair (u, v) landing on
/// the requested surface, one nonempty subset S of common_neighbors(u, v) at
/// a time in ascending subset-mask order. The ambiguous-apex shapes K_{1,1,1}
/// and K_{2,2} are never emitted here. Delay per emission is O(|S|).
class ApexFamilyEnumerator {
 public:
  ApexFamilyEnumerator(const DualMap& dual, VertexId u, VertexId v, TargetSurface target);

  std::optional<PatternMatch> next();

 private:
  const DualMap* dual_;
  VertexId u_, v_;
  TargetSurface target_;
  std::vector<VertexId> commons_;
  std::vector<EdgeId> edges_u_, edges_v_;  // edge ids u-commons_[i], v-commons_[i]
  std::optional<EdgeId> uv_edge_;
  std::uint64_t subset_ = 1;
};

/// All matches for one surface: the surface's fixed patterns first (in the
/// shape order listed above), then for the torus and the Klein bottle the
/// apex families over all dual vertex pairs in ascending order. Emitted dual
/// edge sets are pairwise distinct.
class SurfaceEnumerator {
 public:
  SurfaceEnumerator(const DualMap& dual, TargetSurface target);

  std::optional<PatternMatch> next();

 private:
  bool advance_pair();

  const DualMap* dual_;
  TargetSurface target_;
  std::vector<PatternShape> fixed_shapes_;
  std::size_t shape_index_ = 0;
  std::vector<PatternMatch> fixed_buffer_;
  std::size_t buffer_index_ = 0;
  bool fixed_done_ = false;
  VertexId pair_u_ = 0, pair_v_ = 0;
  std::optional<ApexFamilyEnumerator> apex_;
};

std::vector<PatternMatch> enumerate_surface(const DualMap& dual, TargetSurface target);

}  // namespace reembed
