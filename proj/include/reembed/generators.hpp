#pragma once

#include <cstdint>

#include "reembed/graph.hpp"

namespace reembed {

// Hard-coded rotation tables, verified by the spherical face-count check.
PlanarMap tetrahedron();
PlanarMap cube();
PlanarMap dodecahedron();
PlanarMap prism(int m);  // m >= 3; n = 2m

// Replaces vertex v by a triangle: v's rotation neighbors a, b, c each keep
// their spoke, the three new vertices form a triangular face. The first new
// vertex reuses v's id, the other two are appended.
PlanarMap truncate_vertex(const PlanarMap& map, VertexId v);

// Applies `steps` truncations starting from K4, choosing vertices with the
// 64-bit LCG  state' = state * 6364136223846793005 + 1442695040888963407,
// pick = (state' >> 33) mod n. Reproducible across platforms.
PlanarMap random_truncation_sequence(std::uint64_t seed, int steps);

}  // namespace reembed
