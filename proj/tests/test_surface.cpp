#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "reembed/dual.hpp"
#include "reembed/generators.hpp"
#include "reembed/patterns.hpp"

using namespace reembed;

namespace {

// Scheme orientability from first principles: the signature must be a vertex
// signing, i.e. every cycle carries an even number of twists. Independent of
// both the tracer and the dual parity path.
bool orientable_by_cycle_parity(const PlanarMap& map, const TwistSet& twists) {
  const Graph& g = map.graph;
  std::vector<signed char> lambda(g.edge_count(), 1);
  for (EdgeId e : twists) lambda[e] = -1;
  std::vector<int> sign(g.vertex_count, 0);
  sign[0] = 1;
  std::vector<VertexId> stack = {0};
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (const auto& [w, e] : g.adjacency[u]) {
      if (sign[w] == 0) {
        sign[w] = sign[u] * lambda[e];
        stack.push_back(w);
      }
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edges[e];
    if (sign[u] * sign[v] != lambda[e]) return false;
  }
  return true;
}

TwistSet random_twists(const Graph& g, std::mt19937_64& rng) {
  TwistSet x;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (rng() & 1) x.push_back(e);
  }
  return x;
}

}  // namespace

TEST_CASE("scheme_from_twists sets the signature") {
  const PlanarMap k4 = tetrahedron();
  const auto empty = scheme_from_twists(k4, {});
  CHECK(std::count(empty.signature.begin(), empty.signature.end(), -1) == 0);
  const auto one = scheme_from_twists(k4, {0});
  CHECK(std::count(one.signature.begin(), one.signature.end(), -1) == 1);
  CHECK(one.signature[0] == -1);
  TwistSet all;
  for (EdgeId e = 0; e < 6; ++e) all.push_back(e);
  const auto full = scheme_from_twists(k4, all);
  CHECK(std::count(full.signature.begin(), full.signature.end(), -1) == 6);
  CHECK_THROWS_AS(scheme_from_twists(k4, {17}), std::invalid_argument);
}

TEST_CASE("face counts on the tetrahedron") {
  const PlanarMap k4 = tetrahedron();
  const DualMap dual = build_dual(k4);

  CHECK(trace_faces(scheme_from_twists(k4, {})).size() == 4);
  CHECK(trace_faces(scheme_from_twists(k4, {0})).size() == 3);

  // two primal edges on a common face: their duals share a dual vertex
  TwistSet pair;
  for (EdgeId e = 1; e < 6; ++e) {
    const auto [a, b] = dual.dual_graph.edges[0];
    const auto [c, d] = dual.dual_graph.edges[e];
    if (a == c || a == d || b == c || b == d) {
      pair = {0, e};
      break;
    }
  }
  REQUIRE(pair.size() == 2);
  CHECK(trace_faces(scheme_from_twists(k4, pair)).size() == 2);
  CHECK(euler_characteristic(scheme_from_twists(k4, pair)) == 0);
  CHECK(classify_surface(k4, dual, pair) == Surface::klein_bottle());
}

TEST_CASE("euler characteristic examples") {
  const PlanarMap k4 = tetrahedron();
  CHECK(euler_characteristic(scheme_from_twists(k4, {})) == 2);
  CHECK(euler_characteristic(scheme_from_twists(k4, {2})) == 1);

  const PlanarMap box = cube();
  const DualMap dual = build_dual(box);
  const auto triangles = find_fixed_pattern(dual, PatternShape::Triangle);
  REQUIRE_FALSE(triangles.empty());
  CHECK(euler_characteristic(scheme_from_twists(box, triangles[0].twists)) == 0);
  CHECK(classify_surface(box, dual, triangles[0].twists) == Surface::torus());
}

TEST_CASE("orientability from dual degree parity") {
  const PlanarMap k4 = tetrahedron();
  const DualMap dual = build_dual(k4);
  CHECK(is_orientable(dual, {}));
  CHECK_FALSE(is_orientable(dual, {0}));
  const auto triangles = find_fixed_pattern(dual, PatternShape::Triangle);
  REQUIRE_FALSE(triangles.empty());
  CHECK(is_orientable(dual, triangles[0].twists));
}

TEST_CASE("classify_surface examples") {
  const PlanarMap k4 = tetrahedron();
  CHECK(classify_surface(k4, {}) == Surface::sphere());
  CHECK(classify_surface(k4, {4}) == Surface::projective_plane());

  const PlanarMap box = cube();
  const DualMap dual = build_dual(box);
  const auto cycles = find_fixed_pattern(dual, PatternShape::C4);
  REQUIRE_FALSE(cycles.empty());
  CHECK(classify_surface(box, dual, cycles[0].twists) == Surface::torus());
}

TEST_CASE("surface names") {
  CHECK(Surface::sphere().name() == "sphere");
  CHECK(Surface::projective_plane().name() == "projective");
  CHECK(Surface::torus().name() == "torus");
  CHECK(Surface::klein_bottle().name() == "klein");
  CHECK(Surface{-2, true}.name() == "S2");
  CHECK(Surface{-1, false}.name() == "N3");
}

TEST_CASE("all-positive tracing reproduces the spherical faces") {
  for (const PlanarMap& map : {tetrahedron(), cube(), prism(5)}) {
    const auto walks = trace_faces(scheme_from_twists(map, {}));
    const int n = map.graph.vertex_count;
    const int e = map.graph.edge_count();
    CHECK(static_cast<int>(walks.size()) == e - n + 2);
    int arcs = 0;
    for (const FaceWalk& w : walks) {
      arcs += w.size();
      for (int i = 0; i < w.size(); ++i) {
        CHECK(w.arcs[i].to == w.arcs[(i + 1) % w.size()].from);  // closed walk
      }
    }
    CHECK(arcs == 2 * e);
  }
}

TEST_CASE("random twist sets: parity, chi bound, flip invariance") {
  std::mt19937_64 rng(20240817);
  for (const PlanarMap& map : {cube(), prism(5)}) {
    const DualMap dual = build_dual(map);
    for (int trial = 0; trial < 300; ++trial) {
      const TwistSet x = random_twists(map.graph, rng);
      const auto scheme = scheme_from_twists(map, x);
      const int chi = euler_characteristic(scheme);
      const bool orientable = is_orientable(dual, x);

      CHECK(chi <= 2);
      CHECK((chi == 2) == x.empty());
      if (orientable) CHECK(chi % 2 == 0);
      CHECK(orientable == orientable_by_cycle_parity(map, x));

      // flip one vertex: reverse its rotation, toggle its incident edges
      const VertexId v = static_cast<VertexId>(rng() % map.graph.vertex_count);
      PlanarMap flipped = map;
      std::reverse(flipped.rotation[v].begin(), flipped.rotation[v].end());
      TwistSet fx = x;
      for (EdgeId e : map.rotation[v]) {
        auto it = std::find(fx.begin(), fx.end(), e);
        if (it == fx.end()) {
          fx.push_back(e);
        } else {
          fx.erase(it);
        }
      }
      const auto flipped_scheme = scheme_from_twists(flipped, fx);
      CHECK(trace_faces(flipped_scheme).size() == trace_faces(scheme).size());
      CHECK(euler_characteristic(flipped_scheme) == chi);
      CHECK(orientable_by_cycle_parity(flipped, fx) == orientable);
    }
  }
}
