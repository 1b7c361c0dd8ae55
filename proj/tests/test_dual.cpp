#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "reembed/dual.hpp"
#include "reembed/generators.hpp"
#include "reembed/oracle.hpp"

using namespace reembed;

TEST_CASE("dual of the tetrahedron is K4") {
  const DualMap dual = build_dual(tetrahedron());
  CHECK(dual.face_count() == 4);
  CHECK(dual.dual_graph.edge_count() == 6);
  CHECK(graphs_isomorphic(dual.dual_graph, pattern_graph({PatternShape::K4, 0})));
  CHECK(is_triangulation(dual));
}

TEST_CASE("dual of the cube is the octahedron") {
  const DualMap dual = build_dual(cube());
  CHECK(dual.face_count() == 6);
  CHECK(dual.dual_graph.edge_count() == 12);
  CHECK(graphs_isomorphic(dual.dual_graph, pattern_graph({PatternShape::Octahedron, 0})));
  CHECK(is_triangulation(dual));
}

TEST_CASE("dual of the triangular prism is the 3-bipyramid") {
  const DualMap dual = build_dual(prism(3));
  CHECK(dual.face_count() == 5);
  CHECK(dual.dual_graph.edge_count() == 9);
  // two nonadjacent apexes of degree 3 joined to a rim triangle of degree 4
  std::vector<VertexId> apexes, rim;
  for (VertexId v = 0; v < 5; ++v) {
    (dual.dual_graph.degree(v) == 3 ? apexes : rim).push_back(v);
  }
  REQUIRE(apexes.size() == 2);
  REQUIRE(rim.size() == 3);
  CHECK_FALSE(dual.dual_graph.adjacent(apexes[0], apexes[1]));
  for (std::size_t i = 0; i < rim.size(); ++i) {
    CHECK(dual.dual_graph.adjacent(rim[i], rim[(i + 1) % 3]));
  }
  CHECK(is_triangulation(dual));
}

TEST_CASE("dual size identities") {
  for (const PlanarMap& map : {tetrahedron(), cube(), dodecahedron(), prism(7)}) {
    const DualMap dual = build_dual(map);
    const int n = map.graph.vertex_count;
    const int e = map.graph.edge_count();
    CHECK(dual.dual_graph.edge_count() == e);
    CHECK(dual.face_count() == e - n + 2);
    // the dual's own face count, by Euler, equals the primal vertex count
    CHECK(dual.dual_graph.edge_count() - dual.face_count() + 2 == n);
  }
}

TEST_CASE("h_subgraph") {
  const DualMap dual = build_dual(tetrahedron());

  SUBCASE("empty set") {
    const EdgeSubgraph h = h_subgraph(dual, {});
    CHECK(h.empty());
    CHECK(h.vertices.empty());
  }
  SUBCASE("single edge gives K2") {
    const EdgeSubgraph h = h_subgraph(dual, {3});
    CHECK(h.edges == TwistSet{3});
    CHECK(h.vertices.size() == 2);
    CHECK(h.degrees == std::vector<int>{1, 1});
  }
  SUBCASE("three edges around a primal vertex give a dual triangle") {
    const TwistSet around(dual.primal.rotation[0].begin(), dual.primal.rotation[0].end());
    const EdgeSubgraph h = h_subgraph(dual, around);
    CHECK(h.vertices.size() == 3);
    CHECK(h.degrees == std::vector<int>{2, 2, 2});
    CHECK(graphs_isomorphic(pattern_graph({PatternShape::Triangle, 0}),
                            Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}})));
  }
  SUBCASE("three edges bounding a face give a star, not a triangle") {
    TwistSet boundary;
    for (const Arc& a : dual.face_of[0].arcs) boundary.push_back(a.edge);
    const EdgeSubgraph h = h_subgraph(dual, boundary);
    REQUIRE(h.vertices.size() == 4);
    std::vector<int> degs = h.degrees;
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{1, 1, 1, 3});
  }
  SUBCASE("unknown edge id") {
    CHECK_THROWS_AS(h_subgraph(dual, {42}), std::invalid_argument);
  }
}

TEST_CASE("is_triangulation rejects a corrupted dual") {
  DualMap corrupted = build_dual(tetrahedron());
  auto edges = corrupted.dual_graph.edges;
  edges[5] = edges[4];  // doubled edge
  corrupted.dual_graph = Graph::from_edges_unchecked(corrupted.face_count(), edges);
  CHECK_FALSE(is_triangulation(corrupted));
}

TEST_CASE("build_dual rejects non-spherical input") {
  auto lists = tetrahedron().neighbor_lists();
  std::reverse(lists[1].begin(), lists[1].end());
  CHECK_THROWS_AS(build_dual(PlanarMap::from_neighbor_lists(lists)), std::invalid_argument);
}

TEST_CASE("duals of primal cuts are even subgraphs") {
  std::mt19937_64 rng(7);
  for (const PlanarMap& map : {cube(), prism(5), dodecahedron()}) {
    const DualMap dual = build_dual(map);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<char> side(map.graph.vertex_count, 0);
      for (auto& s : side) s = static_cast<char>(rng() & 1);
      TwistSet cut;
      for (EdgeId e = 0; e < map.graph.edge_count(); ++e) {
        const auto [u, v] = map.graph.edges[e];
        if (side[u] != side[v]) cut.push_back(e);
      }
      const EdgeSubgraph h = h_subgraph(dual, cut);
      for (int d : h.degrees) CHECK(d % 2 == 0);
    }
  }
}
