#include "reembed/surface.hpp"

#include <algorithm>

#include "reembed/dual.hpp"

namespace reembed {

std::string Surface::name() const {
  if (orientable && euler_characteristic % 2 != 0) {
    throw std::logic_error("orientable surface with odd Euler characteristic");
  }
  if (euler_characteristic == 2 && orientable) return "sphere";
  if (euler_characteristic == 1 && !orientable) return "projective";
  if (euler_characteristic == 0) return orientable ? "torus" : "klein";
  return orientable ? "S" + std::to_string((2 - euler_characteristic) / 2)
                    : "N" + std::to_string(2 - euler_characteristic);
}

namespace {

std::vector<signed char> normalized_signature(const PlanarMap& map, const TwistSet& twists) {
  std::vector<signed char> sig(map.graph.edge_count(), 1);
  for (EdgeId e : twists) {
    if (e < 0 || e >= map.graph.edge_count()) {
      throw std::invalid_argument("twist set contains unknown edge id " + std::to_string(e));
    }
    sig[e] = -1;
  }
  return sig;
}

}  // namespace

EmbeddingScheme scheme_from_twists(const PlanarMap& map, const TwistSet& twists) {
  // signature first: it validates the edge ids and may throw
  std::vector<signed char> signature = normalized_signature(map, twists);
  return EmbeddingScheme{map, std::move(signature)};
}

FaceTracer::FaceTracer(const PlanarMap& map)
    : vertex_count_(map.graph.vertex_count),
      edge_count_(map.graph.edge_count()),
      edges_(map.graph.edges) {
  // Arc a = 2e + d traverses edge e from edges[e].first (d = 0) or toward it
  // (d = 1). succ_pos/succ_neg give the next arc around the head vertex for
  // right/left-handed arrival.
  const int arcs = 2 * edge_count_;
  succ_pos_.assign(arcs, -1);
  succ_neg_.assign(arcs, -1);
  for (VertexId v = 0; v < vertex_count_; ++v) {
    const auto& rot = map.rotation[v];
    const int deg = static_cast<int>(rot.size());
    for (int i = 0; i < deg; ++i) {
      const EdgeId e = rot[i];
      const int arc_in = 2 * e + (edges_[e].second == v ? 0 : 1);  // arc ending at v
      const EdgeId e_pos = rot[(i + 1) % deg];
      const EdgeId e_neg = rot[(i + deg - 1) % deg];
      succ_pos_[arc_in] = 2 * e_pos + (edges_[e_pos].first == v ? 0 : 1);  // arc leaving v
      succ_neg_[arc_in] = 2 * e_neg + (edges_[e_neg].first == v ? 0 : 1);
    }
  }
}

// Walks the 4|E| (arc, handedness) states. Mirror states describe the same
// edge side, so each is marked together with its partner; a face is one
// state cycle and every edge side is consumed exactly once.
template <typename Twisted, typename Visit>
int FaceTracer::run(const Twisted& twisted, Visit&& visit) const {
  const int states = 4 * edge_count_;
  auto mirror = [&](int s) {
    const EdgeId e = s >> 2;
    const int arc = s >> 1;
    const int sbit = s & 1;
    return ((arc ^ 1) << 1) | (sbit ^ 1 ^ twisted(e));
  };
  auto step = [&](int s) {
    const EdgeId e = s >> 2;
    const int arc = s >> 1;
    const int t = (s & 1) ^ twisted(e);  // handedness on arrival
    return ((t == 0 ? succ_pos_[arc] : succ_neg_[arc]) << 1) | t;
  };
  std::vector<char> visited(states, 0);
  int faces = 0;
  int sides = 0;
  for (int seed = 0; seed < states; ++seed) {
    if (visited[seed]) continue;
    ++faces;
    int cur = seed;
    do {
      if (visited[cur]) throw std::logic_error("face walk crossed its mirror image");
      visited[cur] = 1;
      visited[mirror(cur)] = 1;
      ++sides;
      visit(faces - 1, cur);
      cur = step(cur);
    } while (cur != seed);
  }
  if (sides != 2 * edge_count_) throw std::logic_error("face tracing did not cover every edge side");
  return faces;
}

int FaceTracer::face_count(const std::vector<signed char>& signature) const {
  return run([&](EdgeId e) { return signature[e] < 0 ? 1 : 0; }, [](int, int) {});
}

int FaceTracer::face_count(std::uint32_t twist_mask,
                           std::vector<std::uint64_t>& visited_scratch) const {
  if (edge_count_ > 31) throw std::invalid_argument("mask face_count supports at most 31 edges");
  const int states = 4 * edge_count_;
  const std::size_t words = (states + 63) / 64;
  visited_scratch.assign(words, 0);
  auto test = [&](int s) { return (visited_scratch[s >> 6] >> (s & 63)) & 1; };
  auto set = [&](int s) { visited_scratch[s >> 6] |= std::uint64_t{1} << (s & 63); };
  int faces = 0;
  int sides = 0;
  for (int seed = 0; seed < states; ++seed) {
    if (test(seed)) continue;
    ++faces;
    int cur = seed;
    do {
      if (test(cur)) throw std::logic_error("face walk crossed its mirror image");
      const EdgeId e = cur >> 2;
      const int arc = cur >> 1;
      const int tw = (twist_mask >> e) & 1;
      set(cur);
      set(((arc ^ 1) << 1) | ((cur & 1) ^ 1 ^ tw));
      ++sides;
      const int t = (cur & 1) ^ tw;
      cur = ((t == 0 ? succ_pos_[arc] : succ_neg_[arc]) << 1) | t;
    } while (cur != seed);
  }
  if (sides != 2 * edge_count_) throw std::logic_error("face tracing did not cover every edge side");
  return faces;
}

FaceTracer::Traced FaceTracer::trace(const std::vector<signed char>& signature) const {
  Traced out;
  out.face_of_side.assign(edge_count_, {-1, -1});
  auto twisted = [&](EdgeId e) { return signature[e] < 0 ? 1 : 0; };
  run(twisted, [&](int face, int state) {
    const EdgeId e = state >> 2;
    const int dir = (state >> 1) & 1;
    const int sbit = state & 1;
    if (face == static_cast<int>(out.walks.size())) out.walks.emplace_back();
    const auto [a, b] = edges_[e];
    out.walks[face].arcs.push_back(dir == 0 ? Arc{e, a, b} : Arc{e, b, a});
    const int side = twisted(e) ? sbit : (dir ^ sbit);
    if (out.face_of_side[e][side] != -1) throw std::logic_error("edge side traced twice");
    out.face_of_side[e][side] = face;
  });
  return out;
}

std::vector<FaceWalk> trace_faces(const EmbeddingScheme& scheme) {
  FaceTracer tracer(scheme.map);
  return tracer.trace(scheme.signature).walks;
}

int euler_characteristic(const EmbeddingScheme& scheme) {
  FaceTracer tracer(scheme.map);
  return scheme.map.graph.vertex_count - scheme.map.graph.edge_count() +
         tracer.face_count(scheme.signature);
}

bool is_orientable(const DualMap& dual, const TwistSet& twists) {
  std::vector<char> odd(dual.face_count(), 0);
  for (EdgeId e : twists) {
    if (e < 0 || e >= dual.dual_graph.edge_count()) {
      throw std::invalid_argument("twist set contains unknown edge id " + std::to_string(e));
    }
    const auto [f, g] = dual.dual_graph.edges[e];
    odd[f] ^= 1;
    odd[g] ^= 1;
  }
  return std::none_of(odd.begin(), odd.end(), [](char c) { return c != 0; });
}

Surface classify_surface(const PlanarMap& map, const DualMap& dual, const TwistSet& twists) {
  const int chi = euler_characteristic(scheme_from_twists(map, twists));
  const bool orientable = is_orientable(dual, twists);
  if (orientable && chi % 2 != 0) {
    throw std::logic_error("tracer and dual parity disagree: orientable with odd chi");
  }
  return Surface{chi, orientable};
}

Surface classify_surface(const PlanarMap& map, const TwistSet& twists) {
  return classify_surface(map, build_dual(map), twists);
}

}  // namespace reembed
