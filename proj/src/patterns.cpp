#include "reembed/patterns.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace reembed {

std::string pattern_name(const PatternKind& kind) {
  switch (kind.shape) {
    case PatternShape::K2: return "K2";
    case PatternShape::K4: return "K4";
    case PatternShape::Triangle: return "TRIANGLE";
    case PatternShape::C4: return "C4";
    case PatternShape::Octahedron: return "OCTA";
    case PatternShape::K2M: return "K2M";
    case PatternShape::K11M: return "K11M";
    case PatternShape::A1: return "A1";
    case PatternShape::A2: return "A2";
    case PatternShape::A3: return "A3";
    case PatternShape::A4: return "A4";
    case PatternShape::A5: return "A5";
    case PatternShape::A6: return "A6";
  }
  throw std::invalid_argument("unknown pattern shape");
}

Surface pattern_surface(const PatternKind& kind) {
  switch (kind.shape) {
    case PatternShape::K2:
    case PatternShape::K4:
      return Surface::projective_plane();
    case PatternShape::Triangle:
    case PatternShape::C4:
    case PatternShape::Octahedron:
      return Surface::torus();
    case PatternShape::K2M:
      if (kind.m < 1 || kind.m == 2) throw std::invalid_argument("K2M requires m >= 1, m != 2");
      return kind.m % 2 == 0 ? Surface::torus() : Surface::klein_bottle();
    case PatternShape::K11M:
      if (kind.m < 2) throw std::invalid_argument("K11M requires m >= 2");
      return kind.m % 2 == 1 ? Surface::torus() : Surface::klein_bottle();
    default:
      return Surface::klein_bottle();  // A1..A6
  }
}

Surface target_surface(TargetSurface target) {
  switch (target) {
    case TargetSurface::Projective: return Surface::projective_plane();
    case TargetSurface::Torus: return Surface::torus();
    case TargetSurface::Klein: return Surface::klein_bottle();
  }
  throw std::invalid_argument("unknown target surface");
}

bool is_fixed_shape(PatternShape shape) {
  return shape != PatternShape::K2M && shape != PatternShape::K11M;
}

std::vector<VertexId> common_neighbors(const DualMap& dual, VertexId u, VertexId v) {
  if (u == v) throw std::invalid_argument("common_neighbors: vertices must differ");
  const Graph& g = dual.dual_graph;
  std::vector<VertexId> out;
  for (const auto& [w, e] : g.adjacency[u]) {
    if (w != v && g.adjacent(w, v)) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct DualIndex {
  explicit DualIndex(const Graph& g)
      : n(g.vertex_count), edge_id(n * n, -1), adj(n * n, 0) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto [u, v] = g.edges[e];
      edge_id[u * n + v] = edge_id[v * n + u] = e;
      adj[u * n + v] = adj[v * n + u] = 1;
    }
  }
  bool adjacent(VertexId u, VertexId v) const { return adj[u * n + v] != 0; }
  EdgeId edge(VertexId u, VertexId v) const { return edge_id[u * n + v]; }
  bool all_adjacent(VertexId w, std::initializer_list<VertexId> vs) const {
    for (VertexId v : vs) {
      if (!adjacent(w, v)) return false;
    }
    return true;
  }
  int n;
  std::vector<EdgeId> edge_id;
  std::vector<char> adj;
};

std::vector<std::array<VertexId, 3>> all_triangles(const DualIndex& ix) {
  std::vector<std::array<VertexId, 3>> out;
  for (VertexId u = 0; u < ix.n; ++u) {
    for (VertexId v = u + 1; v < ix.n; ++v) {
      if (!ix.adjacent(u, v)) continue;
      for (VertexId w = v + 1; w < ix.n; ++w) {
        if (ix.adjacent(u, w) && ix.adjacent(v, w)) out.push_back({u, v, w});
      }
    }
  }
  return out;
}

std::vector<std::array<VertexId, 4>> all_k4(const DualIndex& ix) {
  std::vector<std::array<VertexId, 4>> out;
  for (const auto& [u, v, w] : all_triangles(ix)) {
    for (VertexId x = w + 1; x < ix.n; ++x) {
      if (ix.all_adjacent(x, {u, v, w})) out.push_back({u, v, w, x});
    }
  }
  return out;
}

std::vector<EdgeId> clique_edges(const DualIndex& ix, std::initializer_list<VertexId> vs) {
  std::vector<EdgeId> out;
  for (auto a = vs.begin(); a != vs.end(); ++a) {
    for (auto b = std::next(a); b != vs.end(); ++b) out.push_back(ix.edge(*a, *b));
  }
  return out;
}

PatternMatch make_match(const DualMap& dual, PatternKind kind, std::vector<EdgeId> edges,
                        std::optional<std::pair<VertexId, VertexId>> apexes = std::nullopt,
                        std::optional<int> m = std::nullopt) {
  std::sort(edges.begin(), edges.end());
  PatternMatch match;
  match.kind = kind;
  match.dual_edges = h_subgraph(dual, edges);
  match.twists = std::move(edges);
  match.surface = pattern_surface(kind);
  match.apexes = apexes;
  match.m = m;
  return match;
}

using EdgeSet = std::vector<EdgeId>;

std::set<EdgeSet> fixed_pattern_edge_sets(const DualMap& dual, PatternShape shape) {
  const Graph& g = dual.dual_graph;
  const DualIndex ix(g);
  std::set<EdgeSet> found;
  auto add = [&](EdgeSet es) {
    std::sort(es.begin(), es.end());
    found.insert(std::move(es));
  };

  switch (shape) {
    case PatternShape::K2:
      for (EdgeId e = 0; e < g.edge_count(); ++e) add({e});
      break;

    case PatternShape::K4:
      for (const auto& [u, v, w, x] : all_k4(ix)) add(clique_edges(ix, {u, v, w, x}));
      break;

    case PatternShape::Triangle:
      for (const auto& [u, v, w] : all_triangles(ix)) add(clique_edges(ix, {u, v, w}));
      break;

    case PatternShape::C4:
      // diagonal pair {u, v} plus two common neighbors; each cycle found twice
      for (VertexId u = 0; u < ix.n; ++u) {
        for (VertexId v = u + 1; v < ix.n; ++v) {
          const auto commons = common_neighbors(dual, u, v);
          for (std::size_t i = 0; i < commons.size(); ++i) {
            for (std::size_t j = i + 1; j < commons.size(); ++j) {
              const VertexId a = commons[i], b = commons[j];
              add({ix.edge(u, a), ix.edge(a, v), ix.edge(v, b), ix.edge(b, u)});
            }
          }
        }
      }
      break;

    case PatternShape::Octahedron:
      // part {u, v}, second part from their common neighbors, third part from
      // vertices adjacent to all four; every octahedron found six times
      for (VertexId u = 0; u < ix.n; ++u) {
        for (VertexId v = u + 1; v < ix.n; ++v) {
          const auto commons = common_neighbors(dual, u, v);
          for (std::size_t i = 0; i < commons.size(); ++i) {
            for (std::size_t j = i + 1; j < commons.size(); ++j) {
              const VertexId a = commons[i], b = commons[j];
              std::vector<VertexId> third;
              for (VertexId w = 0; w < ix.n; ++w) {
                if (w != u && w != v && w != a && w != b && ix.all_adjacent(w, {u, v, a, b})) {
                  third.push_back(w);
                }
              }
              for (std::size_t p = 0; p < third.size(); ++p) {
                for (std::size_t q = p + 1; q < third.size(); ++q) {
                  const VertexId x = third[p], y = third[q];
                  EdgeSet es;
                  for (VertexId s : {u, v}) {
                    for (VertexId t : {a, b, x, y}) es.push_back(ix.edge(s, t));
                  }
                  for (VertexId s : {a, b}) {
                    for (VertexId t : {x, y}) es.push_back(ix.edge(s, t));
                  }
                  add(std::move(es));
                }
              }
            }
          }
        }
      }
      break;

    case PatternShape::A1:
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        for (EdgeId f = e + 1; f < g.edge_count(); ++f) {
          const auto [a, b] = g.edges[e];
          const auto [c, d] = g.edges[f];
          if (a != c && a != d && b != c && b != d) add({e, f});
        }
      }
      break;

    case PatternShape::A2:
      for (const auto& k4 : all_k4(ix)) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
          const auto [a, b] = g.edges[e];
          if (std::find(k4.begin(), k4.end(), a) == k4.end() &&
              std::find(k4.begin(), k4.end(), b) == k4.end()) {
            EdgeSet es = clique_edges(ix, {k4[0], k4[1], k4[2], k4[3]});
            es.push_back(e);
            add(std::move(es));
          }
        }
      }
      break;

    case PatternShape::A3: {
      const auto k4s = all_k4(ix);
      for (std::size_t i = 0; i < k4s.size(); ++i) {
        for (std::size_t j = i + 1; j < k4s.size(); ++j) {
          bool disjoint = true;
          for (VertexId x : k4s[i]) {
            if (std::find(k4s[j].begin(), k4s[j].end(), x) != k4s[j].end()) disjoint = false;
          }
          if (!disjoint) continue;
          EdgeSet es = clique_edges(ix, {k4s[i][0], k4s[i][1], k4s[i][2], k4s[i][3]});
          for (EdgeId e : clique_edges(ix, {k4s[j][0], k4s[j][1], k4s[j][2], k4s[j][3]})) {
            es.push_back(e);
          }
          add(std::move(es));
        }
      }
      break;
    }

    case PatternShape::A4:
      // triangle abc, cone vertex w over {a, b, c, d}, d outside the triangle
      for (const auto& [a, b, c] : all_triangles(ix)) {
        for (VertexId w = 0; w < ix.n; ++w) {
          if (w == a || w == b || w == c || !ix.all_adjacent(w, {a, b, c})) continue;
          for (const auto& [d, e] : g.adjacency[w]) {
            if (d == a || d == b || d == c) continue;
            add({ix.edge(a, b), ix.edge(b, c), ix.edge(a, c), ix.edge(w, a), ix.edge(w, b),
                 ix.edge(w, c), e});
          }
        }
      }
      break;

    case PatternShape::A5: {
      const auto tris = all_triangles(ix);
      for (std::size_t i = 0; i < tris.size(); ++i) {
        for (std::size_t j = i + 1; j < tris.size(); ++j) {
          const auto& [a, b, c] = tris[i];
          const auto& [d, e, f] = tris[j];
          if (a == d || a == e || a == f || b == d || b == e || b == f || c == d || c == e ||
              c == f) {
            continue;
          }
          for (VertexId w = 0; w < ix.n; ++w) {
            if (w == a || w == b || w == c || w == d || w == e || w == f) continue;
            if (!ix.all_adjacent(w, {a, b, c, d, e, f})) continue;
            add({ix.edge(a, b), ix.edge(b, c), ix.edge(a, c), ix.edge(d, e), ix.edge(e, f),
                 ix.edge(d, f), ix.edge(w, a), ix.edge(w, b), ix.edge(w, c), ix.edge(w, d),
                 ix.edge(w, e), ix.edge(w, f)});
          }
        }
      }
      break;
    }

    case PatternShape::A6:
      // two disjoint edges plus two cone vertices; the cone pair needs no edge
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        for (EdgeId f = e + 1; f < g.edge_count(); ++f) {
          const auto [a, b] = g.edges[e];
          const auto [c, d] = g.edges[f];
          if (a == c || a == d || b == c || b == d) continue;
          std::vector<VertexId> cones;
          for (VertexId w = 0; w < ix.n; ++w) {
            if (w != a && w != b && w != c && w != d && ix.all_adjacent(w, {a, b, c, d})) {
              cones.push_back(w);
            }
          }
          for (std::size_t p = 0; p < cones.size(); ++p) {
            for (std::size_t q = p + 1; q < cones.size(); ++q) {
              EdgeSet es = {e, f};
              for (VertexId w : {cones[p], cones[q]}) {
                for (VertexId t : {a, b, c, d}) es.push_back(ix.edge(w, t));
              }
              add(std::move(es));
            }
          }
        }
      }
      break;

    default:
      throw std::invalid_argument("find_fixed_pattern: " +
                                  pattern_name(PatternKind{shape, 0}) + " is not a fixed shape");
  }
  return found;
}

}  // namespace

std::vector<PatternMatch> find_fixed_pattern(const DualMap& dual, PatternShape shape) {
  if (!is_fixed_shape(shape)) {
    throw std::invalid_argument("find_fixed_pattern: shape is parameterized, not fixed");
  }
  std::vector<PatternMatch> out;
  for (const EdgeSet& es : fixed_pattern_edge_sets(dual, shape)) {
    out.push_back(make_match(dual, PatternKind{shape, 0}, es));
  }
  return out;
}

long long count_k4_subgraphs(const DualMap& dual) {
  const DualIndex ix(dual.dual_graph);
  const long long count = static_cast<long long>(all_k4(ix).size());
  if (count > dual.dual_graph.vertex_count - 3) {
    throw std::logic_error("K4 count exceeds |V(dual)| - 3; dual is not a sphere triangulation");
  }
  return count;
}

ApexFamilyEnumerator::ApexFamilyEnumerator(const DualMap& dual, VertexId u, VertexId v,
                                           TargetSurface target)
    : dual_(&dual), u_(u), v_(v), target_(target) {
  if (u == v) throw std::invalid_argument("apex vertices must differ");
  if (target == TargetSurface::Projective) {
    throw std::invalid_argument("apex families exist only for the torus and the Klein bottle");
  }
  commons_ = common_neighbors(dual, u, v);
  if (commons_.size() > 62) throw std::invalid_argument("apex family too large to index");
  const Graph& g = dual.dual_graph;
  for (VertexId w : commons_) {
    edges_u_.push_back(*g.edge_between(u, w));
    edges_v_.push_back(*g.edge_between(v, w));
  }
  uv_edge_ = g.edge_between(u, v);
}

std::optional<PatternMatch> ApexFamilyEnumerator::next() {
  const std::uint64_t end = std::uint64_t{1} << commons_.size();
  for (; subset_ < end; ++subset_) {
    const int size = std::popcount(subset_);
    const bool odd = size % 2 != 0;
    bool with_uv = false;
    if (target_ == TargetSurface::Torus) {
      if (odd && size >= 3 && uv_edge_) {
        with_uv = true;  // K_{1,1,odd}
      } else if (!odd && size >= 4) {
        with_uv = false;  // K_{2,even}
      } else {
        continue;
      }
    } else {  // Klein
      if (!odd && size >= 2 && uv_edge_) {
        with_uv = true;  // K_{1,1,even}
      } else if (odd) {
        with_uv = false;  // K_{2,odd}
      } else {
        continue;
      }
    }
    std::vector<EdgeId> edges;
    for (std::size_t i = 0; i < commons_.size(); ++i) {
      if ((subset_ >> i) & 1) {
        edges.push_back(edges_u_[i]);
        edges.push_back(edges_v_[i]);
      }
    }
    if (with_uv) edges.push_back(*uv_edge_);
    const PatternShape shape = with_uv ? PatternShape::K11M : PatternShape::K2M;
    PatternMatch match =
        make_match(*dual_, PatternKind{shape, size}, std::move(edges), std::make_pair(u_, v_), size);
    ++subset_;
    return match;
  }
  return std::nullopt;
}

SurfaceEnumerator::SurfaceEnumerator(const DualMap& dual, TargetSurface target)
    : dual_(&dual), target_(target) {
  switch (target) {
    case TargetSurface::Projective:
      fixed_shapes_ = {PatternShape::K2, PatternShape::K4};
      break;
    case TargetSurface::Torus:
      fixed_shapes_ = {PatternShape::Triangle, PatternShape::C4, PatternShape::Octahedron};
      break;
    case TargetSurface::Klein:
      fixed_shapes_ = {PatternShape::A1, PatternShape::A2, PatternShape::A3, PatternShape::A4,
                       PatternShape::A5, PatternShape::A6};
      break;
  }
}

bool SurfaceEnumerator::advance_pair() {
  const int n = dual_->dual_graph.vertex_count;
  ++pair_v_;
  if (pair_v_ >= n) {
    ++pair_u_;
    pair_v_ = pair_u_ + 1;
    if (pair_v_ >= n) return false;
  }
  apex_.emplace(*dual_, pair_u_, pair_v_, target_);
  return true;
}

std::optional<PatternMatch> SurfaceEnumerator::next() {
  while (!fixed_done_) {
    if (buffer_index_ < fixed_buffer_.size()) return fixed_buffer_[buffer_index_++];
    if (shape_index_ >= fixed_shapes_.size()) {
      fixed_done_ = true;
      if (target_ == TargetSurface::Projective) return std::nullopt;
      pair_u_ = 0;
      pair_v_ = 0;
      if (!advance_pair()) apex_.reset();
      break;
    }
    fixed_buffer_ = find_fixed_pattern(*dual_, fixed_shapes_[shape_index_++]);
    buffer_index_ = 0;
  }
  if (target_ == TargetSurface::Projective) return std::nullopt;
  while (apex_) {
    if (auto match = apex_->next()) return match;
    if (!advance_pair()) apex_.reset();
  }
  return std::nullopt;
}

std::vector<PatternMatch> enumerate_surface(const DualMap& dual, TargetSurface target) {
  SurfaceEnumerator en(dual, target);
  std::vector<PatternMatch> out;
  while (auto match = en.next()) out.push_back(std::move(*match));
  return out;
}

}  // namespace reembed
