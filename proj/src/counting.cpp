#include "reembed/counting.hpp"

#include <algorithm>
#include <stdexcept>

namespace reembed {

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long pow2(int k) {
  if (k < 0) return 0;
  if (k >= 62) throw std::overflow_error("2^k exceeds the supported counting range");
  return 1LL << k;
}

}  // namespace

long long f_torus(int k, bool adjacent) {
  if (k < 0) throw std::invalid_argument("f_torus: negative k");
  if (k >= 62) throw std::overflow_error("f_torus: k too large");
  long long sum = 0;
  if (adjacent) {
    for (int i = 3; i <= k; ++i) sum += binomial(k, i);
    const long long closed = pow2(k) - (static_cast<long long>(k) * k + k + 2) / 2;
    if (sum != closed) throw std::logic_error("f_torus adjacent closed form mismatch");
  } else {
    for (int i = 4; i <= k; i += 2) sum += binomial(k, i);
    if (k >= 1) {
      const long long closed = pow2(k - 1) - (static_cast<long long>(k) * k - k + 2) / 2;
      if (sum != closed) throw std::logic_error("f_torus nonadjacent closed form mismatch");
    }
  }
  return sum;
}

long long f_klein(int k, bool adjacent) {
  if (k < 0) throw std::invalid_argument("f_klein: negative k");
  if (k >= 62) throw std::overflow_error("f_klein: k too large");
  long long sum = 0;
  if (adjacent) {
    for (int i = 1; i <= k; ++i) sum += binomial(k, i);
    if (sum != pow2(k) - 1) throw std::logic_error("f_klein adjacent closed form mismatch");
  } else {
    for (int i = 1; i <= k; i += 2) sum += binomial(k, i);
    if (k >= 1 && sum != pow2(k - 1)) {
      throw std::logic_error("f_klein nonadjacent closed form mismatch");
    }
  }
  return sum;
}

long long count_projective(const DualMap& dual) {
  return dual.dual_graph.edge_count() + count_k4_subgraphs(dual);
}

CountReport count_report(const DualMap& dual) {
  const Graph& g = dual.dual_graph;
  CountReport r;
  r.projective = count_projective(dual);

  // N_T: triangles and 4-cycles by common-neighbor arithmetic, K_{2,2,2} by
  // pattern search. N_K: disjoint edge pairs arithmetically, A2..A6 by search.
  long long triangle_incidences = 0;  // (edge, common neighbor) pairs
  long long c4_diagonals = 0;
  for (VertexId u = 0; u < g.vertex_count; ++u) {
    for (VertexId v = u + 1; v < g.vertex_count; ++v) {
      const int k = static_cast<int>(common_neighbors(dual, u, v).size());
      const bool adjacent = g.adjacent(u, v);
      if (adjacent) triangle_incidences += k;
      c4_diagonals += binomial(k, 2);
      r.f_torus_sum += f_torus(k, adjacent);
      r.f_klein_sum += f_klein(k, adjacent);
    }
  }
  const long long triangles = triangle_incidences / 3;
  const long long c4s = c4_diagonals / 2;
  const long long octas =
      static_cast<long long>(find_fixed_pattern(dual, PatternShape::Octahedron).size());
  r.n_t = triangles + c4s + octas;

  long long adjacent_pairs = 0;
  for (VertexId v = 0; v < g.vertex_count; ++v) adjacent_pairs += binomial(g.degree(v), 2);
  const long long e = g.edge_count();
  long long a_counts = e * (e - 1) / 2 - adjacent_pairs;  // A1
  for (PatternShape s : {PatternShape::A2, PatternShape::A3, PatternShape::A4, PatternShape::A5,
                         PatternShape::A6}) {
    a_counts += static_cast<long long>(find_fixed_pattern(dual, s).size());
  }
  r.n_k = a_counts;

  r.torus = r.n_t + r.f_torus_sum;
  r.klein = r.n_k + r.f_klein_sum;
  return r;
}

long long count_torus(const DualMap& dual) { return count_report(dual).torus; }

long long count_klein(const DualMap& dual) { return count_report(dual).klein; }

Bounds bounds_report(int n) {
  if (n < 4) throw std::invalid_argument("bounds_report: n must be at least 4");
  if (n % 2 != 0) throw std::invalid_argument("bounds_report: n must be even for a cubic graph");
  Bounds b;
  b.n = n;
  b.pp_lower = 3LL * n / 2;
  b.pp_upper = 2LL * n - 1;
  b.torus_lower = n == 4 ? 7 : 5LL * n / 2;
  const long long klein_num = 3LL * n * (3LL * n + 2);
  if (klein_num % 8 != 0) throw std::logic_error("Klein bound is not integral");
  b.klein_lower = klein_num / 8;
  return b;
}

long long proposition_floor(const DualMap& dual) {
  const Graph& g = dual.dual_graph;
  int m = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edges[e];
    m = std::max(m, static_cast<int>(common_neighbors(dual, u, v).size()));
  }
  return pow2(m) - 1;
}

}  // namespace reembed
