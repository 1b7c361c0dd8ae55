#pragma once

#include "reembed/patterns.hpp"

namespace reembed {

/// Embedding-count bounds as functions of the primal vertex count n:
/// projective plane in [3n/2, 2n-1], torus >= 5n/2 (exact value 7 recorded
/// for n = 4), Klein bottle >= 3n(3n+2)/8.
struct Bounds {
  int n = 0;
  long long pp_lower = 0;
  long long pp_upper = 0;
  long long torus_lower = 0;
  long long klein_lower = 0;
};

struct CountReport {
  long long projective = 0;
  long long torus = 0;
  long long klein = 0;
  long long n_t = 0;          // K_{1,1,1} + K_{2,2} + K_{2,2,2} matches
  long long n_k = 0;          // A1..A6 matches
  long long f_torus_sum = 0;  // apex-family pair sum for the torus
  long long f_klein_sum = 0;  // apex-family pair sum for the Klein bottle
};

// Number of apex-family subgraphs over a pair with k common neighbors.
// Implemented as binomial sums; the paper's closed forms are asserted equal
// on their valid ranges. Adjacent pair: f_T = sum_{i=3}^{k} C(k,i),
// f_K = 2^k - 1. Nonadjacent: f_T = sum over even i >= 4, f_K = 2^{k-1}.
long long f_torus(int k, bool adjacent);
long long f_klein(int k, bool adjacent);

long long count_projective(const DualMap& dual);  // |E(G*)| + #K4
long long count_torus(const DualMap& dual);       // N_T + pair sum of f_torus
long long count_klein(const DualMap& dual);       // N_K + pair sum of f_klein
CountReport count_report(const DualMap& dual);

Bounds bounds_report(int n);  // n even, n >= 4

// 2^m - 1 with m the largest common-neighbor count over adjacent dual pairs:
// the largest K_{1,1,m} guaranteed present gives this many embeddings on each
// of the torus and the Klein bottle.
long long proposition_floor(const DualMap& dual);

}  // namespace reembed
