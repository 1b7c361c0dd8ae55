#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "reembed/counting.hpp"

namespace reembed {

/// Census of all 2^|E| twist sets by surface.
struct GenusDistribution {
  std::map<Surface, long long> counts;
  long long total = 0;
};

// Classifies every subset of E(G) by exhaustive face tracing. The mask range
// is split into contiguous chunks across `jobs` workers; tallies merge by
// addition, so the result is independent of the partitioning.
GenusDistribution brute_force_distribution(const PlanarMap& map, int edge_cap = 24, int jobs = 1);

Graph pattern_graph(const PatternKind& kind);

// Permutation backtracking with degree pruning; meant for pattern-sized
// graphs, not large instances.
bool graphs_isomorphic(const Graph& a, const Graph& b);

// Counts dual edge subsets of the pattern's edge count whose edge-induced
// subgraph is isomorphic to the pattern, by exhaustive subset enumeration.
long long brute_force_pattern_count(const DualMap& dual, const PatternKind& kind,
                                    int size_cap = 12);

struct SurfaceTally {
  long long closed_form = 0;
  long long enumerated = 0;
  std::optional<long long> swept;

  bool consistent() const {
    return closed_form == enumerated && (!swept || *swept == closed_form);
  }
};

struct VerifyReport {
  int vertex_count = 0;
  int edge_count = 0;
  SurfaceTally projective, torus, klein;
  bool sweep_ran = false;
  std::vector<std::string> mismatches;  // offending twist sets, per surface

  bool ok() const;
  std::string to_string() const;  // "OK" or a diff, one line per discrepancy
};

// Three-way comparison per surface: closed-form count, enumeration length,
// and (when |E| <= edge_cap) the exhaustive sweep tally, including a
// twist-set level diff between enumeration and sweep.
VerifyReport verify_counts(const PlanarMap& map, int edge_cap = 24, int jobs = 1);

}  // namespace reembed
