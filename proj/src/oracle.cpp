#include "reembed/oracle.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <thread>

namespace reembed {

namespace {

struct SweepResult {
  std::map<Surface, long long> tally;
  // twist masks classified onto each target surface, ascending
  std::vector<std::uint32_t> projective, torus, klein;
};

// Per-dual-vertex bitmask of the primal edges bounding the face; the
// embedding for mask X is orientable iff every face meets X evenly.
std::vector<std::uint32_t> face_edge_masks(const DualMap& dual) {
  std::vector<std::uint32_t> masks(dual.face_count(), 0);
  for (EdgeId e = 0; e < dual.dual_graph.edge_count(); ++e) {
    const auto [f, g] = dual.dual_graph.edges[e];
    masks[f] |= std::uint32_t{1} << e;
    masks[g] |= std::uint32_t{1} << e;
  }
  return masks;
}

SweepResult sweep_range(const PlanarMap& map, const FaceTracer& tracer,
                        const std::vector<std::uint32_t>& face_masks, std::uint64_t begin,
                        std::uint64_t end, bool collect) {
  SweepResult r;
  const int n = map.graph.vertex_count;
  const int e = map.graph.edge_count();
  std::vector<std::uint64_t> scratch;
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    const auto twist = static_cast<std::uint32_t>(mask);
    const int faces = tracer.face_count(twist, scratch);
    const int chi = n - e + faces;
    bool orientable = true;
    for (std::uint32_t fm : face_masks) {
      if (std::popcount(twist & fm) % 2 != 0) {
        orientable = false;
        break;
      }
    }
    if (orientable && chi % 2 != 0) {
      throw std::logic_error("sweep: orientable embedding with odd Euler characteristic");
    }
    const Surface s{chi, orientable};
    ++r.tally[s];
    if (collect) {
      if (s == Surface::projective_plane()) r.projective.push_back(twist);
      else if (s == Surface::torus()) r.torus.push_back(twist);
      else if (s == Surface::klein_bottle()) r.klein.push_back(twist);
    }
  }
  return r;
}

SweepResult sweep(const PlanarMap& map, int edge_cap, int jobs, bool collect) {
  const int e = map.graph.edge_count();
  if (edge_cap < 0 || edge_cap > 31) {
    throw std::invalid_argument("edge cap must be in 0..31");
  }
  if (e > edge_cap) {
    throw std::invalid_argument("brute-force sweep: " + std::to_string(e) +
                                " edges exceed the cap of " + std::to_string(edge_cap));
  }
  const DualMap dual = build_dual(map);
  const FaceTracer tracer(map);
  const auto face_masks = face_edge_masks(dual);
  const std::uint64_t total = std::uint64_t{1} << e;
  jobs = std::max(1, jobs);
  jobs = static_cast<int>(std::min<std::uint64_t>(jobs, total));

  std::vector<SweepResult> parts(jobs);
  if (jobs == 1) {
    parts[0] = sweep_range(map, tracer, face_masks, 0, total, collect);
  } else {
    std::vector<std::thread> workers;
    const std::uint64_t chunk = total / jobs;
    for (int j = 0; j < jobs; ++j) {
      const std::uint64_t begin = chunk * j;
      const std::uint64_t end = j + 1 == jobs ? total : chunk * (j + 1);
      workers.emplace_back([&, j, begin, end] {
        parts[j] = sweep_range(map, tracer, face_masks, begin, end, collect);
      });
    }
    for (auto& w : workers) w.join();
  }
  SweepResult merged;
  for (const SweepResult& p : parts) {
    for (const auto& [s, c] : p.tally) merged.tally[s] += c;
    merged.projective.insert(merged.projective.end(), p.projective.begin(), p.projective.end());
    merged.torus.insert(merged.torus.end(), p.torus.begin(), p.torus.end());
    merged.klein.insert(merged.klein.end(), p.klein.begin(), p.klein.end());
  }
  return merged;
}

}  // namespace

GenusDistribution brute_force_distribution(const PlanarMap& map, int edge_cap, int jobs) {
  SweepResult r = sweep(map, edge_cap, jobs, /*collect=*/false);
  GenusDistribution d;
  d.counts = std::move(r.tally);
  d.total = std::uint64_t{1} << map.graph.edge_count();
  return d;
}

Graph pattern_graph(const PatternKind& kind) {
  using E = std::vector<std::pair<VertexId, VertexId>>;
  auto complete = [](int base, std::initializer_list<VertexId> vs, E& out) {
    std::vector<VertexId> v(vs);
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = i + 1; j < v.size(); ++j) out.emplace_back(base + v[i], base + v[j]);
    }
  };
  switch (kind.shape) {
    case PatternShape::K2: return Graph::from_edges(2, {{0, 1}});
    case PatternShape::K4: {
      E e;
      complete(0, {0, 1, 2, 3}, e);
      return Graph::from_edges(4, std::move(e));
    }
    case PatternShape::Triangle: return Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    case PatternShape::C4: return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    case PatternShape::Octahedron: {
      E e;
      for (int a : {0, 1}) {
        for (int b : {2, 3}) e.emplace_back(a, b);
        for (int c : {4, 5}) e.emplace_back(a, c);
      }
      for (int b : {2, 3}) {
        for (int c : {4, 5}) e.emplace_back(b, c);
      }
      return Graph::from_edges(6, std::move(e));
    }
    case PatternShape::K2M: {
      if (kind.m < 1) throw std::invalid_argument("K2M requires m >= 1");
      E e;
      for (int i = 0; i < kind.m; ++i) {
        e.emplace_back(0, 2 + i);
        e.emplace_back(1, 2 + i);
      }
      return Graph::from_edges(kind.m + 2, std::move(e));
    }
    case PatternShape::K11M: {
      if (kind.m < 1) throw std::invalid_argument("K11M requires m >= 1");
      E e = {{0, 1}};
      for (int i = 0; i < kind.m; ++i) {
        e.emplace_back(0, 2 + i);
        e.emplace_back(1, 2 + i);
      }
      return Graph::from_edges(kind.m + 2, std::move(e));
    }
    case PatternShape::A1: return Graph::from_edges(4, {{0, 1}, {2, 3}});
    case PatternShape::A2: {
      E e = {{0, 1}};
      complete(0, {2, 3, 4, 5}, e);
      return Graph::from_edges(6, std::move(e));
    }
    case PatternShape::A3: {
      E e;
      complete(0, {0, 1, 2, 3}, e);
      complete(0, {4, 5, 6, 7}, e);
      return Graph::from_edges(8, std::move(e));
    }
    case PatternShape::A4: {
      E e = {{0, 1}, {1, 2}, {0, 2}, {4, 0}, {4, 1}, {4, 2}, {4, 3}};
      return Graph::from_edges(5, std::move(e));
    }
    case PatternShape::A5: {
      E e = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
      for (int i = 0; i < 6; ++i) e.emplace_back(6, i);
      return Graph::from_edges(7, std::move(e));
    }
    case PatternShape::A6: {
      E e = {{0, 1}, {2, 3}};
      for (int w : {4, 5}) {
        for (int i = 0; i < 4; ++i) e.emplace_back(w, i);
      }
      return Graph::from_edges(6, std::move(e));
    }
  }
  throw std::invalid_argument("unknown pattern shape");
}

namespace {

bool extend_isomorphism(const Graph& a, const Graph& b, std::vector<int>& map,
                        std::vector<char>& used, std::size_t next) {
  if (next == map.size()) return true;
  const VertexId u = static_cast<VertexId>(next);
  for (VertexId w = 0; w < b.vertex_count; ++w) {
    if (used[w] || a.degree(u) != b.degree(w)) continue;
    bool ok = true;
    for (VertexId prev = 0; prev < u && ok; ++prev) {
      if (a.adjacent(u, prev) != b.adjacent(w, map[prev])) ok = false;
    }
    if (!ok) continue;
    map[u] = w;
    used[w] = 1;
    if (extend_isomorphism(a, b, map, used, next + 1)) return true;
    used[w] = 0;
  }
  return false;
}

}  // namespace

bool graphs_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count != b.vertex_count || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (VertexId v = 0; v < a.vertex_count; ++v) da.push_back(a.degree(v));
  for (VertexId v = 0; v < b.vertex_count; ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> map(a.vertex_count, -1);
  std::vector<char> used(b.vertex_count, 0);
  return extend_isomorphism(a, b, map, used, 0);
}

long long brute_force_pattern_count(const DualMap& dual, const PatternKind& kind, int size_cap) {
  const Graph target = pattern_graph(kind);
  const int want = target.edge_count();
  if (want > size_cap) {
    throw std::invalid_argument("brute_force_pattern_count: pattern has " + std::to_string(want) +
                                " edges, above the cap of " + std::to_string(size_cap));
  }
  const Graph& g = dual.dual_graph;
  const int e = g.edge_count();
  if (want > e) return 0;
  long long count = 0;
  std::vector<int> pick(want);
  for (int i = 0; i < want; ++i) pick[i] = i;
  while (true) {
    // relabel the picked edges' endpoints densely and compare
    std::vector<VertexId> verts;
    for (int i : pick) {
      verts.push_back(g.edges[i].first);
      verts.push_back(g.edges[i].second);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (static_cast<int>(verts.size()) == target.vertex_count) {
      std::vector<std::pair<VertexId, VertexId>> edges;
      for (int i : pick) {
        const auto [u, v] = g.edges[i];
        const int lu = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), u) -
                                        verts.begin());
        const int lv = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) -
                                        verts.begin());
        edges.emplace_back(lu, lv);
      }
      if (graphs_isomorphic(Graph::from_edges(static_cast<int>(verts.size()), std::move(edges)),
                            target)) {
        ++count;
      }
    }
    int i = want - 1;
    while (i >= 0 && pick[i] == e - want + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < want; ++j) pick[j] = pick[j - 1] + 1;
  }
  return count;
}

bool VerifyReport::ok() const {
  return projective.consistent() && torus.consistent() && klein.consistent() &&
         mismatches.empty();
}

std::string VerifyReport::to_string() const {
  if (ok()) return "OK";
  std::ostringstream out;
  auto line = [&](const char* name, const SurfaceTally& t) {
    if (t.consistent()) return;
    out << name << ": closed-form " << t.closed_form << ", enumeration " << t.enumerated;
    if (t.swept) out << ", sweep " << *t.swept;
    out << '\n';
  };
  line("projective", projective);
  line("torus", torus);
  line("klein", klein);
  for (const std::string& m : mismatches) out << m << '\n';
  std::string s = out.str();
  if (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

namespace {

std::string mask_to_string(std::uint32_t mask) {
  std::string s = "{";
  bool first = true;
  for (int e = 0; e < 32; ++e) {
    if ((mask >> e) & 1) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
  }
  return s + "}";
}

void diff_twist_sets(const char* name, const std::vector<std::uint32_t>& swept,
                     std::vector<std::uint32_t> enumerated, std::vector<std::string>& out) {
  std::sort(enumerated.begin(), enumerated.end());
  std::vector<std::uint32_t> sorted_swept = swept;
  std::sort(sorted_swept.begin(), sorted_swept.end());
  std::vector<std::uint32_t> only_sweep, only_enum;
  std::set_difference(sorted_swept.begin(), sorted_swept.end(), enumerated.begin(),
                      enumerated.end(), std::back_inserter(only_sweep));
  std::set_difference(enumerated.begin(), enumerated.end(), sorted_swept.begin(),
                      sorted_swept.end(), std::back_inserter(only_enum));
  constexpr std::size_t kLimit = 20;
  for (std::size_t i = 0; i < only_sweep.size() && i < kLimit; ++i) {
    out.push_back(std::string(name) + ": sweep found twist set " + mask_to_string(only_sweep[i]) +
                  " missing from enumeration");
  }
  for (std::size_t i = 0; i < only_enum.size() && i < kLimit; ++i) {
    out.push_back(std::string(name) + ": enumeration emitted twist set " +
                  mask_to_string(only_enum[i]) + " the sweep classifies elsewhere");
  }
}

}  // namespace

VerifyReport verify_counts(const PlanarMap& map, int edge_cap, int jobs) {
  VerifyReport report;
  report.vertex_count = map.graph.vertex_count;
  report.edge_count = map.graph.edge_count();
  const DualMap dual = build_dual(map);
  const CountReport counts = count_report(dual);
  report.projective.closed_form = counts.projective;
  report.torus.closed_form = counts.torus;
  report.klein.closed_form = counts.klein;

  const bool small_enough = report.edge_count <= 31;
  std::vector<std::uint32_t> pp_masks, torus_masks, klein_masks;
  auto collect = [&](TargetSurface target, std::vector<std::uint32_t>& masks) {
    long long count = 0;
    SurfaceEnumerator en(dual, target);
    while (auto match = en.next()) {
      ++count;
      if (small_enough) {
        std::uint32_t m = 0;
        for (EdgeId e : match->twists) m |= std::uint32_t{1} << e;
        masks.push_back(m);
      }
    }
    return count;
  };
  report.projective.enumerated = collect(TargetSurface::Projective, pp_masks);
  report.torus.enumerated = collect(TargetSurface::Torus, torus_masks);
  report.klein.enumerated = collect(TargetSurface::Klein, klein_masks);

  if (report.edge_count <= edge_cap) {
    SweepResult swept = sweep(map, edge_cap, jobs, /*collect=*/true);
    report.sweep_ran = true;
    auto tally_of = [&](const Surface& s) {
      auto it = swept.tally.find(s);
      return it == swept.tally.end() ? 0LL : it->second;
    };
    report.projective.swept = tally_of(Surface::projective_plane());
    report.torus.swept = tally_of(Surface::torus());
    report.klein.swept = tally_of(Surface::klein_bottle());
    diff_twist_sets("projective", swept.projective, pp_masks, report.mismatches);
    diff_twist_sets("torus", swept.torus, torus_masks, report.mismatches);
    diff_twist_sets("klein", swept.klein, klein_masks, report.mismatches);
  }
  return report;
}

}  // namespace reembed
