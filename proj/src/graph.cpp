#include "reembed/graph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>

#include "reembed/surface.hpp"

namespace reembed {

namespace {

void check_edge_range(int vertex_count, const std::pair<VertexId, VertexId>& e) {
  if (e.first < 0 || e.first >= vertex_count || e.second < 0 || e.second >= vertex_count) {
    throw std::invalid_argument("edge endpoint out of range");
  }
}

}  // namespace

Graph Graph::from_edges(int vertex_count, std::vector<std::pair<VertexId, VertexId>> edges) {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& e : edges) {
    check_edge_range(vertex_count, e);
    if (e.first == e.second) throw std::invalid_argument("loop edge");
    auto key = std::minmax(e.first, e.second);
    if (!seen.insert(key).second) throw std::invalid_argument("parallel edge");
  }
  return from_edges_unchecked(vertex_count, std::move(edges));
}

Graph Graph::from_edges_unchecked(int vertex_count,
                                  std::vector<std::pair<VertexId, VertexId>> edges) {
  Graph g;
  g.vertex_count = vertex_count;
  g.edges = std::move(edges);
  g.adjacency.resize(vertex_count);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    check_edge_range(vertex_count, g.edges[e]);
    auto [u, v] = g.edges[e];
    g.adjacency[u].emplace_back(v, e);
    if (u != v) g.adjacency[v].emplace_back(u, e);
  }
  return g;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  for (const auto& [w, e] : adjacency[u]) {
    if (w == v) return true;
  }
  return false;
}

std::optional<EdgeId> Graph::edge_between(VertexId u, VertexId v) const {
  for (const auto& [w, e] : adjacency[u]) {
    if (w == v) return e;
  }
  return std::nullopt;
}

bool Graph::is_simple() const {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& [u, v] : edges) {
    if (u == v) return false;
    if (!seen.insert(std::minmax(u, v)).second) return false;
  }
  return true;
}

bool Graph::is_connected() const {
  if (vertex_count == 0) return true;
  std::vector<char> seen(vertex_count, 0);
  std::vector<VertexId> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (const auto& [w, e] : adjacency[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == vertex_count;
}

PlanarMap PlanarMap::from_rotations(Graph graph, std::vector<std::vector<EdgeId>> rotation) {
  if (static_cast<int>(rotation.size()) != graph.vertex_count) {
    throw std::invalid_argument("rotation size does not match vertex count");
  }
  for (VertexId v = 0; v < graph.vertex_count; ++v) {
    std::vector<EdgeId> incident;
    for (const auto& [w, e] : graph.adjacency[v]) incident.push_back(e);
    std::vector<EdgeId> rot = rotation[v];
    std::sort(incident.begin(), incident.end());
    std::sort(rot.begin(), rot.end());
    if (incident != rot) {
      throw std::invalid_argument("rotation at vertex " + std::to_string(v) +
                                  " does not list its incident edges");
    }
  }
  PlanarMap m;
  m.graph = std::move(graph);
  m.rotation = std::move(rotation);
  return m;
}

PlanarMap PlanarMap::from_neighbor_lists(const std::vector<std::vector<VertexId>>& neighbors) {
  const int n = static_cast<int>(neighbors.size());
  std::map<std::pair<VertexId, VertexId>, EdgeId> ids;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::map<std::pair<VertexId, VertexId>, int> uses;  // directed occurrences
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : neighbors[v]) {
      if (w < 0 || w >= n) throw std::invalid_argument("neighbor id out of range");
      if (w == v) throw std::invalid_argument("loop entry");
      if (++uses[{v, w}] > 1) throw std::invalid_argument("parallel entry");
      auto key = std::minmax(v, w);
      if (!ids.count(key)) {
        ids[key] = static_cast<EdgeId>(edges.size());
        edges.push_back(key);
      }
    }
  }
  for (const auto& [u, v] : edges) {
    if (!uses.count({u, v}) || !uses.count({v, u})) {
      throw std::invalid_argument("adjacency not symmetric");
    }
  }
  std::vector<std::vector<EdgeId>> rotation(n);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : neighbors[v]) rotation[v].push_back(ids[std::minmax(v, w)]);
  }
  return from_rotations(Graph::from_edges(n, std::move(edges)), std::move(rotation));
}

std::vector<std::vector<VertexId>> PlanarMap::neighbor_lists() const {
  std::vector<std::vector<VertexId>> out(graph.vertex_count);
  for (VertexId v = 0; v < graph.vertex_count; ++v) {
    for (EdgeId e : rotation[v]) {
      auto [a, b] = graph.edges[e];
      out[v].push_back(a == v ? b : a);
    }
  }
  return out;
}

namespace {

struct ByteReader {
  explicit ByteReader(std::istream& in) {
    char c;
    while (in.get(c)) bytes.push_back(static_cast<unsigned char>(c));
  }
  bool eof() const { return pos >= bytes.size(); }
  unsigned char next() { return bytes[pos++]; }
  std::vector<unsigned char> bytes;
  std::size_t pos = 0;
};

constexpr char kPlanarCodeHeader[] = ">>planar_code<<";

}  // namespace

std::vector<PlanarMap> parse_planar_code(std::istream& in) {
  ByteReader r(in);
  const std::size_t header_len = sizeof(kPlanarCodeHeader) - 1;
  if (r.bytes.size() >= header_len &&
      std::equal(kPlanarCodeHeader, kPlanarCodeHeader + header_len, r.bytes.begin())) {
    r.pos = header_len;
  }
  std::vector<PlanarMap> maps;
  int record = 0;
  while (!r.eof()) {
    const std::size_t record_start = r.pos;
    auto fail = [&](const std::string& what) -> ParseError {
      return ParseError("planar_code record " + std::to_string(record) + " at offset " +
                        std::to_string(r.pos) + ": " + what);
    };
    const int n = r.next();
    if (n == 0) throw fail("vertex count 0");
    std::vector<std::vector<VertexId>> neighbors(n);
    for (int v = 0; v < n; ++v) {
      bool terminated = false;
      while (!r.eof()) {
        const int w = r.next();
        if (w == 0) {
          terminated = true;
          break;
        }
        if (w > n) throw fail("neighbor id " + std::to_string(w) + " out of range");
        if (w == v + 1) throw fail("loop entry at vertex " + std::to_string(v + 1));
        neighbors[v].push_back(w - 1);
      }
      if (!terminated) throw fail("truncated record");
      if (neighbors[v].empty()) throw fail("empty neighbor list (terminator misuse)");
    }
    try {
      maps.push_back(PlanarMap::from_neighbor_lists(neighbors));
    } catch (const std::invalid_argument& err) {
      r.pos = record_start;
      throw fail(err.what());
    }
    ++record;
  }
  return maps;
}

std::string write_planar_code(const std::vector<PlanarMap>& maps) {
  std::string out = kPlanarCodeHeader;
  for (const PlanarMap& m : maps) {
    if (m.graph.vertex_count > 255) throw std::invalid_argument("map too large for planar_code");
    out.push_back(static_cast<char>(m.graph.vertex_count));
    for (const auto& list : m.neighbor_lists()) {
      for (VertexId w : list) out.push_back(static_cast<char>(w + 1));
      out.push_back('\0');
    }
  }
  return out;
}

PlanarMap parse_rotation_text(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  long long m = 0;
  if (!(in >> n >> m) || n < 0) throw ParseError("rotation text: bad header line, expected 'n m'");
  std::vector<std::vector<VertexId>> neighbors(n);
  std::vector<char> seen(n, 0);
  for (int line = 0; line < n; ++line) {
    std::string label;
    if (!(in >> label)) throw ParseError("rotation text: missing vertex line " + std::to_string(line));
    if (label.empty() || label.back() != ':') {
      throw ParseError("rotation text: expected 'v:' label, got '" + label + "'");
    }
    int v = 0;
    try {
      v = std::stoi(label.substr(0, label.size() - 1));
    } catch (const std::exception&) {
      throw ParseError("rotation text: bad vertex label '" + label + "'");
    }
    if (v < 0 || v >= n) throw ParseError("rotation text: vertex id out of range");
    if (seen[v]) throw ParseError("rotation text: duplicate line for vertex " + std::to_string(v));
    seen[v] = 1;
    for (int i = 0; i < 3; ++i) {
      int w = 0;
      if (!(in >> w)) throw ParseError("rotation text: vertex " + std::to_string(v) +
                                       " has degree != 3");
      neighbors[v].push_back(w);
    }
  }
  PlanarMap map = [&] {
    try {
      return PlanarMap::from_neighbor_lists(neighbors);
    } catch (const std::invalid_argument& err) {
      throw ParseError(std::string("rotation text: ") + err.what());
    }
  }();
  if (map.graph.edge_count() != m) {
    throw ParseError("rotation text: header claims " + std::to_string(m) + " edges, found " +
                     std::to_string(map.graph.edge_count()));
  }
  return map;
}

ValidationReport validate_cubic_planar(const PlanarMap& map) {
  ValidationReport r;
  const Graph& g = map.graph;
  r.simple = g.is_simple();
  if (!r.simple) r.detail = "graph is not simple";

  r.cubic = g.vertex_count > 0;
  for (VertexId v = 0; v < g.vertex_count; ++v) {
    if (g.degree(v) != 3) {
      r.cubic = false;
      if (!r.detail) r.detail = "vertex " + std::to_string(v) + " has degree " +
                                std::to_string(g.degree(v));
      break;
    }
  }

  r.connected = g.is_connected() && g.vertex_count > 0;
  if (!r.connected && !r.detail) r.detail = "graph is not connected";

  r.three_connected = r.connected && g.vertex_count >= 4;
  if (r.three_connected) {
    std::vector<char> removed(g.vertex_count, 0);
    std::vector<char> seen(g.vertex_count, 0);
    std::vector<VertexId> stack;
    for (VertexId a = 0; a < g.vertex_count && r.three_connected; ++a) {
      for (VertexId b = a + 1; b < g.vertex_count && r.three_connected; ++b) {
        removed[a] = removed[b] = 1;
        std::fill(seen.begin(), seen.end(), 0);
        VertexId start = -1;
        for (VertexId v = 0; v < g.vertex_count; ++v) {
          if (!removed[v]) {
            start = v;
            break;
          }
        }
        int reached = 0;
        if (start >= 0) {
          stack.assign(1, start);
          seen[start] = 1;
          reached = 1;
          while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (const auto& [w, e] : g.adjacency[u]) {
              if (!removed[w] && !seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
              }
            }
          }
        }
        if (reached != g.vertex_count - 2) {
          r.three_connected = false;
          if (!r.detail) r.detail = "removing vertices " + std::to_string(a) + " and " +
                                    std::to_string(b) + " disconnects the graph";
        }
        removed[a] = removed[b] = 0;
      }
    }
  } else if (!r.detail && g.vertex_count < 4) {
    r.detail = "fewer than 4 vertices";
  }

  r.spherical = false;
  if (r.connected) {
    FaceTracer tracer(map);
    std::vector<signed char> positive(g.edge_count(), 1);
    const int faces = tracer.face_count(positive);
    r.spherical = g.vertex_count - g.edge_count() + faces == 2;
    if (!r.spherical && !r.detail) {
      r.detail = "rotation system has Euler characteristic " +
                 std::to_string(g.vertex_count - g.edge_count() + faces);
    }
  }
  return r;
}

bool is_bipartite(const Graph& graph) {
  std::vector<int> color(graph.vertex_count, -1);
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < graph.vertex_count; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.assign(1, s);
    std::size_t head = 0;
    while (head < queue.size()) {
      VertexId u = queue[head++];
      for (const auto& [w, e] : graph.adjacency[u]) {
        if (color[w] == -1) {
          color[w] = color[u] ^ 1;
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

// Number of components containing a cycle after deleting `removed` edges.
int cyclic_components(const Graph& g, const std::vector<char>& removed) {
  std::vector<int> comp(g.vertex_count, -1);
  int cyclic = 0;
  for (VertexId s = 0; s < g.vertex_count; ++s) {
    if (comp[s] != -1) continue;
    std::vector<VertexId> stack = {s};
    comp[s] = s;
    int vertices = 0;
    long long edge_ends = 0;
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      ++vertices;
      for (const auto& [w, e] : g.adjacency[u]) {
        if (removed[e]) continue;
        ++edge_ends;
        if (comp[w] == -1) {
          comp[w] = s;
          stack.push_back(w);
        }
      }
    }
    if (edge_ends / 2 >= vertices) ++cyclic;  // connected comp has a cycle iff |E| >= |V|
  }
  return cyclic;
}

}  // namespace

bool cyclic_edge_connectivity_at_least(const Graph& graph, int k) {
  if (k < 1 || k > 5) throw std::invalid_argument("cyclic edge connectivity: k must be in 1..5");
  const int E = graph.edge_count();
  std::vector<char> removed(E, 0);
  for (int size = 1; size < k; ++size) {
    if (size > E) break;
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      for (int i : pick) removed[i] = 1;
      const bool separates = cyclic_components(graph, removed) >= 2;
      for (int i : pick) removed[i] = 0;
      if (separates) return false;
      int i = size - 1;
      while (i >= 0 && pick[i] == E - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return true;
}

}  // namespace reembed
