#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "cgk/errors.hpp"

namespace cgk {

struct Edge {
  std::string name;
  int src;  // source vertex index (the map s)
  int rng;  // range vertex index (the map r)
};

/// Finite directed multigraph. Parallel edges and loops are first-class;
/// edge identity is the name, not the endpoint pair.
struct Graph {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }

  int find_vertex(const std::string& name) const {
    for (int i = 0; i < vertex_count(); ++i)
      if (vertices[i] == name) return i;
    return -1;
  }
  int find_edge(const std::string& name) const {
    for (int i = 0; i < edge_count(); ++i)
      if (edges[i].name == name) return i;
    return -1;
  }

  void validate() const {
    std::unordered_map<std::string, int> seen;
    for (const auto& v : vertices)
      if (++seen[v] > 1) fail(Errc::ParseError, "duplicate vertex name: " + v);
    seen.clear();
    for (const auto& e : edges) {
      if (++seen[e.name] > 1) fail(Errc::ParseError, "duplicate edge name: " + e.name);
      if (e.src < 0 || e.src >= vertex_count() || e.rng < 0 || e.rng >= vertex_count())
        fail(Errc::ParseError, "edge endpoint out of range: " + e.name);
    }
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.vertices != b.vertices || a.edges.size() != b.edges.size()) return false;
    for (std::size_t i = 0; i < a.edges.size(); ++i)
      if (a.edges[i].name != b.edges[i].name || a.edges[i].src != b.edges[i].src ||
          a.edges[i].rng != b.edges[i].rng)
        return false;
    return true;
  }
};

/// Structural comparison ignoring names: same vertex count and the same
/// multiset of (src, rng) index pairs.
inline bool same_shape(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<std::pair<int, int>> ea, eb;
  for (const auto& e : a.edges) ea.emplace_back(e.src, e.rng);
  for (const auto& e : b.edges) eb.emplace_back(e.src, e.rng);
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  return ea == eb;
}

inline Graph disjoint_union(const Graph& a, const Graph& b, const std::string& tag_a = "A:",
                            const std::string& tag_b = "B:") {
  Graph g;
  for (const auto& v : a.vertices) g.vertices.push_back(tag_a + v);
  for (const auto& v : b.vertices) g.vertices.push_back(tag_b + v);
  for (const auto& e : a.edges) g.edges.push_back({tag_a + e.name, e.src, e.rng});
  int off = a.vertex_count();
  for (const auto& e : b.edges) g.edges.push_back({tag_b + e.name, e.src + off, e.rng + off});
  return g;
}

}  // namespace cgk
