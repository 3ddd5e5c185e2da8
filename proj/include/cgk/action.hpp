#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cgk/graph.hpp"
#include "cgk/group.hpp"

namespace cgk {

/// Validated action of a finite group on a directed multigraph: a homomorphism
/// into graph automorphisms, stored as one (vertex perm, edge perm) pair per
/// group element.
struct GroupAction {
  PermGroup group;
  Graph graph;
  std::vector<Perm> vmaps;  // per element index
  std::vector<Perm> emaps;

  int vact(int g, int v) const { return vmaps[g](v); }
  int eact(int g, int e) const { return emaps[g](e); }

  OrbitPartition vertex_orbits() const {
    return orbits(group, graph.vertex_count(), [this](int g, int v) { return vact(g, v); });
  }
  OrbitPartition edge_orbits() const {
    return orbits(group, graph.edge_count(), [this](int g, int e) { return eact(g, e); });
  }
  Subgroup vertex_stabilizer(int v) const {
    return stabilizer(group, [this](int g, int p) { return vact(g, p); }, v);
  }
  Subgroup edge_stabilizer(int e) const {
    return stabilizer(group, [this](int g, int p) { return eact(g, p); }, e);
  }
};

/// One generator of an action: images of all vertices and edges.
struct GeneratorImages {
  std::string name;  // optional label, may be empty
  Perm vperm;
  Perm eperm;
};

namespace detail {

inline void check_equivariance(const Graph& graph, const Perm& vp, const Perm& ep,
                               const std::string& label) {
  for (int e = 0; e < graph.edge_count(); ++e) {
    const Edge& x = graph.edges[e];
    const Edge& y = graph.edges[ep(e)];
    if (y.src != vp(x.src) || y.rng != vp(x.rng))
      fail(Errc::NotCompatible, "generator " + label + " breaks incidence at edge " + x.name);
  }
}

}  // namespace detail

/// Build a validated action. Two modes:
///  - intrinsic (no abstract group): the group is the closure of the combined
///    (vertex, edge) permutations inside Sym(V) x Sym(E), faithful by
///    construction;
///  - abstract: an abstract permutation group is supplied along with one
///    graph image per abstract generator; images of all elements are built by
///    closure word-tracking, and any inconsistency is NotWellDefined.
inline GroupAction validate_action(const Graph& graph, const std::vector<GeneratorImages>& gens,
                                   const std::optional<PermGroup>& abstract_group,
                                   std::size_t bound = 20000) {
  graph.validate();
  if (gens.empty()) fail(Errc::ParseError, "action needs at least one generator");
  int nv = graph.vertex_count(), ne = graph.edge_count();
  for (const auto& g : gens) {
    if (g.vperm.degree() != nv || g.eperm.degree() != ne)
      fail(Errc::ParseError, "generator map degree mismatch");
    detail::check_equivariance(graph, g.vperm, g.eperm, g.name.empty() ? "?" : g.name);
  }

  GroupAction act;
  act.graph = graph;

  if (!abstract_group) {
    // combined permutation on vertices then edges
    std::vector<Perm> combined;
    for (const auto& g : gens) {
      std::vector<int> im(nv + ne);
      for (int v = 0; v < nv; ++v) im[v] = g.vperm(v);
      for (int e = 0; e < ne; ++e) im[nv + e] = nv + g.eperm(e);
      combined.emplace_back(std::move(im));
    }
    act.group = PermGroup::close(std::move(combined), bound);
    for (std::size_t i = 0; i < act.group.order(); ++i) {
      const Perm& p = act.group.element(static_cast<int>(i));
      std::vector<int> vi(nv), ei(ne);
      for (int v = 0; v < nv; ++v) vi[v] = p(v);
      for (int e = 0; e < ne; ++e) ei[e] = p(nv + e) - nv;
      act.vmaps.emplace_back(std::move(vi));
      act.emaps.emplace_back(std::move(ei));
    }
    return act;
  }

  if (abstract_group->generators().size() != gens.size())
    fail(Errc::ParseError, "abstract group generator count does not match action generators");
  act.group = *abstract_group;
  const PermGroup& G = act.group;
  std::size_t n = G.order();
  if (n > bound) fail(Errc::BoundExceeded, "abstract group order exceeds bound");
  act.vmaps.resize(n);
  act.emaps.resize(n);
  // images along the BFS tree: element i = element(parent) after gen(via)
  for (std::size_t i = 0; i < n; ++i) {
    int idx = static_cast<int>(i);
    if (G.parent(idx) < 0) {
      act.vmaps[i] = Perm::identity(nv);
      act.emaps[i] = Perm::identity(ne);
    } else {
      const auto& g = gens[static_cast<std::size_t>(G.via_gen(idx))];
      act.vmaps[i] = act.vmaps[static_cast<std::size_t>(G.parent(idx))].compose(g.vperm);
      act.emaps[i] = act.emaps[static_cast<std::size_t>(G.parent(idx))].compose(g.eperm);
    }
  }
  // well-definedness: the tree images must respect the whole multiplication
  // table on generators
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      int gk = G.index_of(G.generators()[k]);
      int y = G.mult(static_cast<int>(i), gk);
      Perm vy = act.vmaps[i].compose(gens[k].vperm);
      Perm ey = act.emaps[i].compose(gens[k].eperm);
      if (vy != act.vmaps[static_cast<std::size_t>(y)] ||
          ey != act.emaps[static_cast<std::size_t>(y)])
        fail(Errc::NotWellDefined,
             "generator images do not define a homomorphism from the abstract group");
    }
  return act;
}

/// Quotient graph: vertices and edges are the orbits, named after the
/// minimal-index representatives; endpoints are well defined by equivariance.
inline Graph quotient_graph(const GroupAction& act) {
  OrbitPartition vo = act.vertex_orbits();
  OrbitPartition eo = act.edge_orbits();
  Graph q;
  for (int rep : vo.reps) q.vertices.push_back(act.graph.vertices[rep]);
  for (int rep : eo.reps) {
    const Edge& e = act.graph.edges[rep];
    q.edges.push_back({e.name, vo.orbit_of[e.src], vo.orbit_of[e.rng]});
  }
  return q;
}

/// True iff every vertex and edge stabilizer is trivial.
inline bool is_free(const GroupAction& act) {
  for (std::size_t g = 1; g < act.group.order(); ++g) {
    for (int v = 0; v < act.graph.vertex_count(); ++v)
      if (act.vact(static_cast<int>(g), v) == v) return false;
    for (int e = 0; e < act.graph.edge_count(); ++e)
      if (act.eact(static_cast<int>(g), e) == e) return false;
  }
  return true;
}

/// Cocycle on the edges of a graph with values in the dual of a finite
/// abelian group given by its invariant factors.
struct Cocycle {
  std::vector<long> abelian;                          // invariant factors m_1..m_r
  std::map<std::string, std::vector<long>> assignment;  // edge name -> character tuple

  long dual_order() const {
    long n = 1;
    for (long m : abelian) n *= m;
    return n;
  }
};

namespace detail {

inline std::string tuple_name(const std::vector<long>& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ".";
    s += std::to_string(t[i]);
  }
  return s;
}

}  // namespace detail

/// Skew product graph E(c): vertices (chi, v) and edges (chi, e) with
/// s(chi,e) = (chi, s(e)) and r(chi,e) = (chi c(e), r(e)). Characters are
/// enumerated in lexicographic tuple order; the fiber of chi comes first.
inline Graph skew_product(const Graph& E, const Cocycle& c) {
  E.validate();
  std::size_t rank = c.abelian.size();
  for (long m : c.abelian)
    if (m < 1) fail(Errc::ParseError, "cocycle: invariant factors must be positive");
  std::vector<std::vector<long>> edge_char(E.edge_count());
  for (int e = 0; e < E.edge_count(); ++e) {
    auto it = c.assignment.find(E.edges[e].name);
    if (it == c.assignment.end())
      fail(Errc::ParseError, "cocycle: missing assignment for edge " + E.edges[e].name);
    if (it->second.size() != rank)
      fail(Errc::ParseError, "cocycle: tuple length mismatch for edge " + E.edges[e].name);
    for (std::size_t i = 0; i < rank; ++i)
      if (it->second[i] < 0 || it->second[i] >= c.abelian[i])
        fail(Errc::ParseError, "cocycle: tuple entry out of range for edge " + E.edges[e].name);
    edge_char[e] = it->second;
  }

  std::vector<std::vector<long>> chars;  // lexicographic
  std::vector<long> cur(rank, 0);
  for (;;) {
    chars.push_back(cur);
    std::size_t i = rank;
    while (i > 0) {
      --i;
      if (++cur[i] < c.abelian[i]) break;
      cur[i] = 0;
      if (i == 0) {
        i = rank + 1;
        break;
      }
    }
    if (rank == 0 || i == rank + 1) break;
  }

  std::map<std::vector<long>, int> char_index;
  for (std::size_t i = 0; i < chars.size(); ++i) char_index[chars[i]] = static_cast<int>(i);

  Graph out;
  for (const auto& chi : chars)
    for (const auto& v : E.vertices)
      out.vertices.push_back(v + "@" + detail::tuple_name(chi));
  int nv = E.vertex_count();
  for (std::size_t ci = 0; ci < chars.size(); ++ci) {
    for (int e = 0; e < E.edge_count(); ++e) {
      std::vector<long> shifted = chars[ci];
      for (std::size_t i = 0; i < rank; ++i)
        shifted[i] = (shifted[i] + edge_char[e][i]) % c.abelian[i];
      int ti = char_index.at(shifted);
      out.edges.push_back({E.edges[e].name + "@" + detail::tuple_name(chars[ci]),
                           static_cast<int>(ci) * nv + E.edges[e].src,
                           ti * nv + E.edges[e].rng});
    }
  }
  return out;
}

}  // namespace cgk
