#pragma once

// Shared builders for the test suites: small-group catalog, the recurring
// fixture graphs and actions, and deterministic seeding.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cgk/action.hpp"
#include "cgk/group.hpp"

namespace testutil {

using namespace cgk;

inline unsigned seed() {
  if (const char* s = std::getenv("CGK_SEED")) return static_cast<unsigned>(std::atoi(s));
  return 20250811u;
}

struct NamedGroup {
  std::string name;
  std::vector<Perm> gens;
};

/// Bundled generator sets for every group the property suites walk
/// (all of order <= 24).
inline std::vector<NamedGroup> group_catalog() {
  std::vector<NamedGroup> out;
  auto cyc = [](int n) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = (i + 1) % n;
    return Perm(im);
  };
  out.push_back({"Z2", {cyc(2)}});
  out.push_back({"Z3", {cyc(3)}});
  out.push_back({"Z4", {cyc(4)}});
  out.push_back({"Z5", {cyc(5)}});
  out.push_back({"Z6", {cyc(6)}});
  out.push_back({"Z8", {cyc(8)}});
  out.push_back({"Z12", {Perm({1, 2, 0, 4, 5, 6, 3})}});  // 3-cycle x 4-cycle
  out.push_back({"Z2xZ2", {Perm({1, 0, 2, 3}), Perm({0, 1, 3, 2})}});
  out.push_back({"Z2xZ2xZ2",
                 {Perm({1, 0, 2, 3, 4, 5}), Perm({0, 1, 3, 2, 4, 5}), Perm({0, 1, 2, 3, 5, 4})}});
  out.push_back({"Z3xZ3", {Perm({1, 2, 0, 3, 4, 5}), Perm({0, 1, 2, 4, 5, 3})}});
  out.push_back({"S3", {Perm({1, 0, 2}), Perm({1, 2, 0})}});
  out.push_back({"D4", {Perm({1, 2, 3, 0}), Perm({0, 3, 2, 1})}});
  out.push_back({"D5", {Perm({1, 2, 3, 4, 0}), Perm({0, 4, 3, 2, 1})}});
  out.push_back({"D6", {Perm({1, 2, 3, 4, 5, 0}), Perm({0, 5, 4, 3, 2, 1})}});
  out.push_back({"Q8", {Perm({2, 3, 1, 0, 6, 7, 5, 4}), Perm({4, 5, 7, 6, 1, 0, 2, 3})}});
  out.push_back({"A4", {Perm({1, 2, 0, 3}), Perm({1, 0, 3, 2})}});
  out.push_back({"S4", {Perm({1, 0, 2, 3}), Perm({1, 2, 3, 0})}});
  return out;
}

// ---- fixture graphs -----------------------------------------------------------

inline Graph loops_graph(int n) {
  Graph g;
  g.vertices = {"v"};
  for (int i = 1; i <= n; ++i) g.edges.push_back({"e" + std::to_string(i), 0, 0});
  return g;
}

inline Graph toeplitz_graph() {
  Graph g;
  g.vertices = {"v", "v1", "v2"};
  g.edges = {{"e1", 0, 1}, {"e2", 0, 2}, {"f1", 1, 2}, {"f2", 2, 1}};
  return g;
}

inline Graph triangle_graph() {
  Graph g;
  g.vertices = {"v1", "v2", "v3"};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j)
        g.edges.push_back({"e" + std::to_string(i + 1) + std::to_string(j + 1), i, j});
  return g;
}

inline Graph cross_graph() {
  Graph g;
  g.vertices = {"c", "x1", "x2", "x3", "x4"};
  for (int i = 1; i <= 4; ++i) g.edges.push_back({"a" + std::to_string(i), 0, i});
  return g;
}

inline Graph cayley_graph(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.vertices.push_back("u" + std::to_string(i));
  for (int i = 0; i < n; ++i) g.edges.push_back({"a" + std::to_string(i), i, (i + 1) % n});
  return g;
}

// ---- fixture actions ----------------------------------------------------------

inline GroupAction s3_on_three_loops() {
  Graph g = loops_graph(3);
  GeneratorImages t{"t", Perm({0}), Perm({1, 0, 2})};
  GeneratorImages c{"c", Perm({0}), Perm({1, 2, 0})};
  return validate_action(g, {t, c}, std::nullopt);
}

inline GroupAction z3_on_three_loops() {
  Graph g = loops_graph(3);
  GeneratorImages c{"c", Perm({0}), Perm({1, 2, 0})};
  return validate_action(g, {c}, std::nullopt);
}

inline GroupAction z2_on_toeplitz() {
  Graph g = toeplitz_graph();
  GeneratorImages t{"t", Perm({0, 2, 1}), Perm({1, 0, 3, 2})};
  return validate_action(g, {t}, std::nullopt);
}

inline GroupAction s3_on_triangle() {
  Graph g = triangle_graph();
  // edges in order e12 e13 e21 e23 e31 e32
  auto edge_perm = [&g](const Perm& vp) {
    std::vector<int> im(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
      int s = vp(g.edges[e].src), r = vp(g.edges[e].rng);
      for (int f = 0; f < g.edge_count(); ++f)
        if (g.edges[f].src == s && g.edges[f].rng == r) im[e] = f;
    }
    return Perm(im);
  };
  Perm t({1, 0, 2}), c({1, 2, 0});
  return validate_action(g, {{"t", t, edge_perm(t)}, {"c", c, edge_perm(c)}}, std::nullopt);
}

inline GroupAction d4_on_cross() {
  Graph g = cross_graph();
  GeneratorImages r{"r", Perm({0, 2, 3, 4, 1}), Perm({1, 2, 3, 0})};
  GeneratorImages s{"s", Perm({0, 1, 4, 3, 2}), Perm({0, 3, 2, 1})};
  return validate_action(g, {r, s}, std::nullopt);
}

inline GroupAction zn_on_cayley(int n) {
  Graph g = cayley_graph(n);
  std::vector<int> v(n), e(n);
  for (int i = 0; i < n; ++i) v[i] = e[i] = (i + 1) % n;
  return validate_action(g, {{"rot", Perm(v), Perm(e)}}, std::nullopt);
}

inline GroupAction trivial_action(const Graph& g) {
  return validate_action(
      g, {{"id", Perm::identity(g.vertex_count()), Perm::identity(g.edge_count())}}, std::nullopt);
}

inline std::string fixture(const std::string& name) {
  return std::string(CGK_FIXTURE_DIR) + "/" + name;
}

// ---- randomized actions ---------------------------------------------------------

/// Random action of a small permutation group: the group acts naturally on
/// the vertices; edge orbits are seeded from vertex pairs and carried by coset
/// spaces of subgroups of the pair stabilizer, so nontrivial edge stabilizers
/// occur.
inline GroupAction random_action(std::mt19937& rng, std::size_t max_group = 8, int max_v = 5,
                                 int max_e = 8) {
  for (int attempt = 0;; ++attempt) {
    int nv = 1 + static_cast<int>(rng() % max_v);
    std::vector<Perm> gens;
    int ngens = 1 + static_cast<int>(rng() % 2);
    for (int k = 0; k < ngens; ++k) {
      std::vector<int> im(nv);
      std::iota(im.begin(), im.end(), 0);
      std::shuffle(im.begin(), im.end(), rng);
      gens.emplace_back(im);
    }
    PermGroup G;
    try {
      G = PermGroup::close(gens, max_group);
    } catch (const Error&) {
      continue;  // too big, redraw
    }
    long ng = static_cast<long>(G.order());

    Graph graph;
    for (int v = 0; v < nv; ++v) graph.vertices.push_back("w" + std::to_string(v));
    // per-element edge images assembled orbit by orbit
    std::vector<std::vector<int>> eact_of(ng);

    int orbit_id = 0;
    int budget = static_cast<int>(rng() % (max_e + 1));
    while (graph.edge_count() < budget && orbit_id < 6) {
      int x0 = static_cast<int>(rng() % nv), y0 = static_cast<int>(rng() % nv);
      Subgroup pair;
      pair.parent = &G;
      for (int g = 0; g < ng; ++g)
        if (G.element(g)(x0) == x0 && G.element(g)(y0) == y0) pair.members.push_back(g);
      // subgroup of the pair stabilizer: whole, trivial, or a cyclic piece
      Subgroup H;
      H.parent = &G;
      switch (rng() % 3) {
        case 0: H = pair; break;
        case 1: H.members = {0}; break;
        default: {
          int seed_elem = pair.members[rng() % pair.members.size()];
          int cur = 0;
          do {
            H.members.push_back(cur);
            cur = G.mult(seed_elem, cur);
          } while (cur != 0);
          std::sort(H.members.begin(), H.members.end());
        }
      }
      long orbit_size = ng / static_cast<long>(H.order());
      if (graph.edge_count() + orbit_size > max_e) {
        ++orbit_id;
        continue;
      }
      // left cosets gH, listed by minimal member
      std::vector<int> coset_of(ng, -1), coset_min;
      for (int g = 0; g < ng; ++g) {
        if (coset_of[g] >= 0) continue;
        int id = static_cast<int>(coset_min.size());
        int mn = g;
        std::vector<int> mem;
        for (int h : H.members) {
          int m = G.mult(g, h);
          mem.push_back(m);
          mn = std::min(mn, m);
        }
        for (int m : mem) coset_of[m] = id;
        coset_min.push_back(mn);
      }
      int base = graph.edge_count();
      for (std::size_t cidx = 0; cidx < coset_min.size(); ++cidx) {
        int gc = coset_min[cidx];
        graph.edges.push_back({"o" + std::to_string(orbit_id) + "c" + std::to_string(cidx),
                               G.element(gc)(x0), G.element(gc)(y0)});
      }
      for (int g = 0; g < ng; ++g)
        for (std::size_t cidx = 0; cidx < coset_min.size(); ++cidx)
          eact_of[g].push_back(base + coset_of[G.mult(g, coset_min[cidx])]);
      ++orbit_id;
    }

    std::vector<GeneratorImages> gi;
    for (const auto& gen : G.generators()) {
      int gidx = G.index_of(gen);
      std::vector<int> vi(nv), ei(graph.edge_count());
      for (int v = 0; v < nv; ++v) vi[v] = G.element(gidx)(v);
      for (int e = 0; e < graph.edge_count(); ++e) ei[e] = eact_of[gidx][e];
      gi.push_back({"g", Perm(vi), Perm(ei)});
    }
    return validate_action(graph, gi, std::nullopt, max_group);
  }
}

/// Random free action: disjoint regular vertex orbits and regular edge orbits.
inline GroupAction random_free_action(std::mt19937& rng) {
  static const std::vector<std::vector<Perm>> small = {
      {Perm({1, 0})},
      {Perm({1, 2, 0})},
      {Perm({1, 2, 3, 0})},
      {Perm({1, 0, 2, 3}), Perm({0, 1, 3, 2})},
      {Perm({1, 2, 3, 4, 0})},
      {Perm({1, 2, 3, 4, 5, 0})},
      {Perm({1, 0, 2}), Perm({1, 2, 0})},  // S_3
  };
  PermGroup G = PermGroup::close(small[rng() % small.size()]);
  long ng = static_cast<long>(G.order());
  int copies = 1 + static_cast<int>(rng() % 2);
  Graph graph;
  for (int c = 0; c < copies; ++c)
    for (long g = 0; g < ng; ++g)
      graph.vertices.push_back("v" + std::to_string(c) + "_" + std::to_string(g));
  auto vid = [&](int c, long g) { return c * static_cast<int>(ng) + static_cast<int>(g); };
  int eorbits = 1 + static_cast<int>(rng() % 2);
  for (int k = 0; k < eorbits; ++k) {
    int c1 = static_cast<int>(rng() % copies), c2 = static_cast<int>(rng() % copies);
    long g1 = static_cast<long>(rng() % ng), g2 = static_cast<long>(rng() % ng);
    for (long g = 0; g < ng; ++g)
      graph.edges.push_back({"e" + std::to_string(k) + "_" + std::to_string(g),
                             vid(c1, G.mult(static_cast<int>(g), static_cast<int>(g1))),
                             vid(c2, G.mult(static_cast<int>(g), static_cast<int>(g2)))});
  }
  std::vector<GeneratorImages> gi;
  for (const auto& gen : G.generators()) {
    int gidx = G.index_of(gen);
    std::vector<int> vi(graph.vertex_count()), ei(graph.edge_count());
    for (int c = 0; c < copies; ++c)
      for (long g = 0; g < ng; ++g)
        vi[vid(c, g)] = vid(c, G.mult(gidx, static_cast<int>(g)));
    for (int k = 0; k < eorbits; ++k)
      for (long g = 0; g < ng; ++g)
        ei[k * ng + g] = static_cast<int>(k * ng + G.mult(gidx, static_cast<int>(g)));
    gi.push_back({"g", Perm(vi), Perm(ei)});
  }
  return validate_action(graph, gi, std::nullopt);
}

}  // namespace testutil
