#pragma once

#include <random>
#include <string>
#include <vector>

#include "cgk/action.hpp"
#include "cgk/chartab.hpp"

namespace cgk {

/// One simple block of C0(E^0) x| G: a vertex orbit together with an
/// irreducible of the stabilizer of the canonical representative. The block
/// is a full matrix algebra of size n = [G : G_v] * deg(pi).
struct Block {
  int index = 0;         // canonical position
  int vertex_orbit = 0;  // orbit index (orbits ordered by minimal vertex)
  int rep_vertex = 0;    // canonical representative (minimal index)
  Subgroup stabilizer;
  int irr_index = 0;     // into the stabilizer's canonical character table
  long degree = 1;       // deg(pi)
  long size = 1;         // n
};

struct CorrEdge {
  int orbit;       // provenance edge orbit
  int from_block;  // source-side block
  int to_block;    // range-side block
  long mult;       // multiplicity of the minimal correspondence, > 0
};

/// Graph of minimal correspondences for C*(E) x| G: matrix-algebra blocks at
/// the vertices, multiplicity-labelled correspondences at the edges, and the
/// aggregated incidence matrix A with A[from][to] = total multiplicity.
struct CorrGraph {
  std::vector<Block> blocks;
  std::vector<CorrEdge> edges;  // sorted by (orbit, from, to)
  IntMatrix matrix;
  long group_order = 0;
  long n_vertices = 0;              // |E^0| of the input
  long n_edges = 0;                 // |E^1| of the input
  std::vector<long> edge_orbit_sizes;
};

namespace detail {

struct BlockData {
  std::vector<Block> blocks;
  std::vector<CharTable> tables;   // per vertex orbit
  std::vector<int> block_start;    // first block index per orbit
  OrbitPartition vorbits;
};

inline BlockData compute_blocks(const GroupAction& act) {
  BlockData bd;
  bd.vorbits = act.vertex_orbits();
  for (std::size_t k = 0; k < bd.vorbits.orbits.size(); ++k) {
    int rep = bd.vorbits.reps[k];
    Subgroup stab = act.vertex_stabilizer(rep);
    CharTable table = character_table(stab);
    bd.block_start.push_back(static_cast<int>(bd.blocks.size()));
    long orbit_size = static_cast<long>(bd.vorbits.orbits[k].size());
    for (std::size_t i = 0; i < table.irreducibles.size(); ++i) {
      Block b;
      b.index = static_cast<int>(bd.blocks.size());
      b.vertex_orbit = static_cast<int>(k);
      b.rep_vertex = rep;
      b.stabilizer = stab;
      b.irr_index = static_cast<int>(i);
      b.degree = table.degrees[i];
      b.size = orbit_size * table.degrees[i];
      bd.blocks.push_back(b);
    }
    bd.tables.push_back(std::move(table));
  }
  return bd;
}

}  // namespace detail

/// Blocks of C0(E^0) x| G in canonical order: one per (vertex orbit,
/// stabilizer irreducible), grouped by orbit.
inline std::vector<Block> vertex_algebra_summary(const GroupAction& act) {
  return detail::compute_blocks(act).blocks;
}

/// Test hook: lets the representative-independence property randomize every
/// choice the decomposition is allowed to make.
struct CorrOptions {
  bool randomize = false;
  unsigned seed = 0;
};

/// The decomposition engine. Stage one splits the correspondence along vertex
/// and edge orbits; stage two splits each piece along the irreducibles of the
/// stabilizers. The multiplicity of the minimal correspondence from block
/// (w, sigma) to block (v, pi) at an edge orbit with representative e is the
/// inner product over G_e of the transported restrictions of pi and sigma.
inline CorrGraph corr_graph(const GroupAction& act, const CorrOptions& opt = {}) {
  std::mt19937_64 rng(opt.seed);
  auto pick = [&](const std::vector<int>& v) -> int {
    if (!opt.randomize) return v.front();
    return v[rng() % v.size()];
  };

  detail::BlockData bd = detail::compute_blocks(act);
  const PermGroup& G = act.group;
  OrbitPartition eo = act.edge_orbits();

  CorrGraph cg;
  cg.blocks = bd.blocks;
  cg.group_order = static_cast<long>(G.order());
  cg.n_vertices = act.graph.vertex_count();
  cg.n_edges = act.graph.edge_count();
  long nb = static_cast<long>(bd.blocks.size());
  cg.matrix = IntMatrix(nb, nb);

  // Per orbit: the character of each block on the stabilizer of a chosen
  // orbit representative. With canonical choices that is the table itself;
  // with randomized representatives the irreducibles are transported and
  // rematched against the canonical table so block identity is unchanged.
  struct OrbitChars {
    int rep;                              // chosen vertex representative
    std::vector<ClassFunction> by_block;  // canonical irr order
  };
  std::vector<OrbitChars> ochars(bd.vorbits.orbits.size());
  for (std::size_t k = 0; k < bd.vorbits.orbits.size(); ++k) {
    int canon = bd.vorbits.reps[k];
    int rep = pick(bd.vorbits.orbits[k]);
    ochars[k].rep = rep;
    if (rep == canon) {
      ochars[k].by_block = bd.tables[k].irreducibles;
      continue;
    }
    // characters of G_rep, matched to the canonical table of G_canon
    Subgroup stab = act.vertex_stabilizer(rep);
    CharTable local = character_table(stab);
    std::vector<int> carriers;  // elements a with a . canon = rep
    for (int g = 0; g < static_cast<int>(G.order()); ++g)
      if (act.vact(g, canon) == rep) carriers.push_back(g);
    int a = pick(carriers);
    ochars[k].by_block.resize(local.irreducibles.size());
    std::vector<bool> used(local.irreducibles.size(), false);
    for (std::size_t i = 0; i < local.irreducibles.size(); ++i) {
      // transport(chi on G_rep, a) lives on a^-1 G_rep a = G_canon
      ClassFunction moved = transport(local.irreducibles[i], a);
      bool matched = false;
      for (std::size_t j = 0; j < bd.tables[k].irreducibles.size(); ++j) {
        if (used[j]) continue;
        const ClassFunction& canon_chi = bd.tables[k].irreducibles[j];
        bool equal = true;
        for (std::size_t c = 0; c < canon_chi.classes.count(); ++c)
          if (moved.at_element(canon_chi.classes.reps[c]) != canon_chi.values[c]) {
            equal = false;
            break;
          }
        if (equal) {
          ochars[k].by_block[j] = local.irreducibles[i];
          used[j] = true;
          matched = true;
          break;
        }
      }
      if (!matched)
        throw std::logic_error("corr_graph: transported irreducible has no canonical match");
    }
  }

  for (std::size_t k = 0; k < eo.orbits.size(); ++k) {
    cg.edge_orbit_sizes.push_back(static_cast<long>(eo.orbits[k].size()));
    int e = pick(eo.orbits[k]);
    const Edge& edge = act.graph.edges[e];
    int w_orb = bd.vorbits.orbit_of[edge.src];
    int v_orb = bd.vorbits.orbit_of[edge.rng];
    int w = ochars[w_orb].rep;
    int v = ochars[v_orb].rep;
    std::vector<int> as, ar;
    for (int g = 0; g < static_cast<int>(G.order()); ++g) {
      if (act.vact(g, edge.src) == w) as.push_back(g);
      if (act.vact(g, edge.rng) == v) ar.push_back(g);
    }
    int a_s = pick(as), a_r = pick(ar);
    Subgroup Ge = act.edge_stabilizer(e);

    const auto& from_blocks = bd.block_start[w_orb];
    const auto& to_blocks = bd.block_start[v_orb];
    long n_from = static_cast<long>(bd.tables[w_orb].irreducibles.size());
    long n_to = static_cast<long>(bd.tables[v_orb].irreducibles.size());
    std::vector<ClassFunction> from_rest, to_rest;
    for (long s = 0; s < n_from; ++s)
      from_rest.push_back(restrict_to(transport(ochars[w_orb].by_block[s], a_s), Ge));
    for (long t = 0; t < n_to; ++t)
      to_rest.push_back(restrict_to(transport(ochars[v_orb].by_block[t], a_r), Ge));

    for (long s = 0; s < n_from; ++s)
      for (long t = 0; t < n_to; ++t) {
        BigInt m = inner_product(to_rest[t], from_rest[s]);
        if (m < 0)
          fail(Errc::NotRational, "negative multiplicity: inconsistent character data");
        if (m == 0) continue;
        long mult = to_long(m);
        cg.edges.push_back({static_cast<int>(k), from_blocks + static_cast<int>(s),
                            to_blocks + static_cast<int>(t), mult});
        cg.matrix.at(from_blocks + s, to_blocks + t) += mult;
      }
  }
  return cg;
}

/// Skeleton graph: one vertex per block, A[j][i] parallel edges from block j
/// to block i. Its graph algebra is Morita equivalent to the crossed product.
inline Graph skeleton(const CorrGraph& cg) {
  Graph g;
  for (const Block& b : cg.blocks) g.vertices.push_back("b" + std::to_string(b.index));
  for (const CorrEdge& e : cg.edges)
    for (long t = 0; t < e.mult; ++t)
      g.edges.push_back({"orb" + std::to_string(e.orbit) + "_" + std::to_string(e.from_block) +
                             "to" + std::to_string(e.to_block) + "_" + std::to_string(t),
                         e.from_block, e.to_block});
  return g;
}

struct OrbitAudit {
  int orbit = 0;
  BigInt expected;
  BigInt actual;
  bool ok = false;
};

struct AuditReport {
  bool ok = false;
  bool vertex_ok = false;      // sum n_i^2 = |G| |E^0|
  bool edge_total_ok = false;  // sum a_ij n_i n_j = |G| |E^1|
  std::vector<OrbitAudit> per_orbit;
  std::string detail;
};

/// Dimension bookkeeping for a computed decomposition. Failures are data,
/// not exceptions.
inline AuditReport dimension_audit(const CorrGraph& cg) {
  AuditReport rep;
  BigInt nsq(0);
  for (const Block& b : cg.blocks) nsq += BigInt(b.size) * BigInt(b.size);
  BigInt vtotal = BigInt(cg.group_order) * BigInt(cg.n_vertices);
  rep.vertex_ok = nsq == vtotal;
  if (!rep.vertex_ok)
    rep.detail = "vertex audit: sum n_i^2 = " + nsq.get_str() + " expected " + vtotal.get_str();

  BigInt esum(0);
  std::vector<BigInt> per_orbit(cg.edge_orbit_sizes.size(), BigInt(0));
  for (const CorrEdge& e : cg.edges) {
    BigInt w = BigInt(e.mult) * BigInt(cg.blocks[e.from_block].size) *
               BigInt(cg.blocks[e.to_block].size);
    esum += w;
    per_orbit[e.orbit] += w;
  }
  BigInt etotal = BigInt(cg.group_order) * BigInt(cg.n_edges);
  rep.edge_total_ok = esum == etotal;
  if (!rep.edge_total_ok && rep.detail.empty())
    rep.detail = "edge audit: sum a n n = " + esum.get_str() + " expected " + etotal.get_str();

  rep.ok = rep.vertex_ok && rep.edge_total_ok;
  for (std::size_t k = 0; k < cg.edge_orbit_sizes.size(); ++k) {
    OrbitAudit oa;
    oa.orbit = static_cast<int>(k);
    oa.expected = BigInt(cg.edge_orbit_sizes[k]) * BigInt(cg.group_order);
    oa.actual = per_orbit[k];
    oa.ok = oa.expected == oa.actual;
    if (!oa.ok) {
      rep.ok = false;
      if (rep.detail.empty())
        rep.detail = "edge orbit " + std::to_string(k) + ": total " + oa.actual.get_str() +
                     " expected " + oa.expected.get_str();
    }
    rep.per_orbit.push_back(std::move(oa));
  }
  return rep;
}

}  // namespace cgk
