#pragma once

#include <vector>

#include "cgk/decomp.hpp"

namespace cgk {

/// Finite-dimensional model of the crossed-product correspondence: the
/// algebra A x| G on the basis (vertex, group element) and the bimodule
/// H_E x| G on the basis (edge, group element), with convolution products
/// written out as exact structure maps. Everything is computed in cyclotomic
/// rationals so corner dimensions come out as exact integers.
struct Crossed {
  const GroupAction* act;
  long nv, ne, ng;

  using Vec = std::vector<CycRat>;  // dense coefficient vector

  long alg_dim() const { return nv * ng; }
  long mod_dim() const { return ne * ng; }

  long aidx(long x, long g) const { return x * ng + g; }
  long midx(long e, long g) const { return e * ng + g; }

  Vec alg_basis(long x, long g) const {
    Vec v(alg_dim());
    v[aidx(x, g)] = CycRat::integer(BigInt(1));
    return v;
  }
  Vec mod_basis(long e, long g) const {
    Vec v(mod_dim());
    v[midx(e, g)] = CycRat::integer(BigInt(1));
    return v;
  }

  Vec alg_unit() const {
    Vec v(alg_dim());
    for (long x = 0; x < nv; ++x) v[aidx(x, 0)] = CycRat::integer(BigInt(1));
    return v;
  }

  // (k1 * k2)(x, g) = sum_h k1(x, h) k2(h^-1 x, h^-1 g)
  Vec alg_mul(const Vec& a, const Vec& b) const {
    Vec out(alg_dim());
    for (long x = 0; x < nv; ++x)
      for (long g = 0; g < ng; ++g) {
        if (a[aidx(x, g)].is_zero()) continue;
        long y = act->vact(static_cast<int>(act->group.inverse(static_cast<int>(g))),
                           static_cast<int>(x));
        for (long h = 0; h < ng; ++h) {
          if (b[aidx(y, h)].is_zero()) continue;
          long gh = act->group.mult(static_cast<int>(g), static_cast<int>(h));
          out[aidx(x, gh)] += a[aidx(x, g)] * b[aidx(y, h)];
        }
      }
    return out;
  }

  // a*(x, g) = conj(a(g^-1 x, g^-1)) on basis: (x,g)* = (g^-1 x, g^-1)
  Vec alg_star(const Vec& a) const {
    Vec out(alg_dim());
    for (long x = 0; x < nv; ++x)
      for (long g = 0; g < ng; ++g) {
        if (a[aidx(x, g)].is_zero()) continue;
        long gi = act->group.inverse(static_cast<int>(g));
        long y = act->vact(static_cast<int>(gi), static_cast<int>(x));
        out[aidx(y, gi)] += a[aidx(x, g)].conj();
      }
    return out;
  }

  // (h . xi): basis rule (x,g).(e,k) = [r(g e) = x] (g e, g k)
  Vec act_left(const Vec& a, const Vec& xi) const {
    Vec out(mod_dim());
    for (long e = 0; e < ne; ++e)
      for (long k = 0; k < ng; ++k) {
        if (xi[midx(e, k)].is_zero()) continue;
        for (long g = 0; g < ng; ++g) {
          long ge = act->eact(static_cast<int>(g), static_cast<int>(e));
          long x = act->graph.edges[ge].rng;
          if (a[aidx(x, g)].is_zero()) continue;
          long gk = act->group.mult(static_cast<int>(g), static_cast<int>(k));
          out[midx(ge, gk)] += a[aidx(x, g)] * xi[midx(e, k)];
        }
      }
    return out;
  }

  // (xi . f): basis rule (e,g).(x,h) = [s(e) = g x] (e, g h)
  Vec act_right(const Vec& xi, const Vec& a) const {
    Vec out(mod_dim());
    for (long e = 0; e < ne; ++e)
      for (long g = 0; g < ng; ++g) {
        if (xi[midx(e, g)].is_zero()) continue;
        long x = act->vact(static_cast<int>(act->group.inverse(static_cast<int>(g))),
                           act->graph.edges[e].src);
        for (long h = 0; h < ng; ++h) {
          if (a[aidx(x, h)].is_zero()) continue;
          long gh = act->group.mult(static_cast<int>(g), static_cast<int>(h));
          out[midx(e, gh)] += xi[midx(e, g)] * a[aidx(x, h)];
        }
      }
    return out;
  }

  // <xi, eta>: basis rule <(e,g), (f,h)> = [e = f] (g^-1 s(e), g^-1 h)
  Vec inner(const Vec& xi, const Vec& eta) const {
    Vec out(alg_dim());
    for (long e = 0; e < ne; ++e)
      for (long g = 0; g < ng; ++g) {
        if (xi[midx(e, g)].is_zero()) continue;
        long gi = act->group.inverse(static_cast<int>(g));
        long x = act->vact(static_cast<int>(gi), act->graph.edges[e].src);
        for (long h = 0; h < ng; ++h) {
          if (eta[midx(e, h)].is_zero()) continue;
          long gh = act->group.mult(static_cast<int>(gi), static_cast<int>(h));
          out[aidx(x, gh)] += xi[midx(e, g)].conj() * eta[midx(e, h)];
        }
      }
    return out;
  }
};

inline Crossed build_crossed(const GroupAction& act, long max_dim = 5000) {
  Crossed c;
  c.act = &act;
  c.nv = act.graph.vertex_count();
  c.ne = act.graph.edge_count();
  c.ng = static_cast<long>(act.group.order());
  if (c.alg_dim() > max_dim || c.mod_dim() > max_dim)
    fail(Errc::BoundExceeded, "crossed-product dimension exceeds bound " + std::to_string(max_dim));
  return c;
}

/// Central idempotent of A x| G attached to one block: supported on pairs
/// (x, g) with x in the orbit and g in G_x, with kernel value
/// (deg pi / |G_v|) conj(chi^x(g)) where chi^x is the transported character.
struct CentralIdempotent {
  int block = 0;
  Crossed::Vec kernel;
};

inline std::vector<CentralIdempotent> central_idempotents(const GroupAction& act,
                                                          long max_dim = 5000) {
  Crossed cx = build_crossed(act, max_dim);
  detail::BlockData bd = detail::compute_blocks(act);
  const PermGroup& G = act.group;

  std::vector<CentralIdempotent> out;
  for (const Block& b : bd.blocks) {
    const ClassFunction& chi = bd.tables[b.vertex_orbit].irreducibles[b.irr_index];
    CentralIdempotent z;
    z.block = b.index;
    z.kernel.assign(cx.alg_dim(), CycRat());
    BigInt stab_order(static_cast<long>(b.stabilizer.order()));
    for (int x : bd.vorbits.orbits[b.vertex_orbit]) {
      // transversal element t with t . rep = x
      int t = -1;
      for (int g = 0; g < static_cast<int>(G.order()); ++g)
        if (act.vact(g, b.rep_vertex) == x) {
          t = g;
          break;
        }
      int ti = G.inverse(t);
      Subgroup gx = act.vertex_stabilizer(x);
      for (int g : gx.members) {
        int back = G.mult(G.mult(ti, g), t);  // in G_rep
        Cyc val = chi.at_element(back).conj() * Cyc(BigInt(b.degree));
        z.kernel[cx.aidx(x, g)] = CycRat(std::move(val), stab_order);
      }
    }
    out.push_back(std::move(z));
  }

  // validate the full invariant set before returning
  auto vec_eq = [](const Crossed::Vec& a, const Crossed::Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return false;
    return true;
  };
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) {
      Crossed::Vec prod = cx.alg_mul(out[i].kernel, out[j].kernel);
      if (i == j) {
        if (!vec_eq(prod, out[i].kernel))
          fail(Errc::ValidationFailed, "central idempotent is not idempotent (block " +
                                           std::to_string(i) + ")");
      } else {
        for (const auto& c : prod)
          if (!c.is_zero())
            fail(Errc::ValidationFailed, "central idempotents " + std::to_string(i) + "," +
                                             std::to_string(j) + " are not orthogonal");
      }
    }
  {
    Crossed::Vec sum(cx.alg_dim());
    for (const auto& z : out)
      for (long k = 0; k < cx.alg_dim(); ++k) sum[k] += z.kernel[k];
    if (!vec_eq(sum, cx.alg_unit()))
      fail(Errc::ValidationFailed, "central idempotents do not sum to the unit");
  }
  for (const auto& z : out)
    for (long x = 0; x < cx.nv; ++x)
      for (long g = 0; g < cx.ng; ++g) {
        Crossed::Vec b = cx.alg_basis(x, g);
        if (!vec_eq(cx.alg_mul(b, z.kernel), cx.alg_mul(z.kernel, b)))
          fail(Errc::ValidationFailed, "idempotent for block " + std::to_string(z.block) +
                                           " is not central");
      }
  return out;
}

struct OracleResult {
  std::vector<Block> blocks;
  IntMatrix corner_dims;      // [i][j] = dim z_i (H x| G) z_j
  IntMatrix multiplicities;   // [from][to], canonical block order
};

/// Recompute the decomposition multiplicities from first principles: the
/// corner z_i (H x| G) z_j is carved out by the projection xi -> z_i xi z_j,
/// whose exact trace is the corner dimension; dividing by n_i n_j gives the
/// number of minimal correspondences from block j to block i.
inline OracleResult oracle_check(const GroupAction& act, long max_dim = 5000) {
  Crossed cx = build_crossed(act, max_dim);
  std::vector<CentralIdempotent> zs = central_idempotents(act, max_dim);
  detail::BlockData bd = detail::compute_blocks(act);
  long nb = static_cast<long>(zs.size());

  OracleResult res;
  res.blocks = bd.blocks;
  res.corner_dims = IntMatrix(nb, nb);
  res.multiplicities = IntMatrix(nb, nb);

  for (long i = 0; i < nb; ++i)
    for (long j = 0; j < nb; ++j) {
      CycRat trace;
      for (long b = 0; b < cx.mod_dim(); ++b) {
        long e = b / cx.ng, g = b % cx.ng;
        Crossed::Vec tb =
            cx.act_right(cx.act_left(zs[i].kernel, cx.mod_basis(e, g)), zs[j].kernel);
        trace += tb[b];
        // the corner projection must be idempotent on every basis vector
        Crossed::Vec t2 = cx.act_right(cx.act_left(zs[i].kernel, tb), zs[j].kernel);
        for (long k = 0; k < cx.mod_dim(); ++k)
          if (t2[k] != tb[k])
            fail(Errc::ValidationFailed, "corner projection is not idempotent");
      }
      BigInt dim = trace.to_integer();
      if (dim < 0) fail(Errc::ValidationFailed, "negative corner dimension");
      res.corner_dims.at(i, j) = dim;
      BigInt nn = BigInt(bd.blocks[i].size) * BigInt(bd.blocks[j].size);
      if (!divides(nn, dim))
        fail(Errc::NonIntegralMultiplicity,
             "corner dimension " + dim.get_str() + " is not divisible by n_i n_j = " +
                 nn.get_str());
      res.multiplicities.at(j, i) = dim / nn;
    }
  return res;
}

inline IntMatrix oracle_multiplicities(const GroupAction& act, long max_dim = 5000) {
  return oracle_check(act, max_dim).multiplicities;
}

}  // namespace cgk
