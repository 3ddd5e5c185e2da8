#pragma once

#include <set>
#include <string>
#include <vector>

#include "cgk/chartab.hpp"
#include "cgk/graph.hpp"
#include "cgk/matrix.hpp"

namespace cgk {

/// K-theory of a graph algebra: K0 as free rank plus invariant factors,
/// K1 as a free rank (always torsion-free, being the kernel of an integer
/// matrix).
struct KTheory {
  long k0_free_rank = 0;
  std::vector<BigInt> k0_torsion;  // invariant factors > 1
  long k1_rank = 0;

  friend bool operator==(const KTheory& a, const KTheory& b) {
    return a.k0_free_rank == b.k0_free_rank && a.k0_torsion == b.k0_torsion &&
           a.k1_rank == b.k1_rank;
  }

  std::string to_string() const {
    std::string s = "K0 = ";
    bool first = true;
    if (k0_free_rank > 0) {
      s += k0_free_rank == 1 ? "Z" : "Z^" + std::to_string(k0_free_rank);
      first = false;
    }
    for (const auto& d : k0_torsion) {
      if (!first) s += " + ";
      s += "Z/" + d.get_str();
      first = false;
    }
    if (first) s += "0";
    s += ", K1 = ";
    s += k1_rank == 0 ? "0" : (k1_rank == 1 ? "Z" : "Z^" + std::to_string(k1_rank));
    return s;
  }
};

/// Vertex matrix: A[x][w] = number of edges with source x and range w.
inline IntMatrix vertex_matrix(const Graph& E) {
  IntMatrix A(E.vertex_count(), E.vertex_count());
  for (const Edge& e : E.edges) A.at(e.src, e.rng) += 1;
  return A;
}

/// K-theory of C*(E) for a finite graph E. Receiving vertices are the regular
/// side: with A the vertex matrix and V_rg the set of vertices receiving at
/// least one edge, K0 = coker and K1 = ker of the |E^0| x |V_rg| matrix
/// (delta_{x,w} - A[x][w]).
inline KTheory graph_k_theory(const Graph& E) {
  IntMatrix A = vertex_matrix(E);
  long n = E.vertex_count();
  std::vector<long> receivers;
  for (long w = 0; w < n; ++w) {
    bool recv = false;
    for (long x = 0; x < n; ++x)
      if (A.at(x, w) != 0) {
        recv = true;
        break;
      }
    if (recv) receivers.push_back(w);
  }
  IntMatrix M(n, static_cast<long>(receivers.size()));
  for (long x = 0; x < n; ++x)
    for (std::size_t c = 0; c < receivers.size(); ++c) {
      long w = receivers[c];
      M.at(x, static_cast<long>(c)) = (x == w ? BigInt(1) : BigInt(0)) - A.at(x, w);
    }
  CokerKer ck = coker_ker(M);
  KTheory k;
  k.k0_free_rank = ck.coker_free_rank;
  k.k0_torsion = ck.coker_torsion;
  k.k1_rank = ck.ker_rank;
  return k;
}

/// Graph on the irreducibles of G with B(v,w) edges from v to w, B the
/// Doplicher-Roberts matrix of rho; its K-theory is the K-theory of the
/// Doplicher-Roberts algebra (a full corner preserves K-theory).
inline Graph dr_graph(const IntMatrix& B) {
  Graph g;
  for (long v = 0; v < B.rows(); ++v) g.vertices.push_back("irr" + std::to_string(v));
  for (long v = 0; v < B.rows(); ++v)
    for (long w = 0; w < B.cols(); ++w) {
      long m = to_long(B.at(v, w));
      for (long t = 0; t < m; ++t)
        g.edges.push_back({"d" + std::to_string(v) + "_" + std::to_string(w) + "_" +
                               std::to_string(t),
                           static_cast<int>(v), static_cast<int>(w)});
    }
  return g;
}

inline KTheory dr_k_theory(const PermGroup& G, const ClassFunction& rho) {
  return graph_k_theory(dr_graph(dr_matrix(G, rho)));
}

namespace detail {

// cycles with no exit live in the functional subgraph of out-degree-1 vertices
inline bool has_cycle_without_exit(const Graph& E) {
  long n = E.vertex_count();
  std::vector<int> out_deg(n, 0), unique_next(n, -1);
  for (const Edge& e : E.edges) {
    out_deg[e.src]++;
    unique_next[e.src] = e.rng;
  }
  std::vector<int> state(n, 0);  // 0 unvisited, 1 on path, 2 done
  for (long v = 0; v < n; ++v) {
    if (state[v] != 0 || out_deg[v] != 1) continue;
    long cur = v;
    std::vector<long> path;
    while (cur >= 0 && state[cur] == 0 && out_deg[cur] == 1) {
      state[cur] = 1;
      path.push_back(cur);
      cur = unique_next[cur];
    }
    if (cur >= 0 && state[cur] == 1) return true;  // closed a cycle of out-degree-1 vertices
    for (long p : path) state[p] = 2;
  }
  return false;
}

inline bool has_cycle(const Graph& E) {
  long n = E.vertex_count();
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : E.edges) adj[e.src].push_back(e.rng);
  std::vector<int> state(n, 0);
  std::vector<std::pair<long, std::size_t>> stack;
  for (long s = 0; s < n; ++s) {
    if (state[s] != 0) continue;
    stack.push_back({s, 0});
    state[s] = 1;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i < adj[v].size()) {
        int w = adj[v][i++];
        if (state[w] == 1) return true;
        if (state[w] == 0) {
          state[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

// smallest hereditary saturated set containing the seed
inline std::set<long> hereditary_saturated_closure(const Graph& E, long seed) {
  long n = E.vertex_count();
  std::set<long> H{seed};
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Edge& e : E.edges)  // hereditary: r(e) in H forces s(e) in H
      if (H.count(e.rng) && !H.count(e.src)) {
        H.insert(e.src);
        changed = true;
      }
    for (long v = 0; v < n; ++v) {  // saturated: regular v with all feeders in H
      if (H.count(v)) continue;
      bool regular = false, all_in = true;
      for (const Edge& e : E.edges)
        if (e.rng == v) {
          regular = true;
          if (!H.count(e.src)) {
            all_in = false;
            break;
          }
        }
      if (regular && all_in) {
        H.insert(v);
        changed = true;
      }
    }
  }
  return H;
}

}  // namespace detail

struct GraphAlgebraProps {
  bool simple = false;
  bool purely_infinite = false;
};

/// Simplicity (condition L plus trivial hereditary saturated sets) and pure
/// infiniteness (simple plus a cycle) of the algebra of a finite graph.
inline GraphAlgebraProps graph_algebra_props(const Graph& E) {
  GraphAlgebraProps p;
  long n = E.vertex_count();
  bool condition_l = !detail::has_cycle_without_exit(E);
  bool only_trivial = true;
  for (long v = 0; v < n && only_trivial; ++v)
    if (static_cast<long>(detail::hereditary_saturated_closure(E, v).size()) != n)
      only_trivial = false;
  p.simple = n > 0 && condition_l && only_trivial;
  p.purely_infinite = p.simple && detail::has_cycle(E);
  return p;
}

/// Stationary inductive system (Z^k, B).
struct DimGroupPresentation {
  long k = 0;
  IntMatrix B;
  long stable_rank = 0;  // rank of B^k over the rationals
};

inline DimGroupPresentation dim_group(const IntMatrix& B) {
  if (B.rows() != B.cols()) throw std::invalid_argument("dim_group: matrix not square");
  for (long i = 0; i < B.rows(); ++i)
    for (long j = 0; j < B.cols(); ++j)
      if (B.at(i, j) < 0) fail(Errc::NegativeEntries, "dim_group: negative entry");
  DimGroupPresentation p;
  p.k = B.rows();
  p.B = B;
  p.stable_rank = rank_rational(B.pow(p.k));
  return p;
}

struct LimitElement {
  std::vector<BigInt> vector;
  long stage = 0;
};

/// Decidable equality in the stationary limit: lift both elements to the
/// common stage and test whether B^k kills the difference (the kernel chain
/// of an integer matrix stabilizes within k steps).
inline bool limit_equal(const DimGroupPresentation& p, const LimitElement& x,
                        const LimitElement& y) {
  if (static_cast<long>(x.vector.size()) != p.k || static_cast<long>(y.vector.size()) != p.k)
    throw std::invalid_argument("limit_equal: vector size mismatch");
  if (x.stage < 0 || y.stage < 0) throw std::invalid_argument("limit_equal: negative stage");
  auto apply_pow = [&](std::vector<BigInt> v, long e) {
    IntMatrix P = p.B.pow(e);
    std::vector<BigInt> r(p.k, BigInt(0));
    for (long i = 0; i < p.k; ++i)
      for (long j = 0; j < p.k; ++j) r[i] += P.at(i, j) * v[j];
    return r;
  };
  long top = std::max(x.stage, y.stage);
  auto xv = apply_pow(x.vector, top - x.stage);
  auto yv = apply_pow(y.vector, top - y.stage);
  std::vector<BigInt> diff(p.k);
  for (long i = 0; i < p.k; ++i) diff[i] = xv[i] - yv[i];
  auto killed = apply_pow(diff, p.k);
  for (const auto& v : killed)
    if (v != 0) return false;
  return true;
}

}  // namespace cgk
