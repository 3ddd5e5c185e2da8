#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "cgk/cyclotomic.hpp"
#include "cgk/group.hpp"
#include "cgk/matrix.hpp"

namespace cgk {

/// Function constant on the conjugacy classes of a subgroup, with exact
/// cyclotomic values.
struct ClassFunction {
  Subgroup domain;
  ConjClasses classes;
  std::vector<Cyc> values;  // one per class

  const Cyc& at_class(int k) const { return values.at(k); }
  const Cyc& at_element(int parent_idx) const {
    return values.at(classes.class_of_element(parent_idx));
  }
};

struct CharTable {
  Subgroup domain;
  ConjClasses classes;
  std::vector<ClassFunction> irreducibles;  // canonical order: trivial first,
                                            // then by (degree, lex values)
  std::vector<long> degrees;
};

namespace detail {

// ---- arithmetic mod a word-size prime -------------------------------------

using u64 = std::uint64_t;

struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b % p) % p; }
  u64 mul(u64 a, u64 b) const {
    return static_cast<u64>((static_cast<__uint128_t>(a) * b) % p);
  }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1 % p;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a % p, p - 2); }
  u64 neg(u64 a) const { return a % p == 0 ? 0 : p - a % p; }
};

inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  Fp f{n};
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = f.pow(a, d);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = f.mul(x, x);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

/// skip-th prime p = k*e + 1 with p > min (Dixon: e = exponent, min = 2|G|^2).
inline u64 dixon_prime(u64 e, u64 min, int skip) {
  u64 k = min / e + 1;
  for (;;) {
    u64 p = k * e + 1;
    if (p > min && is_prime_u64(p)) {
      if (skip == 0) return p;
      --skip;
    }
    ++k;
  }
}

inline std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> fs;
  for (u64 p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      fs.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) fs.push_back(n);
  return fs;
}

/// Deterministic search for an element of exact multiplicative order e.
inline u64 root_of_unity(const Fp& f, u64 e) {
  auto qs = prime_factors(e);
  for (u64 x = 2; x < f.p; ++x) {
    u64 z = f.pow(x, (f.p - 1) / e);
    bool ok = z != 0;
    for (u64 q : qs)
      if (f.pow(z, e / q) == 1) {
        ok = false;
        break;
      }
    if (ok) return z;
  }
  throw std::logic_error("root_of_unity: no element of requested order");
}

struct SplitFail {};  // internal: retry with the next prime

// ---- dense polynomials over F_p --------------------------------------------

using FpPoly = std::vector<u64>;  // coeff of x^i

inline void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline FpPoly fp_mul(const Fp& f, const FpPoly& a, const FpPoly& b) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  fp_trim(r);
  return r;
}

inline FpPoly fp_mod(const Fp& f, FpPoly a, const FpPoly& m) {
  fp_trim(a);
  while (a.size() >= m.size()) {
    u64 c = f.mul(a.back(), f.inv(m.back()));
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = f.sub(a[shift + i], f.mul(c, m[i]));
    fp_trim(a);
  }
  return a;
}

inline FpPoly fp_divexact(const Fp& f, FpPoly a, const FpPoly& d) {
  fp_trim(a);
  FpPoly q(a.size() >= d.size() ? a.size() - d.size() + 1 : 0, 0);
  u64 lead_inv = f.inv(d.back());
  while (a.size() >= d.size()) {
    u64 c = f.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - d.size();
    q[shift] = c;
    for (std::size_t i = 0; i < d.size(); ++i)
      a[shift + i] = f.sub(a[shift + i], f.mul(c, d[i]));
    fp_trim(a);
  }
  if (!a.empty()) throw std::logic_error("fp_divexact: remainder");
  return q;
}

inline FpPoly fp_gcd(const Fp& f, FpPoly a, FpPoly b) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    a = fp_mod(f, a, b);
    std::swap(a, b);
  }
  if (!a.empty()) {
    u64 inv = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, inv);
  }
  return a;
}

inline FpPoly fp_powmod(const Fp& f, FpPoly base, u64 e, const FpPoly& m) {
  FpPoly r{1};
  base = fp_mod(f, std::move(base), m);
  while (e) {
    if (e & 1) r = fp_mod(f, fp_mul(f, r, base), m);
    base = fp_mod(f, fp_mul(f, base, base), m);
    e >>= 1;
  }
  return r;
}

struct XorShift {
  u64 s;
  u64 next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
};

/// Distinct roots of a monic polynomial that splits into linear factors over
/// F_p (eigenvalues of class matrices always do).
inline void fp_roots(const Fp& f, FpPoly poly, XorShift& rng, std::vector<u64>& out) {
  fp_trim(poly);
  if (poly.size() <= 1) return;
  {  // normalize monic
    u64 inv = f.inv(poly.back());
    for (auto& c : poly) c = f.mul(c, inv);
  }
  if (poly.size() == 2) {
    out.push_back(f.neg(poly[0]));
    return;
  }
  for (int attempt = 0; attempt < 200; ++attempt) {
    u64 a = rng.next() % f.p;
    FpPoly shifted{a, 1};  // x + a
    FpPoly g = fp_powmod(f, shifted, (f.p - 1) / 2, poly);
    if (g.empty()) g = {0};
    g[0] = f.sub(g[0], 1);
    FpPoly d = fp_gcd(f, g, poly);
    if (d.size() > 1 && d.size() < poly.size()) {
      FpPoly q = fp_divexact(f, poly, d);
      fp_roots(f, d, rng, out);
      fp_roots(f, q, rng, out);
      return;
    }
  }
  throw SplitFail{};
}

inline FpPoly fp_derivative(const Fp& f, const FpPoly& a) {
  FpPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(f.mul(a[i], i % f.p));
  fp_trim(d);
  return d;
}

// ---- linear algebra over F_p ------------------------------------------------

using FpMat = std::vector<std::vector<u64>>;  // list of row vectors

/// In-place reduced row echelon form; returns pivot column per row.
inline std::vector<std::size_t> fp_rref(const Fp& f, FpMat& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  std::size_t ncols = m.empty() ? 0 : m[0].size();
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    u64 inv = f.inv(m[row][col]);
    for (auto& v : m[row]) v = f.mul(v, inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      u64 c = m[i][col];
      for (std::size_t j = 0; j < ncols; ++j)
        m[i][j] = f.sub(m[i][j], f.mul(c, m[row][j]));
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

/// Basis of the kernel of a square matrix over F_p.
inline FpMat fp_kernel(const Fp& f, FpMat a) {
  std::size_t n = a.empty() ? 0 : a[0].size();
  auto pivots = fp_rref(f, a);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  FpMat basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = f.neg(a[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline u64 fp_det(const Fp& f, FpMat m) {
  std::size_t n = m.size();
  u64 det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = f.neg(det);
    }
    det = f.mul(det, m[col][col]);
    u64 inv = f.inv(m[col][col]);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m[i][col] == 0) continue;
      u64 c = f.mul(m[i][col], inv);
      for (std::size_t j = col; j < n; ++j)
        m[i][j] = f.sub(m[i][j], f.mul(c, m[col][j]));
    }
  }
  return det;
}

/// Characteristic polynomial det(xI - A) by evaluation at 0..k and Lagrange
/// interpolation; k is small here so this is the simplest exact route.
inline FpPoly fp_charpoly(const Fp& f, const FpMat& a) {
  std::size_t k = a.size();
  std::vector<u64> xs(k + 1), ys(k + 1);
  for (std::size_t t = 0; t <= k; ++t) {
    xs[t] = t % f.p;
    FpMat m(k, std::vector<u64>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        m[i][j] = i == j ? f.sub(xs[t], a[i][j]) : f.neg(a[i][j]);
    ys[t] = fp_det(f, m);
  }
  FpPoly acc;  // Lagrange sum
  for (std::size_t t = 0; t <= k; ++t) {
    FpPoly term{1};
    u64 denom = 1;
    for (std::size_t s = 0; s <= k; ++s) {
      if (s == t) continue;
      term = fp_mul(f, term, FpPoly{f.neg(xs[s]), 1});
      denom = f.mul(denom, f.sub(xs[t], xs[s]));
    }
    u64 c = f.mul(ys[t], f.inv(denom));
    if (acc.size() < term.size()) acc.resize(term.size(), 0);
    for (std::size_t i = 0; i < term.size(); ++i)
      acc[i] = f.add(acc[i], f.mul(c, term[i]));
  }
  fp_trim(acc);
  return acc;
}

}  // namespace detail

// ---- character table construction -------------------------------------------

namespace detail {

struct DixonContext {
  const PermGroup* G;
  Subgroup H;
  ConjClasses cc;
  std::size_t r;        // number of classes
  u64 n;                // |H|
  long exponent;
  std::vector<int> inv_class;  // class of inverse elements

  // class matrix M_i with (M_i)[j][k] = #{a in C_i : class(a^-1 z_k) = j}
  FpMat class_matrix(const Fp& f, std::size_t i) const {
    FpMat m(r, std::vector<u64>(r, 0));
    for (int a : cc.members[i]) {
      int ia = G->inverse(a);
      for (std::size_t k = 0; k < r; ++k) {
        int b = G->mult(ia, cc.reps[k]);
        int j = cc.class_of_element(b);
        m[j][k] = f.add(m[j][k], 1);
      }
    }
    return m;
  }
};

/// One Dixon pass modulo p: split the common eigenvectors of the class
/// matrices, normalize to character values mod p, and recover degrees.
inline std::vector<std::pair<long, std::vector<u64>>> dixon_mod_p(const DixonContext& ctx,
                                                                  const Fp& f) {
  const std::size_t r = ctx.r;
  XorShift rng{f.p ^ 0x9e3779b97f4a7c15ull};

  std::vector<FpMat> subspaces;
  {
    FpMat whole(r, std::vector<u64>(r, 0));
    for (std::size_t i = 0; i < r; ++i) whole[i][i] = 1;
    subspaces.push_back(std::move(whole));
  }
  for (std::size_t i = 1; i < r; ++i) {
    bool all_split = std::all_of(subspaces.begin(), subspaces.end(),
                                 [](const FpMat& s) { return s.size() == 1; });
    if (all_split) break;
    FpMat M = ctx.class_matrix(f, i);
    std::vector<FpMat> next;
    for (auto& S : subspaces) {
      std::size_t k = S.size();
      if (k == 1) {
        next.push_back(std::move(S));
        continue;
      }
      // restriction of M to the invariant subspace spanned by the RREF rows of S
      std::vector<std::size_t> pivots;
      {
        FpMat tmp = S;
        pivots = fp_rref(f, tmp);
        S = std::move(tmp);
      }
      FpMat A(k, std::vector<u64>(k, 0));
      for (std::size_t l = 0; l < k; ++l) {
        std::vector<u64> v(r, 0);
        for (std::size_t row = 0; row < r; ++row)
          for (std::size_t col = 0; col < r; ++col)
            if (S[l][col]) v[row] = f.add(v[row], f.mul(M[row][col], S[l][col]));
        std::vector<u64> coords(k);
        for (std::size_t m = 0; m < k; ++m) coords[m] = v[pivots[m]];
        // invariance check: v must equal sum coords[m] * S[m]
        for (std::size_t col = 0; col < r; ++col) {
          u64 acc = 0;
          for (std::size_t m = 0; m < k; ++m)
            if (S[m][col]) acc = f.add(acc, f.mul(coords[m], S[m][col]));
          if (acc != v[col]) throw SplitFail{};
        }
        for (std::size_t m = 0; m < k; ++m) A[m][l] = coords[m];
      }
      FpPoly cp = fp_charpoly(f, A);
      FpPoly deriv = fp_derivative(f, cp);
      FpPoly sq = deriv.empty() ? cp : fp_divexact(f, cp, fp_gcd(f, cp, deriv));
      std::vector<u64> eigs;
      fp_roots(f, sq, rng, eigs);
      std::sort(eigs.begin(), eigs.end());
      std::size_t total = 0;
      for (u64 lam : eigs) {
        FpMat shifted = A;
        for (std::size_t d = 0; d < k; ++d) shifted[d][d] = f.sub(shifted[d][d], lam);
        FpMat ker = fp_kernel(f, shifted);
        if (ker.empty()) throw SplitFail{};
        FpMat sub;
        for (const auto& kv : ker) {
          std::vector<u64> v(r, 0);
          for (std::size_t m = 0; m < k; ++m)
            if (kv[m])
              for (std::size_t col = 0; col < r; ++col)
                if (S[m][col]) v[col] = f.add(v[col], f.mul(kv[m], S[m][col]));
          sub.push_back(std::move(v));
        }
        fp_rref(f, sub);
        total += sub.size();
        next.push_back(std::move(sub));
      }
      if (total != k) throw SplitFail{};
    }
    subspaces = std::move(next);
  }
  for (const auto& S : subspaces)
    if (S.size() != 1) throw SplitFail{};

  // normalize each eigenvector to character values mod p
  std::vector<std::pair<long, std::vector<u64>>> result;
  for (const auto& S : subspaces) {
    const auto& w = S[0];
    if (w[0] == 0) throw SplitFail{};
    u64 w0inv = f.inv(w[0]);
    std::vector<u64> u(r);
    for (std::size_t j = 0; j < r; ++j) u[j] = f.mul(w[j], w0inv);
    u64 sum = 0;
    for (std::size_t j = 0; j < r; ++j) {
      u64 term = f.mul(u[j], u[ctx.inv_class[j]]);
      sum = f.add(sum, f.mul(term, f.inv(ctx.cc.sizes[j] % f.p)));
    }
    if (sum == 0) throw SplitFail{};
    u64 dsq = f.mul(ctx.n % f.p, f.inv(sum));
    long d = -1;
    for (long c = 1; static_cast<u64>(c) * c <= ctx.n; ++c)
      if (f.mul(c, c) == dsq) {
        d = c;
        break;
      }
    if (d < 0) throw SplitFail{};
    std::vector<u64> chi(r);
    for (std::size_t j = 0; j < r; ++j)
      chi[j] = f.mul(f.mul(u[j], d % f.p), f.inv(ctx.cc.sizes[j] % f.p));
    result.emplace_back(d, std::move(chi));
  }
  return result;
}

/// Lift a mod-p character to exact values in Z[zeta_n] (n the element order)
/// by counting eigenvalue multiplicities with a discrete Fourier sum.
inline std::vector<Cyc> lift_character(const DixonContext& ctx, const Fp& f, u64 omega,
                                       long degree, const std::vector<u64>& chi) {
  std::vector<Cyc> vals(ctx.r);
  for (std::size_t j = 0; j < ctx.r; ++j) {
    int rep = ctx.cc.reps[j];
    long n = ctx.G->element_order(rep);
    u64 z = f.pow(omega, static_cast<u64>(ctx.exponent / n));
    u64 zinv = f.inv(z);
    std::vector<u64> chi_pow(n);
    int g = 0;  // identity
    for (long t = 0; t < n; ++t) {
      chi_pow[t] = chi[ctx.cc.class_of_element(g)];
      g = ctx.G->mult(g, rep);
    }
    u64 ninv = f.inv(static_cast<u64>(n) % f.p);
    Poly coeffs(static_cast<std::size_t>(n), BigInt(0));
    for (long k = 0; k < n; ++k) {
      u64 acc = 0, zk = 1;
      u64 step = f.pow(zinv, static_cast<u64>(k));
      for (long t = 0; t < n; ++t) {
        acc = f.add(acc, f.mul(chi_pow[t], zk));
        zk = f.mul(zk, step);
      }
      u64 mk = f.mul(acc, ninv);
      if (mk > static_cast<u64>(degree)) throw SplitFail{};
      coeffs[static_cast<std::size_t>(k)] = BigInt(static_cast<long>(mk));
    }
    vals[j] = Cyc(n, std::move(coeffs));
  }
  return vals;
}

}  // namespace detail

/// Exact inner product (1/|H|) sum over H of a * conj(b). Throws NotRational
/// unless the result is a rational integer.
inline BigInt inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (!(a.domain == b.domain))
    throw std::invalid_argument("inner_product: class functions on different groups");
  Cyc sum;
  for (std::size_t j = 0; j < a.classes.count(); ++j)
    sum = sum + Cyc(BigInt(a.classes.sizes[j])) * a.values[j] * b.values[j].conj();
  BigInt total = sum.to_integer();
  BigInt order(static_cast<long>(a.domain.order()));
  if (!divides(order, total))
    fail(Errc::NotRational, "inner product is not a rational integer");
  return total / order;
}

inline ClassFunction trivial_character(const Subgroup& H) {
  ClassFunction cf;
  cf.domain = H;
  cf.classes = conjugacy_classes(H);
  cf.values.assign(cf.classes.count(), Cyc(BigInt(1)));
  return cf;
}

/// Irreducible character table by the Dixon-Burnside method: split the common
/// eigenvectors of the class matrices over a prime field with p = 1 mod
/// exponent and p > 2|H|^2, then lift eigenvalue multiplicities to exact
/// cyclotomic integers. The finished table is verified against exact
/// orthogonality before being returned; on any internal failure the next
/// admissible prime is tried.
inline CharTable character_table(const Subgroup& H, int max_attempts = 10) {
  detail::DixonContext ctx;
  ctx.G = H.parent;
  ctx.H = H;
  ctx.cc = conjugacy_classes(H);
  ctx.r = ctx.cc.count();
  ctx.n = H.order();
  ctx.exponent = subgroup_exponent(H);
  ctx.inv_class.resize(ctx.r);
  for (std::size_t j = 0; j < ctx.r; ++j)
    ctx.inv_class[j] = ctx.cc.class_of_element(ctx.G->inverse(ctx.cc.reps[j]));

  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    detail::Fp f{detail::dixon_prime(static_cast<detail::u64>(ctx.exponent),
                                     2 * ctx.n * ctx.n, attempt)};
    try {
      auto modp = detail::dixon_mod_p(ctx, f);
      detail::u64 omega = detail::root_of_unity(f, static_cast<detail::u64>(ctx.exponent));

      CharTable table;
      table.domain = H;
      table.classes = ctx.cc;
      for (const auto& [deg, chi] : modp) {
        ClassFunction cf;
        cf.domain = H;
        cf.classes = ctx.cc;
        cf.values = detail::lift_character(ctx, f, omega, deg, chi);
        table.irreducibles.push_back(std::move(cf));
        table.degrees.push_back(deg);
      }

      // canonical order: trivial first, then by (degree, lex values at the
      // common modulus)
      long e = ctx.exponent;
      std::vector<std::size_t> order(table.irreducibles.size());
      std::iota(order.begin(), order.end(), 0);
      auto is_trivial = [&](std::size_t i) {
        return std::all_of(table.irreducibles[i].values.begin(),
                           table.irreducibles[i].values.end(),
                           [](const Cyc& v) { return v == Cyc(BigInt(1)); });
      };
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        bool ta = is_trivial(a), tb = is_trivial(b);
        if (ta != tb) return ta;
        if (table.degrees[a] != table.degrees[b]) return table.degrees[a] < table.degrees[b];
        for (std::size_t j = 0; j < ctx.r; ++j) {
          int c = Cyc::compare(table.irreducibles[a].values[j].lifted(e),
                               table.irreducibles[b].values[j].lifted(e));
          if (c != 0) return c < 0;
        }
        return false;
      });
      CharTable sorted;
      sorted.domain = table.domain;
      sorted.classes = table.classes;
      for (std::size_t i : order) {
        sorted.irreducibles.push_back(std::move(table.irreducibles[i]));
        sorted.degrees.push_back(table.degrees[i]);
      }

      // exact certification
      BigInt degsq(0);
      for (long d : sorted.degrees) degsq += BigInt(d) * BigInt(d);
      if (degsq != BigInt(static_cast<long>(ctx.n))) throw detail::SplitFail{};
      for (std::size_t i = 0; i < sorted.irreducibles.size(); ++i)
        for (std::size_t j = i; j < sorted.irreducibles.size(); ++j) {
          BigInt ip = inner_product(sorted.irreducibles[i], sorted.irreducibles[j]);
          if (ip != (i == j ? 1 : 0)) throw detail::SplitFail{};
        }
      return sorted;
    } catch (const detail::SplitFail&) {
      continue;
    } catch (const Error& e) {
      if (e.code() == Errc::NotRational) continue;  // certification failed; retry
      throw;
    }
  }
  fail(Errc::InternalSplitFailure,
       "character table eigenspace splitting failed for all admissible primes");
}

inline CharTable character_table(const PermGroup& G, int max_attempts = 10) {
  return character_table(Subgroup::whole(G), max_attempts);
}

/// Restriction of a class function to a subgroup of its domain.
inline ClassFunction restrict_to(const ClassFunction& chi, const Subgroup& H) {
  if (H.parent != chi.domain.parent)
    throw std::invalid_argument("restrict_to: different parent groups");
  for (int m : H.members)
    if (!chi.domain.contains(m)) throw std::invalid_argument("restrict_to: not a subgroup");
  ClassFunction r;
  r.domain = H;
  r.classes = conjugacy_classes(H);
  for (int rep : r.classes.reps) r.values.push_back(chi.at_element(rep));
  return r;
}

/// Transport of a class function on H along a: the result lives on a^-1 H a
/// and takes at x the value chi(a x a^-1).
inline ClassFunction transport(const ClassFunction& chi, int a_idx) {
  const PermGroup& G = *chi.domain.parent;
  int a_inv = G.inverse(a_idx);
  Subgroup H2;
  H2.parent = &G;
  for (int h : chi.domain.members) H2.members.push_back(G.mult(G.mult(a_inv, h), a_idx));
  std::sort(H2.members.begin(), H2.members.end());
  ClassFunction r;
  r.domain = H2;
  r.classes = conjugacy_classes(H2);
  for (int rep : r.classes.reps)
    r.values.push_back(chi.at_element(G.mult(G.mult(a_idx, rep), a_inv)));
  return r;
}

/// Permutation character of an action: value at g is its fixed point count.
inline ClassFunction perm_character(const PermGroup& G, int n_points, const PointAction& apply) {
  ClassFunction cf;
  cf.domain = Subgroup::whole(G);
  cf.classes = conjugacy_classes(G);
  for (int rep : cf.classes.reps) {
    long fixed = 0;
    for (int p = 0; p < n_points; ++p)
      if (apply(rep, p) == p) ++fixed;
    cf.values.push_back(Cyc(BigInt(fixed)));
  }
  return cf;
}

inline ClassFunction class_function_product(const ClassFunction& a, const ClassFunction& b) {
  if (!(a.domain == b.domain))
    throw std::invalid_argument("class_function_product: different domains");
  ClassFunction r = a;
  for (std::size_t j = 0; j < r.values.size(); ++j) r.values[j] = a.values[j] * b.values[j];
  return r;
}

/// Doplicher-Roberts matrix over the table's irreducible order:
/// B[v][w] = multiplicity of w in v (x) rho.
inline IntMatrix dr_matrix(const CharTable& table, const ClassFunction& rho) {
  long r = static_cast<long>(table.irreducibles.size());
  IntMatrix B(r, r);
  for (long v = 0; v < r; ++v) {
    ClassFunction prod = class_function_product(table.irreducibles[v], rho);
    for (long w = 0; w < r; ++w) B.at(v, w) = inner_product(prod, table.irreducibles[w]);
  }
  return B;
}

inline IntMatrix dr_matrix(const PermGroup& G, const ClassFunction& rho) {
  return dr_matrix(character_table(G), rho);
}

}  // namespace cgk
