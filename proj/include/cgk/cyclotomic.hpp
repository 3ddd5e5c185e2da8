#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "cgk/bigint.hpp"
#include "cgk/errors.hpp"

namespace cgk {

// Dense integer polynomial, coeffs[i] is the coefficient of x^i.
using Poly = std::vector<BigInt>;

namespace polyops {

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline long degree(const Poly& p) { return static_cast<long>(p.size()) - 1; }

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Division by a monic divisor; exact over the integers.
inline std::pair<Poly, Poly> divrem_monic(Poly n, const Poly& d) {
  if (d.empty() || d.back() != 1) throw std::logic_error("divrem_monic: divisor not monic");
  trim(n);
  long dd = degree(d);
  if (degree(n) < dd) return {Poly{}, n};
  Poly q(n.size() - d.size() + 1, BigInt(0));
  for (long i = degree(n); i >= dd; --i) {
    BigInt c = n[i];
    if (c == 0) continue;
    q[i - dd] = c;
    for (long j = 0; j <= dd; ++j) n[i - dd + j] -= c * d[j];
  }
  trim(n);
  return {q, n};
}

}  // namespace polyops

inline long totient(long m) {
  if (m < 1) throw std::invalid_argument("totient: m must be positive");
  long result = m, n = m;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

/// The m-th cyclotomic polynomial, computed by dividing x^m - 1 by the
/// cyclotomic polynomials of all proper divisors of m.
inline Poly cyclotomic_poly(long m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_poly: m must be positive");
  std::vector<long> divs;
  for (long d = 1; d <= m; ++d)
    if (m % d == 0) divs.push_back(d);
  std::vector<Poly> phi;  // aligned with divs
  for (std::size_t k = 0; k < divs.size(); ++k) {
    long d = divs[k];
    Poly f(static_cast<std::size_t>(d) + 1, BigInt(0));
    f[0] = -1;
    f[static_cast<std::size_t>(d)] = 1;  // x^d - 1
    for (std::size_t j = 0; j < k; ++j) {
      if (d % divs[j] != 0) continue;
      auto [q, r] = polyops::divrem_monic(f, phi[j]);
      if (!r.empty()) throw std::logic_error("cyclotomic_poly: non-exact division");
      f = q;
    }
    phi.push_back(f);
  }
  return phi.back();
}

/// Exact element of the cyclotomic integer ring Z[zeta_m], stored on the
/// power basis 1, zeta, ..., zeta^{phi(m)-1} reduced modulo the m-th
/// cyclotomic polynomial. Values with different moduli combine by lifting
/// to Z[zeta_lcm].
class Cyc {
 public:
  Cyc() : m_(1), c_(1, BigInt(0)) {}
  explicit Cyc(BigInt n) : m_(1), c_{std::move(n)} {}
  explicit Cyc(long n) : Cyc(BigInt(n)) {}

  Cyc(long m, Poly coeffs) : m_(m) {
    if (m < 1) throw std::invalid_argument("Cyc: modulus must be positive");
    c_ = reduce(std::move(coeffs), m);
  }

  static Cyc zeta(long m, long power = 1) {
    long k = ((power % m) + m) % m;
    Poly p(static_cast<std::size_t>(k) + 1, BigInt(0));
    p[static_cast<std::size_t>(k)] = 1;
    return Cyc(m, std::move(p));
  }

  long modulus() const { return m_; }
  const std::vector<BigInt>& coeffs() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const BigInt& v) { return v == 0; });
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  /// Throws NotRational unless every non-constant coefficient vanishes.
  BigInt to_integer() const {
    if (!is_rational()) fail(Errc::NotRational, "cyclotomic value is not a rational integer");
    return c_[0];
  }

  Cyc lifted(long target) const {
    if (target == m_) return *this;
    if (target % m_ != 0) throw std::logic_error("Cyc::lifted: modulus does not divide target");
    long step = target / m_;
    Poly p;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      std::size_t pos = k * static_cast<std::size_t>(step);
      if (p.size() <= pos) p.resize(pos + 1, BigInt(0));
      p[pos] = c_[k];
    }
    return Cyc(target, std::move(p));
  }

  /// Image under complex conjugation zeta_m -> zeta_m^{m-1}.
  Cyc conj() const {
    Poly p;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      std::size_t pos = (k * static_cast<std::size_t>(m_ - 1)) % static_cast<std::size_t>(m_);
      if (m_ == 1) pos = 0;
      if (p.size() <= pos) p.resize(pos + 1, BigInt(0));
      p[pos] += c_[k];
    }
    return Cyc(m_, std::move(p));
  }

  Cyc operator-() const {
    Cyc r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend Cyc operator+(const Cyc& a, const Cyc& b) {
    long L = std::lcm(a.m_, b.m_);
    Cyc x = a.lifted(L), y = b.lifted(L);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
  }

  friend Cyc operator-(const Cyc& a, const Cyc& b) { return a + (-b); }

  friend Cyc operator*(const Cyc& a, const Cyc& b) {
    long L = std::lcm(a.m_, b.m_);
    Cyc x = a.lifted(L), y = b.lifted(L);
    Poly p = polyops::mul(x.c_, y.c_);
    return Cyc(L, std::move(p));
  }

  friend bool operator==(const Cyc& a, const Cyc& b) {
    long L = std::lcm(a.m_, b.m_);
    return a.lifted(L).c_ == b.lifted(L).c_;
  }
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  /// Total order on values sharing a common cyclotomic field: lift both to
  /// the lcm modulus and compare power-basis coefficients lexicographically.
  static int compare(const Cyc& a, const Cyc& b) {
    long L = std::lcm(a.m_, b.m_);
    const auto ca = a.lifted(L).c_, cb = b.lifted(L).c_;
    for (std::size_t i = 0; i < ca.size(); ++i) {
      if (ca[i] < cb[i]) return -1;
      if (ca[i] > cb[i]) return 1;
    }
    return 0;
  }

  std::string to_string() const {
    if (is_rational()) return c_[0].get_str();
    std::string s;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      if (!first) s += c_[k] > 0 ? " + " : " - ";
      else if (c_[k] < 0) s += "-";
      BigInt a = abs(c_[k]);
      if (k == 0) s += a.get_str();
      else {
        if (a != 1) s += a.get_str() + "*";
        s += "z" + std::to_string(m_);
        if (k > 1) s += "^" + std::to_string(k);
      }
      first = false;
    }
    if (first) s = "0";
    return s;
  }

 private:
  static Poly reduce(Poly p, long m) {
    Poly phi = cyclotomic_poly(m);
    auto [q, r] = polyops::divrem_monic(std::move(p), phi);
    (void)q;
    r.resize(static_cast<std::size_t>(totient(m)), BigInt(0));
    return r;
  }

  long m_;
  Poly c_;  // length totient(m_)
};

/// Cyclotomic number with an integer denominator, used where division by a
/// group order appears before the final integral answer (central idempotents,
/// corner traces). Kept normalized: den > 0 and gcd(content(num), den) = 1.
struct CycRat {
  Cyc num;
  BigInt den{1};

  CycRat() = default;
  explicit CycRat(Cyc n, BigInt d = BigInt(1)) : num(std::move(n)), den(std::move(d)) {
    normalize();
  }
  static CycRat integer(BigInt n) { return CycRat(Cyc(std::move(n))); }

  void normalize() {
    if (den == 0) throw std::logic_error("CycRat: zero denominator");
    if (den < 0) {
      den = -den;
      num = -num;
    }
    if (num.is_zero()) {
      num = Cyc();
      den = 1;
      return;
    }
    BigInt g = den;
    for (const auto& c : num.coeffs()) g = big_gcd(g, c);
    if (g > 1) {
      Poly p = num.coeffs();
      for (auto& c : p) c = div_exact(c, g);
      num = Cyc(num.modulus(), std::move(p));
      den = div_exact(den, g);
    }
  }

  bool is_zero() const { return num.is_zero(); }

  CycRat conj() const {
    CycRat r;
    r.num = num.conj();
    r.den = den;
    return r;
  }

  CycRat operator-() const {
    CycRat r;
    r.num = -num;
    r.den = den;
    return r;
  }

  friend CycRat operator+(const CycRat& a, const CycRat& b) {
    return CycRat(a.num * Cyc(b.den) + b.num * Cyc(a.den), a.den * b.den);
  }
  friend CycRat operator-(const CycRat& a, const CycRat& b) { return a + (-b); }
  friend CycRat operator*(const CycRat& a, const CycRat& b) {
    return CycRat(a.num * b.num, a.den * b.den);
  }
  CycRat& operator+=(const CycRat& o) { return *this = *this + o; }

  friend bool operator==(const CycRat& a, const CycRat& b) {
    return a.den == b.den && a.num == b.num;
  }
  friend bool operator!=(const CycRat& a, const CycRat& b) { return !(a == b); }

  bool is_integer() const { return den == 1 && num.is_rational(); }

  BigInt to_integer() const {
    if (den != 1) fail(Errc::NotRational, "value has a nontrivial denominator");
    return num.to_integer();
  }
};

}  // namespace cgk
