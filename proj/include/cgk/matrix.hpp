#pragma once

#include <string>
#include <vector>

#include "cgk/bigint.hpp"
#include "cgk/errors.hpp"

namespace cgk {

/// Rectangular matrix over the integers, row-major.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(long rows, long cols) : rows_(rows), cols_(cols), a_(rows * cols, BigInt(0)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
  }
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = static_cast<long>(rows.size());
    cols_ = rows_ ? static_cast<long>(rows.begin()->size()) : 0;
    for (const auto& r : rows) {
      if (static_cast<long>(r.size()) != cols_) throw std::invalid_argument("ragged rows");
      for (long v : r) a_.emplace_back(v);
    }
  }

  static IntMatrix identity(long n) {
    IntMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  long rows() const { return rows_; }
  long cols() const { return cols_; }

  BigInt& at(long r, long c) {
    check(r, c);
    return a_[r * cols_ + c];
  }
  const BigInt& at(long r, long c) const {
    check(r, c);
    return a_[r * cols_ + c];
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
      for (long j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    IntMatrix r(a.rows_, b.cols_);
    for (long i = 0; i < a.rows_; ++i)
      for (long k = 0; k < a.cols_; ++k) {
        const BigInt& v = a.at(i, k);
        if (v == 0) continue;
        for (long j = 0; j < b.cols_; ++j) r.at(i, j) += v * b.at(k, j);
      }
    return r;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

  IntMatrix pow(long e) const {
    if (rows_ != cols_) throw std::invalid_argument("pow: matrix not square");
    if (e < 0) throw std::invalid_argument("pow: negative exponent");
    IntMatrix r = identity(rows_), base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  std::string to_string() const {
    std::string s;
    for (long i = 0; i < rows_; ++i) {
      s += "[";
      for (long j = 0; j < cols_; ++j) {
        if (j) s += " ";
        s += at(i, j).get_str();
      }
      s += "]";
      if (i + 1 < rows_) s += "\n";
    }
    return s;
  }

 private:
  void check(long r, long c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::out_of_range("IntMatrix index out of range");
  }

  long rows_, cols_;
  std::vector<BigInt> a_;
};

/// Rank over the rationals, by fraction-free (Bareiss) elimination.
inline long rank_rational(IntMatrix m) {
  long r = 0;
  BigInt prev(1);
  for (long col = 0; col < m.cols() && r < m.rows(); ++col) {
    long piv = -1;
    for (long i = r; i < m.rows(); ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (long j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    for (long i = r + 1; i < m.rows(); ++i) {
      for (long j = col + 1; j < m.cols(); ++j)
        m.at(i, j) = div_exact(m.at(r, col) * m.at(i, j) - m.at(i, col) * m.at(r, j), prev);
      m.at(i, col) = 0;
    }
    prev = m.at(r, col);
    ++r;
  }
  return r;
}

inline BigInt det(IntMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  long n = m.rows();
  if (n == 0) return BigInt(1);
  int sign = 1;
  BigInt prev(1);
  for (long col = 0; col < n; ++col) {
    long piv = -1;
    for (long i = col; i < n; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return BigInt(0);
    if (piv != col) {
      for (long j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
      sign = -sign;
    }
    for (long i = col + 1; i < n; ++i) {
      for (long j = col + 1; j < n; ++j)
        m.at(i, j) = div_exact(m.at(col, col) * m.at(i, j) - m.at(i, col) * m.at(col, j), prev);
      m.at(i, col) = 0;
    }
    prev = m.at(col, col);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

struct SnfResult {
  std::vector<BigInt> invariant_factors;  // positive, each divides the next
  IntMatrix left;                         // U, unimodular rows x rows
  IntMatrix right;                        // V, unimodular cols x cols
};

// Smith normal form by repeated elimination around a minimal-absolute-value
// pivot. U*M*V stays invariant throughout; entries are exact BigInt so growth
// is harmless at the matrix sizes this library handles.
inline SnfResult snf(const IntMatrix& M) {
  IntMatrix A = M;
  long rows = A.rows(), cols = A.cols();
  IntMatrix U = IntMatrix::identity(rows), V = IntMatrix::identity(cols);

  auto swap_rows = [&](long a, long b) {
    if (a == b) return;
    for (long j = 0; j < cols; ++j) std::swap(A.at(a, j), A.at(b, j));
    for (long j = 0; j < rows; ++j) std::swap(U.at(a, j), U.at(b, j));
  };
  auto swap_cols = [&](long a, long b) {
    if (a == b) return;
    for (long i = 0; i < rows; ++i) std::swap(A.at(i, a), A.at(i, b));
    for (long i = 0; i < cols; ++i) std::swap(V.at(i, a), V.at(i, b));
  };
  auto add_row = [&](long dst, long src, const BigInt& f) {  // row dst += f * row src
    for (long j = 0; j < cols; ++j) A.at(dst, j) += f * A.at(src, j);
    for (long j = 0; j < rows; ++j) U.at(dst, j) += f * U.at(src, j);
  };
  auto add_col = [&](long dst, long src, const BigInt& f) {
    for (long i = 0; i < rows; ++i) A.at(i, dst) += f * A.at(i, src);
    for (long i = 0; i < cols; ++i) V.at(i, dst) += f * V.at(i, src);
  };

  long t = 0;
  long lim = std::min(rows, cols);
  while (t < lim) {
    // minimal-absolute-value nonzero entry of the trailing submatrix
    long pi = -1, pj = -1;
    for (long i = t; i < rows; ++i)
      for (long j = t; j < cols; ++j) {
        if (A.at(i, j) == 0) continue;
        if (pi < 0 || abs(A.at(i, j)) < abs(A.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing submatrix is zero
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (long i = t + 1; i < rows; ++i) {
        if (A.at(i, t) == 0) continue;
        BigInt q = A.at(i, t) / A.at(t, t);  // truncated; remainder smaller than pivot
        if (q != 0) add_row(i, t, -q);
        if (A.at(i, t) != 0) {
          swap_rows(t, i);
          clean = false;
          break;
        }
      }
      if (!clean) continue;
      for (long j = t + 1; j < cols; ++j) {
        if (A.at(t, j) == 0) continue;
        BigInt q = A.at(t, j) / A.at(t, t);
        if (q != 0) add_col(j, t, -q);
        if (A.at(t, j) != 0) {
          swap_cols(t, j);
          clean = false;
          break;
        }
      }
      if (!clean) continue;
      // pivot must divide every remaining entry for the divisibility chain
      long bi = -1, bj = -1;
      for (long i = t + 1; i < rows && bi < 0; ++i)
        for (long j = t + 1; j < cols; ++j)
          if (!divides(A.at(t, t), A.at(i, j))) {
            bi = i;
            bj = j;
            break;
          }
      if (bi < 0) break;
      add_row(t, bi, BigInt(1));
    }

    if (A.at(t, t) < 0) {
      for (long j = 0; j < cols; ++j) A.at(t, j) = -A.at(t, j);
      for (long j = 0; j < rows; ++j) U.at(t, j) = -U.at(t, j);
    }
    ++t;
  }

  SnfResult res;
  for (long i = 0; i < lim; ++i)
    if (A.at(i, i) != 0) res.invariant_factors.push_back(A.at(i, i));
  res.left = std::move(U);
  res.right = std::move(V);
  return res;
}

struct CokerKer {
  long coker_free_rank = 0;
  std::vector<BigInt> coker_torsion;  // invariant factors > 1
  long ker_rank = 0;
};

/// Cokernel and kernel data of the map Z^cols -> Z^rows given by M.
inline CokerKer coker_ker(const IntMatrix& M) {
  SnfResult s = snf(M);
  CokerKer r;
  long rank = static_cast<long>(s.invariant_factors.size());
  r.coker_free_rank = M.rows() - rank;
  for (const auto& f : s.invariant_factors)
    if (f > 1) r.coker_torsion.push_back(f);
  r.ker_rank = M.cols() - rank;
  return r;
}

}  // namespace cgk
