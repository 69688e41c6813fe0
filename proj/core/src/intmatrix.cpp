#include "linkform/intmatrix.hpp"

#include <algorithm>
#include <utility>

namespace linkform {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InvalidInput("IntMatrix: ragged initializer");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMatrix::is_symmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("IntMatrix multiply: shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = -a.at(i, j);
  return c;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  if (v.size() != cols_) throw InvalidInput("IntMatrix apply: shape mismatch");
  std::vector<Int> out(rows_, Int(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

RatMatrix::RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = Rat(m.at(i, j));
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("RatMatrix multiply: shape mismatch");
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) c.at(i, j).canonicalize();
  return c;
}

Int determinant(const IntMatrix& m) {
  if (!m.square()) throw InvalidInput("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

namespace {

// Elementary transforms applied consistently to the work matrix and the
// accumulated unimodular factors: A = U0 * M * V0 throughout.
struct SnfWork {
  IntMatrix a, u, v;

  void row_swap(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    u.swap_rows(i, j);
  }
  void col_swap(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    v.swap_cols(i, j);
  }
  // row i -= q * row j
  void row_sub(std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t k = 0; k < a.cols(); ++k) a.at(i, k) -= q * a.at(j, k);
    for (std::size_t k = 0; k < u.cols(); ++k) u.at(i, k) -= q * u.at(j, k);
  }
  // col i -= q * col j
  void col_sub(std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t k = 0; k < a.rows(); ++k) a.at(k, i) -= q * a.at(k, j);
    for (std::size_t k = 0; k < v.rows(); ++k) v.at(k, i) -= q * v.at(k, j);
  }
  void row_negate(std::size_t i) {
    for (std::size_t k = 0; k < a.cols(); ++k) a.at(i, k) = -a.at(i, k);
    for (std::size_t k = 0; k < u.cols(); ++k) u.at(i, k) = -u.at(i, k);
  }
};

// Nearest-integer quotient: |a - q*b| <= |b|/2.  Keeps the SNF entries from
// swelling the way truncated quotients do.
Int rounded_quotient(const Int& a, const Int& b) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (2 * r > abs(b)) q += (b > 0 ? 1 : -1);
  return q;
}

}  // namespace

SnfDecomposition smith_normal_form(const IntMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  SnfWork w{m, IntMatrix::identity(r), IntMatrix::identity(c)};
  const std::size_t t_end = std::min(r, c);
  for (std::size_t t = 0; t < t_end; ++t) {
    bool block_empty = false;
    for (;;) {
      // Re-locate a minimal-magnitude nonzero pivot in the remaining block on
      // every pass; together with nearest-integer quotients this keeps the
      // intermediate entries small.
      std::size_t pi = t, pj = t;
      bool found = false;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (w.a.at(i, j) != 0 &&
              (!found || abs(w.a.at(i, j)) < abs(w.a.at(pi, pj)))) {
            pi = i; pj = j; found = true;
          }
      if (!found) { block_empty = true; break; }
      w.row_swap(t, pi);
      w.col_swap(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (w.a.at(i, t) == 0) continue;
        w.row_sub(i, t, rounded_quotient(w.a.at(i, t), w.a.at(t, t)));
        if (w.a.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (w.a.at(t, j) == 0) continue;
        w.col_sub(j, t, rounded_quotient(w.a.at(t, j), w.a.at(t, t)));
        if (w.a.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Pivot must divide the rest of the block for the divisibility chain.
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c && divides; ++j)
          if (w.a.at(i, j) % w.a.at(t, t) != 0) {
            w.row_sub(t, i, Int(-1));  // fold row i into the pivot row
            divides = false;
          }
      if (divides) break;
    }
    if (block_empty) break;
    if (w.a.at(t, t) < 0) w.row_negate(t);
  }
  return {std::move(w.a), std::move(w.u), std::move(w.v)};
}

RatMatrix rational_inverse(const IntMatrix& m) {
  if (!m.square()) throw InvalidInput("rational_inverse: matrix not square");
  const std::size_t n = m.rows();
  RatMatrix a(m);
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a.at(piv, k) == 0) ++piv;
    if (piv == n) throw SingularMatrix("rational_inverse: singular matrix");
    if (piv != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(k, j), a.at(piv, j));
        std::swap(inv.at(k, j), inv.at(piv, j));
      }
    Rat d = a.at(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a.at(k, j) /= d;
      inv.at(k, j) /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a.at(i, k) == 0) continue;
      Rat f = a.at(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(k, j);
        inv.at(i, j) -= f * inv.at(k, j);
      }
    }
  }
  return inv;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  RatMatrix r = rational_inverse(m);
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rat& e = r.at(i, j);
      if (e.get_den() != 1)
        throw InvalidInput("unimodular_inverse: matrix is not unimodular");
      out.at(i, j) = e.get_num();
    }
  return out;
}

Definiteness definiteness(const IntMatrix& m) {
  if (!m.square() || !m.is_symmetric())
    throw InvalidInput("definiteness: matrix not square symmetric");
  const std::size_t n = m.rows();
  if (n == 0) return Definiteness::PositiveDefinite;
  std::vector<Int> minors(n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead.at(i, j) = m.at(i, j);
    minors[k - 1] = determinant(lead);
  }
  if (minors[n - 1] == 0) return Definiteness::Degenerate;
  bool pos = true, neg = true;
  for (std::size_t k = 1; k <= n; ++k) {
    if (minors[k - 1] <= 0) pos = false;
    // Negative definite: minors alternate starting negative.
    if (k % 2 == 1 ? minors[k - 1] >= 0 : minors[k - 1] <= 0) neg = false;
  }
  if (pos) return Definiteness::PositiveDefinite;
  if (neg) return Definiteness::NegativeDefinite;
  return Definiteness::Indefinite;
}

namespace {

struct Mod2System {
  std::size_t n;
  std::vector<std::vector<int>> rows;  // reduced row-echelon of A mod 2
  std::vector<int> rhs;                // reduced right-hand side (may be empty)
  std::vector<std::size_t> pivot_col;  // pivot column per reduced row
};

Mod2System reduce_mod2(const IntMatrix& a, const std::vector<Int>* b) {
  if (!a.square()) throw InvalidInput("solve_mod2: matrix not square");
  const std::size_t n = a.rows();
  if (b && b->size() != n) throw InvalidInput("solve_mod2: rhs size mismatch");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  std::vector<int> rhs(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      rows[i][j] = mpz_odd_p(a.at(i, j).get_mpz_t()) ? 1 : 0;
    if (b) rhs[i] = mpz_odd_p((*b)[i].get_mpz_t()) ? 1 : 0;
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < n; ++col) {
    std::size_t piv = r;
    while (piv < n && rows[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(rows[r], rows[piv]);
    std::swap(rhs[r], rhs[piv]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || rows[i][col] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) rows[i][j] ^= rows[r][j];
      rhs[i] ^= rhs[r];
    }
    pivots.push_back(col);
    ++r;
  }
  return {n, std::move(rows), std::move(rhs), std::move(pivots)};
}

}  // namespace

std::vector<int> solve_mod2(const IntMatrix& a, const std::vector<Int>& b) {
  Mod2System sys = reduce_mod2(a, &b);
  const std::size_t rank = sys.pivot_col.size();
  for (std::size_t i = rank; i < sys.n; ++i)
    if (sys.rhs[i] != 0) throw SingularMatrix("solve_mod2: no solution");
  std::vector<int> x(sys.n, 0);
  for (std::size_t i = 0; i < rank; ++i) x[sys.pivot_col[i]] = sys.rhs[i];
  return x;
}

std::vector<std::vector<int>> mod2_kernel_basis(const IntMatrix& a) {
  Mod2System sys = reduce_mod2(a, nullptr);
  std::vector<bool> is_pivot(sys.n, false);
  for (std::size_t c : sys.pivot_col) is_pivot[c] = true;
  std::vector<std::vector<int>> basis;
  for (std::size_t free = 0; free < sys.n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<int> v(sys.n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < sys.pivot_col.size(); ++i)
      v[sys.pivot_col[i]] = sys.rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

IntMatrix hermite_row_basis(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    for (;;) {
      std::size_t piv = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (a.at(i, col) != 0 && (piv == rows || abs(a.at(i, col)) < abs(a.at(piv, col))))
          piv = i;
      if (piv == rows) break;
      a.swap_rows(r, piv);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a.at(i, col) == 0) continue;
        Int q = a.at(i, col) / a.at(r, col);
        for (std::size_t j = 0; j < cols; ++j) a.at(i, j) -= q * a.at(r, j);
        if (a.at(i, col) != 0) clean = false;
      }
      if (clean) {
        if (a.at(r, col) < 0)
          for (std::size_t j = 0; j < cols; ++j) a.at(r, j) = -a.at(r, j);
        // Reduce entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < r; ++i) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), a.at(i, col).get_mpz_t(), a.at(r, col).get_mpz_t());
          if (q != 0)
            for (std::size_t j = 0; j < cols; ++j) a.at(i, j) -= q * a.at(r, j);
        }
        ++r;
        break;
      }
    }
  }
  IntMatrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = a.at(i, j);
  return out;
}

}  // namespace linkform
