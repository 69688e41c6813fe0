#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "linkform/numtheory.hpp"

namespace linkform {

/// Dense row-major matrix of exact integers.  All operations are exact;
/// everything here targets small matrices (rank up to ~10).
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  bool is_symmetric() const;
  IntMatrix transposed() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  /// M * v for a column vector v.
  std::vector<Int> apply(const std::vector<Int>& v) const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> entries_;
};

/// Dense row-major matrix of exact rationals (reduced, positive denominators;
/// mpq_class maintains this canonical form).
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Rat(0)) {}
  explicit RatMatrix(const IntMatrix& m);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> entries_;
};

/// U * S * V = D with U, V unimodular and D diagonal, nonnegative, with
/// d1 | d2 | ... along the diagonal.
struct SnfDecomposition {
  IntMatrix D, U, V;
};

enum class Definiteness { PositiveDefinite, NegativeDefinite, Indefinite, Degenerate };

/// Exact determinant by fraction-free (Bareiss) elimination.  Square only.
Int determinant(const IntMatrix& m);

SnfDecomposition smith_normal_form(const IntMatrix& m);

/// Exact inverse; throws SingularMatrix when det = 0.
RatMatrix rational_inverse(const IntMatrix& m);

/// Integer inverse of a matrix with determinant ±1.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Sylvester criterion on exact leading principal minors; Degenerate iff
/// det = 0.  Requires square symmetric input.
Definiteness definiteness(const IntMatrix& m);

/// One solution of A x = b over GF(2); entries of A and b taken mod 2.
/// Throws SingularMatrix when the system is inconsistent.
std::vector<int> solve_mod2(const IntMatrix& a, const std::vector<Int>& b);

/// Basis of the kernel of A over GF(2), as 0/1 vectors.
std::vector<std::vector<int>> mod2_kernel_basis(const IntMatrix& a);

/// Canonical basis of the row lattice of m: the nonzero rows of the row-style
/// Hermite normal form (positive pivots, entries above a pivot reduced).
IntMatrix hermite_row_basis(const IntMatrix& m);

}  // namespace linkform
