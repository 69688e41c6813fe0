#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "linkform/intmatrix.hpp"

using namespace linkform;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t n, int lo, int hi, bool symmetric) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = symmetric ? i : 0; j < n; ++j) {
      m.at(i, j) = d(rng);
      if (symmetric) m.at(j, i) = m.at(i, j);
    }
  return m;
}

IntMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
  // Product of elementary row operations applied to the identity.
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  for (int step = 0; step < 12; ++step) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    Int c = coef(rng);
    for (std::size_t k = 0; k < n; ++k) u.at(i, k) += c * u.at(j, k);
  }
  return u;
}

// Exact expected invariant factors via gcds of k x k minors.
std::vector<Int> minor_gcd_factors(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<Int> g(n + 1, 0);
  g[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> rows(k), cols(k);
    std::function<void(std::size_t, std::size_t)> loop_rows = [&](std::size_t pos, std::size_t lo) {
      if (pos == k) {
        std::function<void(std::size_t, std::size_t)> loop_cols = [&](std::size_t cpos,
                                                                      std::size_t clo) {
          if (cpos == k) {
            IntMatrix sub(k, k);
            for (std::size_t a = 0; a < k; ++a)
              for (std::size_t b = 0; b < k; ++b) sub.at(a, b) = m.at(rows[a], cols[b]);
            g[k] = numtheory::gcd(g[k], determinant(sub));
            return;
          }
          for (std::size_t c = clo; c < n; ++c) {
            cols[cpos] = c;
            loop_cols(cpos + 1, c + 1);
          }
        };
        loop_cols(0, 0);
        return;
      }
      for (std::size_t r = lo; r < n; ++r) {
        rows[pos] = r;
        loop_rows(pos + 1, r + 1);
      }
    };
    loop_rows(0, 0);
  }
  std::vector<Int> d(n);
  for (std::size_t k = 1; k <= n; ++k) d[k - 1] = g[k - 1] == 0 ? Int(0) : Int(g[k] / g[k - 1]);
  return d;
}

void check_snf(const IntMatrix& m) {
  SnfDecomposition s = smith_normal_form(m);
  CHECK(s.U * m * s.V == s.D);
  CHECK(abs(determinant(s.U)) == 1);
  CHECK(abs(determinant(s.V)) == 1);
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(s.D.at(i, i) >= 0);
    if (i + 1 < n && s.D.at(i, i) != 0) CHECK(s.D.at(i + 1, i + 1) % s.D.at(i, i) == 0);
  }
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j) CHECK(s.D.at(i, j) == 0);
}

}  // namespace

TEST_CASE("determinant pinned values") {
  CHECK(determinant(IntMatrix::identity(2)) == 1);
  CHECK(determinant(IntMatrix{{-15, 10}, {10, -7}}) == 5);
  CHECK(determinant(IntMatrix{{2, 1}, {1, 2}}) == 3);
  CHECK(determinant(IntMatrix(0, 0)) == 1);
  CHECK(determinant(IntMatrix{{0, 1, 2}, {1, 0, 3}, {2, 3, 0}}) == 12);
  CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), InvalidInput);
}

TEST_CASE("determinant agrees with cofactor expansion on random matrices") {
  std::mt19937 rng(7);
  std::function<Int(const IntMatrix&)> cofactor = [&](const IntMatrix& m) -> Int {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Int acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix sub(n - 1, n - 1);
      for (std::size_t r = 1; r < n; ++r)
        for (std::size_t c = 0, cc = 0; c < n; ++c)
          if (c != j) sub.at(r - 1, cc++) = m.at(r, c);
      Int term = m.at(0, j) * cofactor(sub);
      acc += (j % 2 == 0) ? term : Int(-term);
    }
    return acc;
  };
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m = random_matrix(rng, 1 + trial % 4, -9, 9, false);
    CHECK(determinant(m) == cofactor(m));
  }
}

TEST_CASE("smith normal form pinned values") {
  SnfDecomposition s = smith_normal_form(IntMatrix{{2, 1}, {1, 2}});
  CHECK(s.D.at(0, 0) == 1);
  CHECK(s.D.at(1, 1) == 3);
  s = smith_normal_form(IntMatrix{{5}});
  CHECK(s.D.at(0, 0) == 5);
  s = smith_normal_form(IntMatrix{{-10, 5}, {5, -2}});
  CHECK(s.D.at(0, 0) == 1);
  CHECK(s.D.at(1, 1) == 5);
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    IntMatrix m = random_matrix(rng, 1 + trial % 4, -6, 6, false);
    check_snf(m);
    SnfDecomposition s = smith_normal_form(m);
    CHECK(determinant(s.U) * determinant(m) * determinant(s.V) == determinant(s.D));
    std::vector<Int> expect = minor_gcd_factors(m);
    for (std::size_t i = 0; i < m.rows(); ++i) CHECK(s.D.at(i, i) == expect[i]);
  }
}

TEST_CASE("smith normal form of rectangular matrices") {
  check_snf(IntMatrix{{2, 4, 6}, {4, 8, 10}});
  check_snf(IntMatrix{{0, 0}, {0, 0}, {0, 0}});
  check_snf(IntMatrix{{3}, {6}, {9}});
}

TEST_CASE("rational_inverse pinned values and identity property") {
  RatMatrix r = rational_inverse(IntMatrix{{2}});
  CHECK(r.at(0, 0) == Rat(1, 2));
  r = rational_inverse(IntMatrix{{-10, 5}, {5, -2}});
  CHECK(r.at(0, 0) == Rat(2, 5));
  CHECK(r.at(0, 1) == 1);
  CHECK(r.at(1, 0) == 1);
  CHECK(r.at(1, 1) == 2);
  CHECK(rational_inverse(IntMatrix::identity(3)) == RatMatrix::identity(3));
  CHECK_THROWS_AS(rational_inverse(IntMatrix{{1, 2}, {2, 4}}), SingularMatrix);

  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix m = random_matrix(rng, 1 + trial % 4, -8, 8, false);
    if (determinant(m) == 0) continue;
    CHECK(RatMatrix(m) * rational_inverse(m) == RatMatrix::identity(m.rows()));
  }
}

TEST_CASE("unimodular_inverse round trip") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix u = random_unimodular(rng, 2 + trial % 3);
    CHECK(u * unimodular_inverse(u) == IntMatrix::identity(u.rows()));
  }
  CHECK_THROWS_AS(unimodular_inverse(IntMatrix{{2}}), InvalidInput);
}

TEST_CASE("definiteness pinned values") {
  CHECK(definiteness(IntMatrix{{1, 0}, {0, 5}}) == Definiteness::PositiveDefinite);
  // Discriminant 400 - 420 < 0 with negative leading coefficient: definite.
  CHECK(definiteness(IntMatrix{{-15, 10}, {10, -7}}) == Definiteness::NegativeDefinite);
  CHECK(definiteness(IntMatrix{{-2, 0}, {0, -2}}) == Definiteness::NegativeDefinite);
  CHECK(definiteness(IntMatrix{{1, 0}, {0, -1}}) == Definiteness::Indefinite);
  CHECK(definiteness(IntMatrix{{1, 2}, {2, 4}}) == Definiteness::Degenerate);
  // Zero leading minor but nonzero determinant: indefinite.
  CHECK(definiteness(IntMatrix{{0, 1}, {1, 0}}) == Definiteness::Indefinite);
  CHECK_THROWS_AS(definiteness(IntMatrix{{1, 2}, {3, 4}}), InvalidInput);
}

TEST_CASE("definiteness invariant under unimodular congruence") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix m = random_matrix(rng, 2 + trial % 3, -5, 5, true);
    IntMatrix u = random_unimodular(rng, m.rows());
    CHECK(definiteness(m) == definiteness(u.transposed() * m * u));
  }
}

TEST_CASE("solve_mod2 pinned values") {
  CHECK(solve_mod2(IntMatrix{{0, 1}, {1, 0}}, {0, 0}) == std::vector<int>{0, 0});
  CHECK(solve_mod2(IntMatrix{{1}}, {1}) == std::vector<int>{1});
  CHECK(solve_mod2(IntMatrix{{-15, 10}, {10, -7}}, {-15, -7}) == std::vector<int>{1, 1});
  CHECK_THROWS_AS(solve_mod2(IntMatrix{{2, 0}, {0, 2}}, {1, 0}), SingularMatrix);
}

TEST_CASE("solve_mod2 solves the characteristic system on random symmetric matrices") {
  std::mt19937 rng(57);
  for (int trial = 0; trial < 80; ++trial) {
    IntMatrix m = random_matrix(rng, 1 + trial % 5, -4, 4, true);
    std::vector<Int> diag(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) diag[i] = m.at(i, i);
    std::vector<int> x;
    try {
      x = solve_mod2(m, diag);
    } catch (const SingularMatrix&) {
      continue;  // possible for degenerate random m
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Int acc = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) acc += m.at(i, j) * x[j];
      CHECK((acc - diag[i]) % 2 == 0);
    }
  }
}

TEST_CASE("mod2 kernel basis spans the kernel") {
  IntMatrix m{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}};  // mod 2: rank 2
  auto basis = mod2_kernel_basis(m);
  REQUIRE(basis.size() == 1);
  for (std::size_t i = 0; i < 3; ++i) {
    int acc = 0;
    for (std::size_t j = 0; j < 3; ++j) acc ^= (int(m.at(i, j).get_si()) & 1) & basis[0][j];
    CHECK(acc == 0);
  }
  CHECK(mod2_kernel_basis(IntMatrix::identity(3)).empty());
}

TEST_CASE("hermite_row_basis") {
  IntMatrix b = hermite_row_basis(IntMatrix{{2, 4}, {1, 2}, {3, 6}});
  REQUIRE(b.rows() == 1);
  CHECK(b.at(0, 0) == 1);
  CHECK(b.at(0, 1) == 2);

  b = hermite_row_basis(IntMatrix{{0, 1}, {1, 0}});
  CHECK(b == IntMatrix::identity(2));

  // Row lattice is preserved: generated lattices have equal Hermite forms.
  IntMatrix m{{6, 10, 15}, {10, 6, 15}, {0, 4, 1}};
  IntMatrix h1 = hermite_row_basis(m);
  IntMatrix h2 = hermite_row_basis(h1);
  CHECK(h1 == h2);
}
