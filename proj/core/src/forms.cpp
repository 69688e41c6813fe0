#include "linkform/forms.hpp"

#include <algorithm>

namespace linkform {

namespace {

// Reduce into [0, 1).
Rat frac(const Rat& r) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return r - Rat(fl);
}

}  // namespace

GramPairing::GramPairing(IntMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.square() || !gram_.is_symmetric())
    throw InvalidInput("GramPairing: matrix must be square and symmetric");
  if (determinant(gram_) == 0)
    throw SingularMatrix("GramPairing: degenerate pairing");
}

Int GramPairing::dot(const std::vector<Int>& v, const std::vector<Int>& w) const {
  if (v.size() != rank() || w.size() != rank())
    throw InvalidInput("GramPairing::dot: dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) s += v[i] * gram_.at(i, j) * w[j];
  return s;
}

CyclicLinkingForm::CyclicLinkingForm(const Int& p, const Int& q) : p_(p) {
  if (p < 1) throw InvalidInput("CyclicLinkingForm: p must be >= 1");
  if (numtheory::gcd(q, p) != 1) throw InvalidInput("CyclicLinkingForm: gcd(q,p) != 1");
  if (p == 1) {
    q_ = 0;
    return;
  }
  q_ = q % p;
  if (q_ < 0) q_ += p;
}

Int FiniteLinkingForm::group_order() const {
  Int n = 1;
  for (const Int& d : invariant_factors) n *= d;
  return n;
}

Parity parity(const GramPairing& p) {
  for (std::size_t i = 0; i < p.rank(); ++i)
    if (p.gram().at(i, i) % 2 != 0) return Parity::Odd;
  return Parity::Even;
}

GramPairing direct_sum(const GramPairing& a, const GramPairing& b) {
  const std::size_t n = a.rank(), m = b.rank();
  IntMatrix g(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.at(i, j) = a.gram().at(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g.at(n + i, n + j) = b.gram().at(i, j);
  return GramPairing(std::move(g));
}

bool is_characteristic(const GramPairing& p, const std::vector<Int>& v) {
  if (v.size() != p.rank()) throw InvalidInput("is_characteristic: dimension mismatch");
  std::vector<Int> sv = p.gram().apply(v);
  for (std::size_t i = 0; i < p.rank(); ++i)
    if ((sv[i] - p.gram().at(i, i)) % 2 != 0) return false;
  return true;
}

std::vector<Int> characteristic_vector(const GramPairing& p) {
  std::vector<Int> diag(p.rank());
  for (std::size_t i = 0; i < p.rank(); ++i) diag[i] = p.gram().at(i, i);
  std::vector<int> bits = solve_mod2(p.gram(), diag);
  return std::vector<Int>(bits.begin(), bits.end());
}

std::vector<std::vector<Int>> characteristic_vectors_mod2(const GramPairing& p) {
  std::vector<Int> base = characteristic_vector(p);
  std::vector<std::vector<int>> kernel = mod2_kernel_basis(p.gram());
  if (kernel.size() > 20)
    throw Unsupported("characteristic_vectors_mod2: kernel too large to enumerate");
  std::vector<std::vector<Int>> out;
  const std::size_t n = p.rank();
  for (std::size_t mask = 0; mask < (std::size_t{1} << kernel.size()); ++mask) {
    std::vector<Int> v = base;
    for (std::size_t b = 0; b < kernel.size(); ++b)
      if (mask & (std::size_t{1} << b))
        for (std::size_t i = 0; i < n; ++i) v[i] = (v[i] + kernel[b][i]) % 2;
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

BlowDownResult blow_down(const GramPairing& p, const std::vector<Int>& v) {
  const std::size_t n = p.rank();
  if (v.size() != n) throw InvalidInput("blow_down: dimension mismatch");
  Int eps = p.dot(v, v);
  if (eps != 1 && eps != -1) throw InvalidInput("blow_down: vector square must be +-1");
  // Rows span the complement: e_i - (v.v)(e_i . v) v.
  std::vector<Int> sv = p.gram().apply(v);
  IntMatrix span(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      span.at(i, j) = -eps * sv[i] * v[j];
      if (i == j) span.at(i, j) += 1;
    }
  IntMatrix basis = hermite_row_basis(span);
  if (basis.rows() != n - 1)
    throw SingularMatrix("blow_down: complement basis extraction failed");
  IntMatrix g = basis * p.gram() * basis.transposed();
  return {GramPairing(std::move(g)), std::move(basis)};
}

FiniteLinkingForm presented_linking_form(const GramPairing& p) {
  const std::size_t n = p.rank();
  SnfDecomposition snf = smith_normal_form(p.gram());
  IntMatrix uinv = unimodular_inverse(snf.U);
  RatMatrix sinv = rational_inverse(p.gram());

  std::vector<std::size_t> idx;
  std::vector<Int> factors;
  for (std::size_t i = 0; i < n; ++i)
    if (snf.D.at(i, i) > 1) {
      idx.push_back(i);
      factors.push_back(snf.D.at(i, i));
    }
  const std::size_t m = idx.size();
  RatMatrix pairing(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Rat s = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          s += Rat(uinv.at(i, idx[a])) * sinv.at(i, j) * Rat(uinv.at(j, idx[b]));
      pairing.at(a, b) = frac(-s);
    }
  return {std::move(factors), std::move(pairing)};
}

std::optional<CyclicLinkingForm> as_cyclic(const FiniteLinkingForm& l) {
  if (l.invariant_factors.empty()) return CyclicLinkingForm(1, 0);
  if (l.invariant_factors.size() != 1) return std::nullopt;
  const Int& p = l.invariant_factors[0];
  Rat qp = l.pairing_mod1.at(0, 0) * Rat(p);
  qp.canonicalize();
  if (qp.get_den() != 1)
    throw InvalidInput("as_cyclic: pairing denominator does not divide the group order");
  return CyclicLinkingForm(p, qp.get_num());
}

bool cyclic_equivalent(const CyclicLinkingForm& a, const CyclicLinkingForm& b) {
  if (a.p() != b.p()) return false;
  if (a.p() == 1) return true;
  Int r = (b.q() * numtheory::invert_mod(a.q(), a.p())) % a.p();
  return numtheory::is_quadratic_residue(r, a.p());
}

CyclicLinkingForm negate(const CyclicLinkingForm& l) {
  return CyclicLinkingForm(l.p(), -l.q());
}

Int canonical_q(const CyclicLinkingForm& l) {
  if (l.p() == 1) return 0;
  for (Int c = 1; c <= l.q(); ++c) {
    if (numtheory::gcd(c, l.p()) != 1) continue;
    if (cyclic_equivalent(CyclicLinkingForm(l.p(), c), l)) return c;
  }
  return l.q();  // unreachable: the loop hits q itself
}

namespace {

// Order of (a1, a2) in Z/d1 + Z/d2.
Int element_order(const Int& a1, const Int& d1, const Int& a2, const Int& d2) {
  Int o1 = d1 / numtheory::gcd(a1, d1);
  Int o2 = d2 / numtheory::gcd(a2, d2);
  Int g = numtheory::gcd(o1, o2);
  return o1 / g * o2;
}

Rat pair2(const RatMatrix& v, const Int& a1, const Int& a2, const Int& b1, const Int& b2) {
  Rat s = Rat(a1 * b1) * v.at(0, 0) + Rat(a1 * b2) * v.at(0, 1) +
          Rat(a2 * b1) * v.at(1, 0) + Rat(a2 * b2) * v.at(1, 1);
  s.canonicalize();
  return frac(s);
}

// Do (x1,x2) and (y1,y2) generate Z/d1 + Z/d2?
bool generates(const Int& x1, const Int& x2, const Int& y1, const Int& y2,
               const Int& d1, const Int& d2) {
  IntMatrix m{{x1, y1, d1, Int(0)}, {x2, y2, Int(0), d2}};
  SnfDecomposition snf = smith_normal_form(m);
  return snf.D.at(0, 0) == 1 && snf.D.at(1, 1) == 1;
}

}  // namespace

bool is_isomorphic(const FiniteLinkingForm& a, const FiniteLinkingForm& b) {
  if (a.invariant_factors != b.invariant_factors) return false;
  if (a.invariant_factors.size() <= 1) {
    auto ca = as_cyclic(a), cb = as_cyclic(b);
    return cyclic_equivalent(*ca, *cb);
  }
  if (a.invariant_factors.size() > 2 || a.group_order() > 10'000)
    throw Unsupported("is_isomorphic: only cyclic groups and two-factor groups of order <= 10^4");
  const Int d1 = a.invariant_factors[0], d2 = a.invariant_factors[1];
  // Search images of a's generators inside b with matching pairings.
  for (Int x1 = 0; x1 < d1; ++x1)
    for (Int x2 = 0; x2 < d2; ++x2) {
      if (element_order(x1, d1, x2, d2) != d1) continue;
      if (pair2(b.pairing_mod1, x1, x2, x1, x2) != frac(a.pairing_mod1.at(0, 0))) continue;
      for (Int y1 = 0; y1 < d1; ++y1)
        for (Int y2 = 0; y2 < d2; ++y2) {
          if (element_order(y1, d1, y2, d2) != d2) continue;
          if (pair2(b.pairing_mod1, y1, y2, y1, y2) != frac(a.pairing_mod1.at(1, 1))) continue;
          if (pair2(b.pairing_mod1, x1, x2, y1, y2) != frac(a.pairing_mod1.at(0, 1))) continue;
          if (generates(x1, x2, y1, y2, d1, d2)) return true;
        }
    }
  return false;
}

}  // namespace linkform
