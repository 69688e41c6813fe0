#include "linkform/presentations.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace linkform {

namespace {

using numtheory::gcd;
using numtheory::is_quadratic_residue;

std::string str(const Int& v) { return v.get_str(); }

std::string vec_str(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += str(v[i]);
  }
  return s + ")";
}

Int normalize_q(const Int& p, const Int& q) {
  if (p < 1) throw InvalidInput("presentation: p must be >= 1");
  if (gcd(q, p) != 1) throw InvalidInput("presentation: gcd(q,p) != 1");
  if (p == 1) return 0;
  Int qn = q % p;
  if (qn < 0) qn += p;
  return qn;
}

PresentationCertificate make_cert(const Int& p, const Int& qn, GramPairing gram,
                                  Construction c, std::vector<std::string> trace) {
  CyclicLinkingForm target(p, p == 1 ? Int(0) : qn);
  PresentationCertificate cert{target, std::move(gram), c, false, std::move(trace)};
  if (abs(cert.gram.det()) == p) {
    auto cyc = as_cyclic(presented_linking_form(cert.gram));
    cert.verified = cyc && cyclic_equivalent(*cyc, target);
  }
  return cert;
}

// ---- rank 2 ------------------------------------------------------------

// Is some odd q' = t mod p with q' | p b^2 + eps attainable?  Equivalent to
// a residue class c = t mod p, c odd mod 8p, on which the quadratic
// character (-eps p | .) is +1; primes in that class then serve as q'.
bool branch_reachable(const Int& p, const Int& t, int eps) {
  for (int k = 0; k < 8; ++k) {
    Int c = t + k * p;
    if (c % 2 == 0) continue;
    if (numtheory::kronecker(-eps * p, c) == 1) return true;
  }
  return false;
}

std::vector<Int> odd_divisors(const Int& n) {
  std::vector<Int> divs{1};
  for (const auto& [prime, e] : numtheory::factorize(abs(n))) {
    if (prime == 2) continue;
    const std::size_t sz = divs.size();
    Int pe = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pe *= prime;
      for (std::size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

struct Rank2Witness {
  Int qprime, b, d;
};

// Smallest b, then smallest odd q' = t mod p dividing p b^2 + eps.
Rank2Witness branch_search(const Int& p, const Int& t, int eps, std::uint64_t ceiling) {
  Int tm = t % p;
  for (Int b = 0; b <= Int(ceiling); ++b) {
    Int n = p * b * b + eps;
    for (const Int& qp : odd_divisors(n)) {
      if (qp % p != tm) continue;
      return {qp, b, n / qp};
    }
  }
  throw SearchLimitExceeded("rank2_presentation: b-search ceiling exceeded");
}

// The first `count` witnesses on a branch, in the same order branch_search
// visits them.
std::vector<Rank2Witness> branch_witnesses(const Int& p, const Int& t, int eps,
                                           std::size_t count, std::uint64_t ceiling) {
  std::vector<Rank2Witness> out;
  Int tm = t % p;
  for (Int b = 0; b <= Int(ceiling) && out.size() < count; ++b) {
    Int n = p * b * b + eps;
    for (const Int& qp : odd_divisors(n)) {
      if (qp % p != tm) continue;
      out.push_back({qp, b, n / qp});
      if (out.size() >= count) break;
    }
  }
  return out;
}

// The pairing eps * [[-d p, b p], [b p, -q']]; determinant eps * p.
IntMatrix rank2_gram(const Int& p, int eps, const Rank2Witness& w) {
  IntMatrix g(2, 2);
  g.at(0, 0) = -eps * w.d * p;
  g.at(0, 1) = g.at(1, 0) = eps * w.b * p;
  g.at(1, 1) = -eps * w.qprime;
  return g;
}

std::string branch_note(const Int& p, const Int& t, int eps, const Rank2Witness& w) {
  return "branch " + std::string(eps > 0 ? "+1" : "-1") + " on class " + str(t) +
         " mod " + str(p) + ": q'=" + str(w.qprime) + ", b=" + str(w.b) +
         ", d=" + str(w.d);
}

}  // namespace

std::optional<PresentationCertificate> rank1_presentation(const Int& p, const Int& q) {
  Int qn = normalize_q(p, q);
  if (p == 1)
    return make_cert(p, qn, GramPairing(), Construction::Rank1, {"trivial form: empty pairing"});
  if (is_quadratic_residue(-qn, p)) {
    IntMatrix g(1, 1);
    g.at(0, 0) = p;
    return make_cert(p, qn, GramPairing(std::move(g)), Construction::Rank1,
                     {"-q is a square mod p: [p]"});
  }
  if (is_quadratic_residue(qn, p)) {
    IntMatrix g(1, 1);
    g.at(0, 0) = -p;
    return make_cert(p, qn, GramPairing(std::move(g)), Construction::Rank1,
                     {"+q is a square mod p: [-p]"});
  }
  return std::nullopt;
}

PresentationCertificate rank2_presentation(const Int& p, const Int& q, std::uint64_t ceiling) {
  Int qn = normalize_q(p, q);
  if (p == 1)
    return make_cert(p, qn, GramPairing(), Construction::Rank2BruteForce,
                     {"trivial form: empty pairing"});
  const Int t1 = qn, t2 = p - qn;
  std::vector<std::string> trace;
  IntMatrix gram;
  if (branch_reachable(p, t1, +1)) {
    Rank2Witness w = branch_search(p, t1, +1, ceiling);
    gram = rank2_gram(p, +1, w);
    trace.push_back(branch_note(p, t1, +1, w));
  } else if (cyclic_equivalent(CyclicLinkingForm(p, t2), CyclicLinkingForm(p, t1)) &&
             branch_reachable(p, t2, +1)) {
    Rank2Witness w = branch_search(p, t2, +1, ceiling);
    gram = rank2_gram(p, +1, w);
    trace.push_back(branch_note(p, t2, +1, w));
    trace.push_back("presents (-q/p), equivalent to (q/p) since -q = u^2 q mod p");
  } else if (branch_reachable(p, t1, -1)) {
    Rank2Witness w = branch_search(p, t1, -1, ceiling);
    gram = rank2_gram(p, -1, w);
    trace.push_back(branch_note(p, t1, -1, w));
  } else if (branch_reachable(p, t2, +1)) {
    Rank2Witness w = branch_search(p, t2, +1, ceiling);
    gram = -rank2_gram(p, +1, w);
    trace.push_back(branch_note(p, t2, +1, w));
    trace.push_back("negated: the un-negated pairing presents (-q/p)");
  } else if (branch_reachable(p, t2, -1)) {
    Rank2Witness w = branch_search(p, t2, -1, ceiling);
    gram = -rank2_gram(p, -1, w);
    trace.push_back(branch_note(p, t2, -1, w));
    trace.push_back("negated: the un-negated pairing presents (-q/p)");
  } else {
    throw SearchLimitExceeded("rank2_presentation: no reachable branch for target class");
  }
  return make_cert(p, qn, GramPairing(std::move(gram)), Construction::Rank2BruteForce,
                   std::move(trace));
}

PresentationCertificate rank2_constructive(const Int& p, const Int& q, std::uint64_t ceiling) {
  Int qn = normalize_q(p, q);
  if (p == 1)
    return make_cert(p, qn, GramPairing(), Construction::Rank2Dirichlet,
                     {"trivial form: empty pairing"});
  Int q0;
  bool found = false;
  const std::vector<Int> candidates{qn, Int(-qn), Int(p + qn), Int(3 * p + qn)};
  for (const Int& cand : candidates) {
    Int r4 = cand % 4;
    if (r4 < 0) r4 += 4;
    if (r4 == 3) {
      q0 = cand;
      found = true;
      break;
    }
  }
  if (!found)
    throw InvalidInput("rank2_constructive: no candidate = 3 mod 4");  // unreachable
  Int a = q0 % (4 * p);
  if (a < 0) a += 4 * p;
  Int qprime = numtheory::find_prime_in_progression(a, 4 * p, ceiling);
  std::vector<std::string> trace{"q0 = " + str(q0) + " = 3 mod 4; prime q' = " + str(qprime) +
                                 " in the progression " + str(a) + " + 4p k"};
  Int pinv = numtheory::invert_mod(p % qprime, qprime);
  int eps;
  Int b;
  if (is_quadratic_residue(-pinv, qprime)) {
    eps = +1;
    b = numtheory::sqrt_mod(-pinv % qprime + qprime, qprime);
  } else {
    eps = -1;
    b = numtheory::sqrt_mod(pinv, qprime);
  }
  Rank2Witness w{qprime, b, (p * b * b + eps) / qprime};
  IntMatrix gram = rank2_gram(p, eps, w);
  trace.push_back(branch_note(p, qprime % p, eps, w));
  PresentationCertificate cert = make_cert(p, qn, GramPairing(gram), Construction::Rank2Dirichlet, trace);
  if (!cert.verified) {
    trace.push_back("negated: the un-negated pairing presents (-q/p)");
    cert = make_cert(p, qn, GramPairing(-gram), Construction::Rank2Dirichlet, trace);
  }
  return cert;
}

// ---- even --------------------------------------------------------------

namespace {

// n = a^2 + b^2 with both parts odd, if possible (so n = 2 mod 8).
std::optional<std::pair<Int, Int>> two_odd_squares(const Int& n) {
  for (Int b = 1; 2 * b * b <= n; b += 2) {
    Int rest = n - b * b;
    if (!mpz_perfect_square_p(rest.get_mpz_t())) continue;
    Int a = sqrt(rest);
    if (a % 2 != 0) return std::make_pair(a, b);
  }
  return std::nullopt;
}

// Final rank of the even construction from a seed of rank r whose chosen
// characteristic square is m, or -1 when the class is out of reach.
// Hyperbolic summands shift a characteristic square by multiples of 8 and
// <+-1> summands by +-(odd square), so squares 3 and 5 mod 8 can only be
// corrected to -+1 by a pair of unit summands whose odd squares sum to
// |m| - 1, when that number is a sum of two squares at all.
int even_plan_rank(std::size_t r, const Int& m) {
  if (m == 1 || m == -1) return static_cast<int>(r) - 1;
  Int mu = m % 8;
  if (mu < 0) mu += 8;
  if (mu == 1 || mu == 7) return static_cast<int>(r) + 1;
  if (mu == 0 || mu == 2 || mu == 4 || mu == 6) return static_cast<int>(r) + 2;
  if (mu == 3 && m >= 3 && two_odd_squares(m - 1)) return static_cast<int>(r) + 1;
  if (mu == 5 && m <= -3 && two_odd_squares(-1 - m)) return static_cast<int>(r) + 1;
  return -1;
}

std::vector<Int> concat(const std::vector<Int>& a, std::initializer_list<Int> tail) {
  std::vector<Int> v = a;
  v.insert(v.end(), tail);
  return v;
}

struct EvenSeed {
  GramPairing gram;
  std::vector<std::string> trace;
};

struct EvenChoice {
  std::size_t seed = 0;
  std::vector<Int> coset;
  int final_rank = -1;
};

bool is_zero_vector(const std::vector<Int>& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& e) { return e == 0; });
}

// Best (seed, characteristic class) pair by final rank; ties go to the
// earlier seed and then the lexicographically smallest representative.
std::optional<EvenChoice> best_even_choice(const std::vector<EvenSeed>& pool) {
  std::optional<EvenChoice> best;
  for (std::size_t s = 0; s < pool.size(); ++s) {
    for (const auto& v : characteristic_vectors_mod2(pool[s].gram)) {
      // The zero class characteristic means the seed is already even.
      int r = is_zero_vector(v) ? static_cast<int>(pool[s].gram.rank())
                                : even_plan_rank(pool[s].gram.rank(), pool[s].gram.dot(v, v));
      if (r < 0) continue;
      if (!best || r < best->final_rank) best = EvenChoice{s, v, r};
    }
  }
  return best;
}

// Last-resort shell search over small even pairings of rank 2 and 3.  The
// blocked residue classes all turn out to admit tiny rank-3 even pairings.
std::optional<GramPairing> search_even_small(const Int& p, const Int& qn) {
  if (!p.fits_slong_p()) return std::nullopt;
  const long pl = p.get_si();
  CyclicLinkingForm target(p, qn);
  auto matches = [&](IntMatrix s) -> bool {
    GramPairing g(std::move(s));
    auto cyc = as_cyclic(presented_linking_form(g));
    return cyc && cyclic_equivalent(*cyc, target);
  };
  for (long L = 2; L <= 64; L += 2) {
    // rank 2: [[a,x],[x,c]] with even diagonal
    for (long a = -L; a <= L; a += 2)
      for (long c = -L; c <= L; c += 2)
        for (long x = 0; x <= L; ++x) {
          if (std::max({labs(a), labs(c), labs(x)}) + 1 < L) continue;  // shell
          long det = a * c - x * x;
          if (det != pl && det != -pl) continue;
          IntMatrix s{{Int(a), Int(x)}, {Int(x), Int(c)}};
          if (matches(s)) return GramPairing(std::move(s));
        }
    // rank 3: symmetric with even diagonal; z >= 0 by a basis sign flip
    for (long a = -L; a <= L; a += 2)
      for (long c = -L; c <= L; c += 2)
        for (long e = -L; e <= L; e += 2)
          for (long x = -L; x <= L; ++x)
            for (long y = -L; y <= L; ++y)
              for (long z = 0; z <= L; ++z) {
                if (std::max({labs(a), labs(c), labs(e), labs(x), labs(y), z}) + 1 < L)
                  continue;  // shell
                long det = a * (c * e - z * z) - x * (x * e - z * y) + y * (x * z - c * y);
                if (det != pl && det != -pl) continue;
                IntMatrix s{{Int(a), Int(x), Int(y)},
                            {Int(x), Int(c), Int(z)},
                            {Int(y), Int(z), Int(e)}};
                if (matches(s)) return GramPairing(std::move(s));
              }
  }
  return std::nullopt;
}

}  // namespace

PresentationCertificate even_presentation(const Int& p, const Int& q, std::uint64_t ceiling) {
  Int qn = normalize_q(p, q);
  if (p == 1)
    return make_cert(p, qn, GramPairing(), Construction::Even, {"trivial form: empty pairing"});
  // Seed pool: the standard rank-2 pairing, plus the rank-1 pairing when one
  // exists.  A seed whose characteristic squares are all 3 or 5 mod 8 cannot
  // feed the construction, so keep alternate seeds available.
  std::vector<EvenSeed> pool;
  {
    PresentationCertificate r2 = rank2_presentation(p, qn, ceiling);
    std::vector<std::string> t2 = r2.trace;
    t2.push_back("rank-2 seed " + std::string("[[") + str(r2.gram.gram().at(0, 0)) + "," +
                 str(r2.gram.gram().at(0, 1)) + "],[" + str(r2.gram.gram().at(1, 0)) + "," +
                 str(r2.gram.gram().at(1, 1)) + "]]");
    pool.push_back({r2.gram, std::move(t2)});
  }
  if (auto r1 = rank1_presentation(p, qn)) {
    std::vector<std::string> t1 = r1->trace;
    t1.push_back("rank-1 seed [" + str(r1->gram.gram().at(0, 0)) + "]");
    pool.push_back({r1->gram, std::move(t1)});
  }
  std::optional<EvenChoice> choice = best_even_choice(pool);
  if (!choice) {
    // Fall back to further rank-2 witnesses on every reachable branch, in the
    // same priority order rank2_presentation uses.
    const Int t1 = qn, t2 = p - qn;
    const bool equiv =
        cyclic_equivalent(CyclicLinkingForm(p, t2), CyclicLinkingForm(p, t1));
    struct Route { Int t; int eps; bool negated; bool ok; };
    const std::vector<Route> routes{
        {t1, +1, false, branch_reachable(p, t1, +1)},
        {t2, +1, false, equiv && branch_reachable(p, t2, +1)},
        {t1, -1, false, branch_reachable(p, t1, -1)},
        {t2, +1, true, branch_reachable(p, t2, +1)},
        {t2, -1, true, branch_reachable(p, t2, -1)}};
    constexpr std::size_t kAlternatesPerRoute = 48;
    for (const Route& route : routes) {
      if (!route.ok || choice) continue;
      for (const Rank2Witness& w :
           branch_witnesses(p, route.t, route.eps, kAlternatesPerRoute, ceiling)) {
        IntMatrix g = rank2_gram(p, route.eps, w);
        if (route.negated) g = -g;
        PresentationCertificate alt =
            make_cert(p, qn, GramPairing(std::move(g)), Construction::Even,
                      {branch_note(p, route.t, route.eps, w)});
        if (!alt.verified) continue;
        std::vector<std::string> ta = alt.trace;
        ta.push_back("alternate rank-2 seed with a usable characteristic class");
        pool.push_back({alt.gram, std::move(ta)});
        choice = best_even_choice(pool);
        if (choice) break;
      }
    }
  }
  if (!choice) {
    // Residue classes blocked for every seed in the pool; fall back to a
    // direct search over small even pairings.
    if (auto found = search_even_small(p, qn)) {
      return make_cert(p, qn, std::move(*found), Construction::Even,
                       {"direct search over small even pairings"});
    }
    throw Unsupported("even_presentation: no characteristic class with handled square mod 8");
  }
  const GramPairing& v2 = pool[choice->seed].gram;
  std::vector<std::string> trace = pool[choice->seed].trace;
  const std::vector<Int>& v = choice->coset;
  Int m = v2.dot(v, v);
  trace.push_back("characteristic vector " + vec_str(v) + " with square " + str(m));

  GramPairing result;
  if (is_zero_vector(v)) {
    trace.push_back("zero class is characteristic: the seed is already even");
    result = v2;
  } else if (m == 1 || m == -1) {
    BlowDownResult bd = blow_down(v2, v);
    trace.push_back("square is already +-1: blow down directly (rank 1)");
    result = std::move(bd.complement);
  } else {
    Int mu = m % 8;
    if (mu < 0) mu += 8;
    if (mu == 1 || mu == 7) {
      Int t = mu == 1 ? 1 : -1;
      Int l = (t - m) / 8;
      GramPairing h(IntMatrix{{Int(0), Int(1)}, {Int(1), Int(0)}});
      GramPairing sum = direct_sum(v2, h);
      std::vector<Int> u = concat(v, {Int(2), 2 * l});
      trace.push_back("sum with H, blow down v + (2, " + str(2 * l) + ") of square " + str(t));
      result = blow_down(sum, u).complement;
    } else if (mu == 0 || mu == 2 || mu == 6) {
      Int t = mu == 0 ? 0 : (mu == 2 ? 2 : -2);
      Int eps = mu == 2 ? -1 : 1;
      Int l = (t - m) / 8;
      GramPairing h(IntMatrix{{Int(0), Int(1)}, {Int(1), Int(0)}});
      GramPairing sum = direct_sum(direct_sum(v2, h), GramPairing(IntMatrix{{eps}}));
      std::vector<Int> u = concat(v, {Int(2), 2 * l, Int(1)});
      trace.push_back("sum with H and <" + str(eps) + ">, blow down v + (2, " + str(2 * l) +
                      ") + e of square " + str(t + eps));
      result = blow_down(sum, u).complement;
    } else if (mu == 3 || mu == 5) {
      Int eps = mu == 3 ? -1 : 1;
      Int n1 = mu == 3 ? Int(m - 1) : Int(-1 - m);
      auto sq = two_odd_squares(n1);  // guaranteed by the plan check above
      IntMatrix units(2, 2);
      units.at(0, 0) = units.at(1, 1) = eps;
      GramPairing sum = direct_sum(v2, GramPairing(std::move(units)));
      std::vector<Int> u = concat(v, {sq->first, sq->second});
      trace.push_back("sum with 2<" + str(eps) + ">, " + str(n1) + " = " + str(sq->first) +
                      "^2 + " + str(sq->second) + "^2, blow down v + (a1,a2) of square " +
                      str(m + eps * n1));
      result = blow_down(sum, u).complement;
    } else {  // mu == 4
      Int eps = m <= -4 ? 1 : -1;
      Int n1 = m <= -4 ? Int(-1 - m) : Int(m - 1);
      numtheory::ThreeSquares sq = numtheory::three_squares(n1);
      IntMatrix cube(3, 3);
      for (int i = 0; i < 3; ++i) cube.at(i, i) = eps;
      GramPairing sum = direct_sum(v2, GramPairing(std::move(cube)));
      std::vector<Int> u = concat(v, {sq.a1, sq.a2, sq.a3});
      trace.push_back("sum with 3<" + str(eps) + ">, " + str(n1) + " = " + str(sq.a1) + "^2 + " +
                      str(sq.a2) + "^2 + " + str(sq.a3) + "^2, blow down v + (a1,a2,a3) of square " +
                      str(m + eps * n1));
      result = blow_down(sum, u).complement;
    }
  }
  return make_cert(p, qn, std::move(result), Construction::Even, std::move(trace));
}

// ---- definite ----------------------------------------------------------

std::vector<Int> negative_odd_vector(const GramPairing& p) {
  const std::size_t n = p.rank();
  if (parity(p) != Parity::Odd)
    throw InvalidInput("negative_odd_vector: pairing must be odd");
  if (definiteness(p.gram()) == Definiteness::PositiveDefinite)
    throw InvalidInput("negative_odd_vector: pairing is positive definite");

  // A basis vector with negative odd square, smallest magnitude first.
  std::size_t best = n;
  for (std::size_t i = 0; i < n; ++i) {
    const Int& d = p.gram().at(i, i);
    if (d < 0 && d % 2 != 0 && (best == n || -d < -p.gram().at(best, best))) best = i;
  }
  if (best < n) {
    std::vector<Int> v(n, Int(0));
    v[best] = 1;
    return v;
  }

  std::size_t wi = 0;
  while (p.gram().at(wi, wi) % 2 == 0) ++wi;
  std::vector<Int> w(n, Int(0));
  w[wi] = 1;

  // A negative direction from exact congruence diagonalization: T S T^t is
  // diagonal with some negative entry since S is not positive definite.
  RatMatrix a(p.gram());
  RatMatrix t = RatMatrix::identity(n);
  auto add_row = [&](std::size_t dst, std::size_t src, const Rat& f) {
    for (std::size_t j = 0; j < n; ++j) {
      a.at(dst, j) += f * a.at(src, j);
      t.at(dst, j) += f * t.at(src, j);
    }
    for (std::size_t j = 0; j < n; ++j) a.at(j, dst) += f * a.at(j, src);
  };
  auto swap_basis = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) {
      std::swap(a.at(i, k), a.at(j, k));
      std::swap(t.at(i, k), t.at(j, k));
    }
    for (std::size_t k = 0; k < n; ++k) std::swap(a.at(k, i), a.at(k, j));
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t j = k + 1;
      while (j < n && a.at(j, j) == 0) ++j;
      if (j < n) {
        swap_basis(k, j);
      } else {
        j = k + 1;
        while (j < n && a.at(k, j) == 0) ++j;
        if (j == n) throw SingularMatrix("negative_odd_vector: degenerate block");
        add_row(k, j, Rat(1));
      }
    }
    for (std::size_t i = k + 1; i < n; ++i)
      if (a.at(i, k) != 0) add_row(i, k, -a.at(i, k) / a.at(k, k));
  }
  std::size_t neg = n;
  for (std::size_t k = 0; k < n; ++k)
    if (a.at(k, k) < 0) {
      neg = k;
      break;
    }
  if (neg == n)
    throw InvalidInput("negative_odd_vector: no negative direction found");
  Int lcm = 1;
  for (std::size_t j = 0; j < n; ++j) {
    Int den = t.at(neg, j).get_den();
    lcm = lcm / numtheory::gcd(lcm, den) * den;
  }
  std::vector<Int> u(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rat e = t.at(neg, j) * Rat(lcm);
    e.canonicalize();
    u[j] = e.get_num();
  }
  Int g = 0;
  for (const Int& e : u) g = numtheory::gcd(g, e);
  for (Int& e : u) e /= g;

  if (p.dot(u, w) > 0)
    for (Int& e : u) e = -e;
  Int uu = p.dot(u, u);
  if (uu % 2 != 0) return u;  // already negative and odd

  for (Int k = 1;; ++k) {
    std::vector<Int> v = w;
    for (std::size_t j = 0; j < n; ++j) v[j] += k * u[j];
    if (p.dot(v, v) < 0) return v;  // odd: w^2 odd, the k-terms even
  }
}

namespace {

// One definite round: blow up by 3<+1>, blow down u + (a1,a2,a3) with
// u = 2 v0; raises rank by 2 and signature by 4.
GramPairing definite_round(const GramPairing& p, std::vector<std::string>& trace) {
  std::vector<Int> v0 = negative_odd_vector(p);
  Int m = p.dot(v0, v0);
  Int n1 = -4 * m - 1;  // = 3 mod 8 since m is odd and negative
  numtheory::ThreeSquares sq = numtheory::three_squares(n1);
  IntMatrix cube(3, 3);
  for (int i = 0; i < 3; ++i) cube.at(i, i) = 1;
  GramPairing sum = direct_sum(p, GramPairing(std::move(cube)));
  std::vector<Int> v(p.rank() + 3, Int(0));
  for (std::size_t j = 0; j < p.rank(); ++j) v[j] = 2 * v0[j];
  v[p.rank()] = sq.a1;
  v[p.rank() + 1] = sq.a2;
  v[p.rank() + 2] = sq.a3;
  trace.push_back("round: v0 = " + vec_str(v0) + " of square " + str(m) + "; " + str(n1) +
                  " = " + str(sq.a1) + "^2 + " + str(sq.a2) + "^2 + " + str(sq.a3) +
                  "^2; sum with 3<+1>, blow down 2 v0 + (a1,a2,a3) of square -1");
  return blow_down(sum, v).complement;
}

}  // namespace

PresentationCertificate definite_from_seed(const Int& p, const Int& q, const GramPairing& seed,
                                           std::vector<std::string> trace) {
  Int qn = normalize_q(p, q);
  GramPairing g = seed;
  switch (definiteness(g.gram())) {
    case Definiteness::PositiveDefinite:
      trace.push_back("rank-2 seed already positive definite");
      break;
    case Definiteness::Indefinite:
      trace.push_back("indefinite seed: one round");
      g = definite_round(g, trace);
      break;
    case Definiteness::NegativeDefinite:
      trace.push_back("negative definite seed: two rounds");
      g = definite_round(g, trace);
      g = definite_round(g, trace);
      break;
    case Definiteness::Degenerate:
      throw SingularMatrix("definite_presentation: degenerate seed");
  }
  return make_cert(p, qn, std::move(g), Construction::Definite, std::move(trace));
}

PresentationCertificate definite_presentation(const Int& p, const Int& q, std::uint64_t ceiling) {
  Int qn = normalize_q(p, q);
  if (p == 1)
    return make_cert(p, qn, GramPairing(), Construction::Definite, {"trivial form: empty pairing"});
  PresentationCertificate seed = rank2_presentation(p, qn, ceiling);
  return definite_from_seed(p, qn, seed.gram, seed.trace);
}

// ---- plumbing ----------------------------------------------------------

PresentationCertificate plumbing_presentation(const Int& p, const Int& q) {
  Int qn = normalize_q(p, q);
  if (p == 1)
    return make_cert(p, qn, GramPairing(), Construction::Plumbing, {"trivial form: empty pairing"});
  // Hirzebruch-Jung expansion of p/(p-q): a_i = ceil(num/den).
  std::vector<Int> expansion;
  Int num = p, den = p - qn;
  while (den > 0) {
    Int a;
    mpz_cdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    expansion.push_back(a);
    Int next_den = a * den - num;
    num = den;
    den = next_den;
  }
  std::string exp_str;
  for (std::size_t i = 0; i < expansion.size(); ++i)
    exp_str += (i ? "," : "") + str(expansion[i]);
  std::vector<std::string> trace{"expansion p/(p-q) = [" + exp_str + "]"};
  const std::size_t n = expansion.size();
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    g.at(i, i) = -expansion[i];
    if (i + 1 < n) g.at(i, i + 1) = g.at(i + 1, i) = 1;
  }
  PresentationCertificate cert =
      make_cert(p, qn, GramPairing(g), Construction::Plumbing, trace);
  if (!cert.verified) {
    trace.push_back("negated: the tridiagonal convention presents (-q/p)");
    cert = make_cert(p, qn, GramPairing(-g), Construction::Plumbing, trace);
  }
  return cert;
}

// ---- search ------------------------------------------------------------

namespace {

// Candidate order for the search oracle: row-major, smaller magnitude first,
// positive before negative at equal magnitude.
bool search_less(const IntMatrix& a, const IntMatrix& b) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Int &x = a.at(i, j), &y = b.at(i, j);
      if (abs(x) != abs(y)) return abs(x) < abs(y);
      if (x != y) return x > y;
    }
  return false;
}

void enumerate_diagonals(const Int& bound, std::size_t r, std::vector<Int>& diag,
                         const std::function<void()>& emit) {
  if (diag.size() == r) {
    emit();
    return;
  }
  Int lo = diag.empty() ? Int(1) : diag.back();
  Int prod = 1;
  for (const Int& d : diag) prod *= d;
  for (Int d = lo; prod * d <= bound; ++d) {
    diag.push_back(d);
    enumerate_diagonals(bound, r, diag, emit);
    diag.pop_back();
  }
}

}  // namespace

std::optional<PresentationCertificate> search_definite_presentation(const Int& p, const Int& q,
                                                                    std::size_t max_rank) {
  Int qn = normalize_q(p, q);
  if (p < 2) throw InvalidInput("search_definite_presentation: p must be >= 2");
  if (max_rank < 1 || max_rank > 4)
    throw InvalidInput("search_definite_presentation: max_rank must be in [1,4]");
  CyclicLinkingForm target(p, qn);
  // Hermite's bound keeps a reduced positive definite diagonal product within
  // (4/3)^(r(r-1)/2) det <= 6 det for r <= 4.
  Int bound = 6 * p;
  for (std::size_t r = 1; r <= max_rank; ++r) {
    std::optional<IntMatrix> best;
    std::vector<Int> diag;
    auto try_candidate = [&](const IntMatrix& s) {
      if (determinant(s) != p) return;
      if (best && !search_less(s, *best)) return;
      if (definiteness(s) != Definiteness::PositiveDefinite) return;
      auto cyc = as_cyclic(presented_linking_form(GramPairing(s)));
      if (!cyc || !cyclic_equivalent(*cyc, target)) return;
      best = s;
    };
    std::function<void(IntMatrix&, std::size_t, std::size_t)> fill_off =
        [&](IntMatrix& s, std::size_t i, std::size_t j) {
          if (i + 1 >= r) {
            try_candidate(s);
            return;
          }
          auto [ni, nj] = j + 1 < r ? std::pair{i, j + 1} : std::pair{i + 1, i + 2};
          Int half = s.at(i, i) / 2;  // reduced: 2|g(i,j)| <= g(i,i)
          for (Int v = 0; v <= half; ++v) {
            s.at(i, j) = s.at(j, i) = v;
            fill_off(s, ni, nj);
            if (v != 0) {
              s.at(i, j) = s.at(j, i) = -v;
              fill_off(s, ni, nj);
            }
          }
          s.at(i, j) = s.at(j, i) = 0;
        };
    enumerate_diagonals(bound, r, diag, [&] {
      Int prod = 1;
      for (const Int& d : diag) prod *= d;
      if (prod < p) return;  // det <= product of diagonal for positive definite
      IntMatrix s(r, r);
      for (std::size_t i = 0; i < r; ++i) s.at(i, i) = diag[i];
      if (r == 1) {
        try_candidate(s);
      } else {
        fill_off(s, 0, 1);
      }
    });
    if (best) {
      std::vector<std::string> trace{"exhaustive positive definite search at rank " +
                                     std::to_string(r)};
      return make_cert(p, qn, GramPairing(std::move(*best)), Construction::Search,
                       std::move(trace));
    }
  }
  return std::nullopt;
}

}  // namespace linkform
