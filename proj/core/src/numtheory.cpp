#include "linkform/numtheory.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

namespace linkform::numtheory {

namespace {

Int powmod(const Int& base, const Int& exp, const Int& mod) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned long s) {
  Int x = powmod(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned long i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;  // composite witness found
}

bool fits_u64(const Int& n) { return mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

bool is_prime_trial(const Int& n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  Int d = 3;
  while (d * d <= n) {
    if (n % d == 0) return false;
    d += 2;
  }
  return true;
}

}  // namespace

Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (!fits_u64(n)) return is_prime_trial(n);
  // This witness set is deterministic for all n < 2^64.
  Int d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

Int find_prime_in_progression(const Int& a, const Int& m, std::uint64_t ceiling) {
  if (a < 1 || m < 1) throw InvalidInput("find_prime_in_progression: need a >= 1 and m >= 1");
  if (gcd(a, m) != 1)
    throw InvalidInput("find_prime_in_progression: gcd(a,m) != 1, progression has no primes");
  Int c = a;
  for (std::uint64_t n = 0; n < ceiling; ++n, c += m) {
    if (is_prime(c)) return c;
  }
  throw SearchLimitExceeded("find_prime_in_progression: ceiling exceeded");
}

bool is_quadratic_residue(const Int& q, const Int& p) {
  if (p < 1) throw InvalidInput("is_quadratic_residue: p must be >= 1");
  if (gcd(q, p) != 1) throw InvalidInput("is_quadratic_residue: gcd(q,p) != 1");
  if (p == 1) return true;
  Int r = q % p;
  if (r < 0) r += p;
  for (const auto& [prime, e] : factorize(p)) {
    if (prime == 2) {
      // Units mod 2, 4, 2^k (k>=3): squares are everything, 1 mod 4, 1 mod 8.
      if (e == 2 && r % 4 != 1) return false;
      if (e >= 3 && r % 8 != 1) return false;
    } else {
      // Residue mod an odd prime power iff residue mod the prime.
      if (powmod(r, (prime - 1) / 2, prime) != 1) return false;
    }
  }
  return true;
}

namespace {

Int sqrt_mod_prime(const Int& a, const Int& p) {
  if (p == 2) return a % 2;
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  // Tonelli-Shanks.
  Int q = p - 1;
  unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
  q >>= s;
  Int z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  Int m = s;
  Int c = powmod(z, q, p);
  Int t = powmod(a, q, p);
  Int r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    Int i = 0;
    Int tt = t;
    while (tt != 1) {
      tt = (tt * tt) % p;
      ++i;
    }
    Int b = c;
    for (Int j = 0; j < m - i - 1; ++j) b = (b * b) % p;
    m = i;
    c = (b * b) % p;
    t = (t * c) % p;
    r = (r * b) % p;
  }
  return r;
}

// Root of a mod prime^e by Hensel lifting; a a unit mod prime.
Int sqrt_mod_prime_power(const Int& a, const Int& prime, unsigned e) {
  Int pe;
  mpz_pow_ui(pe.get_mpz_t(), prime.get_mpz_t(), e);
  Int am = a % pe;
  if (am < 0) am += pe;
  if (prime == 2) {
    // Small moduli directly; for 2^k, k>=3, lift from 2^3 upward.
    if (e == 1) return am % 2;
    if (e == 2) return am % 4 == 1 ? 1 : 0;
    Int x = 1;  // a = 1 mod 8, root of a mod 8
    Int mod = 8;
    for (unsigned k = 3; k < e; ++k) {
      Int next = mod * 2;
      if ((x * x - am) % next != 0) x += mod / 2;
      mod = next;
    }
    return x % pe;
  }
  Int x = sqrt_mod_prime(am % prime, prime);
  Int mod = prime;
  for (unsigned k = 1; k < e; ++k) {
    Int next = mod * prime;
    Int f = (x * x - am) % next;
    if (f < 0) f += next;
    // x' = x - f * (2x)^-1 mod next
    Int inv = invert_mod(2 * x % next, next);
    x = (x - f * inv) % next;
    if (x < 0) x += next;
    mod = next;
  }
  return x;
}

}  // namespace

Int invert_mod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw InvalidInput("invert_mod: element not invertible");
  return r;
}

Int sqrt_mod(const Int& q, const Int& p) {
  if (!is_quadratic_residue(q, p)) throw InvalidInput("sqrt_mod: not a quadratic residue");
  if (p == 1) return 0;
  Int a = q % p;
  if (a < 0) a += p;
  if (p < 1'000'000) {
    for (Int u = 0; u < p; ++u) {
      if ((u * u) % p == a) return u;
    }
    throw InvalidInput("sqrt_mod: internal failure");  // unreachable after residue check
  }
  // CRT over the prime-power factorization.
  Int x = 0, mod = 1;
  for (const auto& [prime, e] : factorize(p)) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), prime.get_mpz_t(), e);
    Int r = sqrt_mod_prime_power(a, prime, e);
    // Combine x mod mod with r mod pe.
    Int inv = invert_mod(mod % pe, pe);
    Int t = ((r - x) % pe * inv) % pe;
    if (t < 0) t += pe;
    x += mod * t;
    mod *= pe;
  }
  Int other = mod - x;
  return x < other ? x : other;
}

bool is_three_square_excluded(const Int& n) {
  if (n < 0) throw InvalidInput("is_three_square_excluded: n must be >= 0");
  Int m = n;
  while (m > 0 && m % 4 == 0) m /= 4;
  return m % 8 == 7;
}

ThreeSquares three_squares(const Int& n) {
  if (is_three_square_excluded(n))
    throw InvalidInput("three_squares: n is of the form 4^a(8b+7)");
  Int a1;
  mpz_sqrt(a1.get_mpz_t(), n.get_mpz_t());
  for (; a1 >= 0; --a1) {
    Int r1 = n - a1 * a1;
    Int a2;
    mpz_sqrt(a2.get_mpz_t(), r1.get_mpz_t());
    if (a2 > a1) a2 = a1;
    for (; a2 >= 0; --a2) {
      Int r2 = r1 - a2 * a2;
      if (r2 > a2 * a2) break;  // a3 would exceed a2
      if (mpz_perfect_square_p(r2.get_mpz_t())) {
        Int a3;
        mpz_sqrt(a3.get_mpz_t(), r2.get_mpz_t());
        return {a1, a2, a3};
      }
    }
  }
  throw InvalidInput("three_squares: no decomposition found");  // unreachable (Legendre)
}

namespace {

Int pollard_rho(const Int& n) {
  if (n % 2 == 0) return 2;
  Int x = 2, y = 2, d = 1, c = 1;
  while (true) {
    x = 2; y = 2; d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      d = gcd(abs(x - y), n);
    }
    if (d != n) return d;
    ++c;
  }
}

void factor_rec(Int n, std::vector<Int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Int d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::vector<PrimePower> factorize(Int n) {
  if (n < 1) throw InvalidInput("factorize: n must be >= 1");
  std::vector<Int> primes;
  for (int p : {2, 3, 5, 7, 11, 13}) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_rec(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<PrimePower> out;
  for (const Int& p : primes) {
    if (!out.empty() && out.back().prime == p)
      ++out.back().exponent;
    else
      out.push_back({p, 1});
  }
  return out;
}

int kronecker(const Int& a, const Int& n) {
  return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

}  // namespace linkform::numtheory
