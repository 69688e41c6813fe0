#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "linkform/errors.hpp"

namespace linkform {

using Int = mpz_class;
using Rat = mpq_class;

namespace numtheory {

inline constexpr std::uint64_t kDefaultSearchCeiling = 1'000'000;

struct PrimePower {
  Int prime;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct ThreeSquares {
  Int a1, a2, a3;  // a1 >= a2 >= a3 >= 0
  friend bool operator==(const ThreeSquares&, const ThreeSquares&) = default;
};

/// gcd(0,0) = 0; result is always nonnegative.
Int gcd(const Int& a, const Int& b);

/// Deterministic for all 64-bit inputs (fixed Miller-Rabin witness set);
/// trial division beyond that.
bool is_prime(const Int& n);

/// Smallest prime of the form a + n*m, n >= 0.  Requires gcd(a,m)=1.
/// Throws SearchLimitExceeded after `ceiling` candidates.
Int find_prime_in_progression(const Int& a, const Int& m,
                              std::uint64_t ceiling = kDefaultSearchCeiling);

/// Is q a square in the unit group of Z/p?  Correct for composite p.
/// Requires p >= 1 and gcd(q,p)=1.
bool is_quadratic_residue(const Int& q, const Int& p);

/// A square root of q mod p, normalized to the smallest nonnegative root
/// for p below 10^6 (exhaustive), otherwise via factorization + CRT with
/// Hensel lifting.  Requires is_quadratic_residue(q,p).
Int sqrt_mod(const Int& q, const Int& p);

/// True iff n = 4^a (8b+7), the excluded class for sums of three squares.
bool is_three_square_excluded(const Int& n);

/// Decomposition n = a1^2 + a2^2 + a3^2 with a1 >= a2 >= a3 >= 0,
/// lexicographically greatest in (a1, a2).  Throws InvalidInput on the
/// excluded class.
ThreeSquares three_squares(const Int& n);

/// Prime factorization of n >= 1, primes ascending; empty for n = 1.
std::vector<PrimePower> factorize(Int n);

/// Kronecker symbol (a|n).
int kronecker(const Int& a, const Int& n);

/// a^-1 mod m.  Requires gcd(a,m)=1.
Int invert_mod(const Int& a, const Int& m);

}  // namespace numtheory
}  // namespace linkform
