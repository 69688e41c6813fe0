#pragma once

#include <optional>
#include <vector>

#include "linkform/intmatrix.hpp"

namespace linkform {

enum class Parity { Odd, Even };

/// A nondegenerate symmetric integer bilinear form in a fixed basis.
class GramPairing {
public:
  /// The empty rank-0 pairing.
  GramPairing() = default;

  /// Validates symmetry and nondegeneracy.
  explicit GramPairing(IntMatrix gram);

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  Int det() const { return determinant(gram_); }

  /// v . w under the form.
  Int dot(const std::vector<Int>& v, const std::vector<Int>& w) const;

private:
  IntMatrix gram_;
};

/// The form (q/p) on Z/p: generators pair to q/p mod 1.  p = 1 is the
/// trivial form, stored as (1, 0).
class CyclicLinkingForm {
public:
  CyclicLinkingForm(const Int& p, const Int& q);

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }

  friend bool operator==(const CyclicLinkingForm&, const CyclicLinkingForm&) = default;

private:
  Int p_, q_;  // q reduced to [0, p)
};

/// A linking form on a finite abelian group, generators ordered by the
/// invariant-factor chain d1 | d2 | ... (all > 1).
struct FiniteLinkingForm {
  std::vector<Int> invariant_factors;
  RatMatrix pairing_mod1;  // entries in [0,1)

  Int group_order() const;
};

Parity parity(const GramPairing& p);

GramPairing direct_sum(const GramPairing& a, const GramPairing& b);

/// True iff S v = diag(S) mod 2 componentwise.
bool is_characteristic(const GramPairing& p, const std::vector<Int>& v);

/// Some characteristic vector with coordinates in {0, 1}.
std::vector<Int> characteristic_vector(const GramPairing& p);

/// Every characteristic class mod 2S, each as a 0/1 representative, in
/// lexicographic order.  A single class when det is odd.
std::vector<std::vector<Int>> characteristic_vectors_mod2(const GramPairing& p);

struct BlowDownResult {
  GramPairing complement;         // the form on the orthogonal complement of v
  IntMatrix basis_map;            // (n-1) x n: complement basis in the old basis
};

/// Orthogonal complement of a (+-1)-square vector, with the basis change.
BlowDownResult blow_down(const GramPairing& p, const std::vector<Int>& v);

/// The linking form on coker(S) via the pairing -S^{-1} mod 1 on the
/// Smith-normal-form generators.
FiniteLinkingForm presented_linking_form(const GramPairing& p);

/// The (p, q) view when the group is cyclic; empty otherwise.
std::optional<CyclicLinkingForm> as_cyclic(const FiniteLinkingForm& l);

/// Equality of (q/p) forms up to multiplying q by the square of a unit.
bool cyclic_equivalent(const CyclicLinkingForm& a, const CyclicLinkingForm& b);

CyclicLinkingForm negate(const CyclicLinkingForm& l);

/// Smallest representative of {u^2 q mod p : u a unit}; 0 for p = 1.
Int canonical_q(const CyclicLinkingForm& l);

/// Isomorphism of finite linking forms.  Handles cyclic groups and groups
/// with at most two invariant factors of order <= 10^4; throws Unsupported
/// beyond that envelope.
bool is_isomorphic(const FiniteLinkingForm& a, const FiniteLinkingForm& b);

}  // namespace linkform
