#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linkform/forms.hpp"

namespace linkform {

enum class Construction {
  Rank1,
  Rank2BruteForce,
  Rank2Dirichlet,
  Even,
  Definite,
  Plumbing,
  Search,
};

/// A Gram matrix together with the target form it claims to present and the
/// verifier's verdict.  `verified` is always recomputed from scratch against
/// presented_linking_form; construction code never sets it by fiat.
struct PresentationCertificate {
  CyclicLinkingForm target;
  GramPairing gram;
  Construction construction;
  bool verified = false;
  std::vector<std::string> trace;

  std::size_t rank() const { return gram.rank(); }
};

/// Rank-1 presentation [p] or [-p]; exists iff -q or +q is a square mod p.
/// p = 1 yields the empty rank-0 certificate.
std::optional<PresentationCertificate> rank1_presentation(const Int& p, const Int& q);

/// Smallest-coefficient rank-2 presentation with odd parity, found by direct
/// search over b and odd divisors q' with d q' - p b^2 = +-1.
PresentationCertificate rank2_presentation(
    const Int& p, const Int& q,
    std::uint64_t ceiling = numtheory::kDefaultSearchCeiling);

/// Rank-2 presentation via a prime q' = 3 mod 4 in an arithmetic progression
/// and a modular square root, mirroring the existence proof step by step.
PresentationCertificate rank2_constructive(
    const Int& p, const Int& q,
    std::uint64_t ceiling = numtheory::kDefaultSearchCeiling);

/// Even-parity presentation of rank <= 4 built from the rank-2 seed by a
/// characteristic-vector blow-up/blow-down.
PresentationCertificate even_presentation(
    const Int& p, const Int& q,
    std::uint64_t ceiling = numtheory::kDefaultSearchCeiling);

/// Positive definite odd presentation of rank <= 6: the rank-2 seed when it
/// is already positive definite, otherwise one or two rounds of +3<+1> and a
/// (-1)-vector blow-down.
PresentationCertificate definite_presentation(
    const Int& p, const Int& q,
    std::uint64_t ceiling = numtheory::kDefaultSearchCeiling);

/// Completes an arbitrary odd rank-2 presentation of (q/p) to a positive
/// definite one by the same rounds as definite_presentation (0, 1 or 2
/// depending on the seed's definiteness).
PresentationCertificate definite_from_seed(const Int& p, const Int& q, const GramPairing& seed,
                                           std::vector<std::string> trace = {});

/// A vector with negative odd square in an odd, not positive definite
/// pairing.  Prefers a basis vector when one qualifies.
std::vector<Int> negative_odd_vector(const GramPairing& p);

/// Tridiagonal presentation from the Hirzebruch-Jung expansion of p/(p-q).
PresentationCertificate plumbing_presentation(const Int& p, const Int& q);

/// Exhaustive enumeration of positive definite grams with determinant p up
/// to max_rank <= 4; smallest witness in the canonical candidate order, or
/// empty when none exists.
std::optional<PresentationCertificate> search_definite_presentation(
    const Int& p, const Int& q, std::size_t max_rank);

}  // namespace linkform
