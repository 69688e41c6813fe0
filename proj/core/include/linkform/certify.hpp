#pragma once

#include "linkform/presentations.hpp"

namespace linkform {

/// The connected-sum embedding bounds for the lens-space form (q/p), each
/// backed by a verified presentation certificate.  The topological reading
/// (locally flat embeddings in the named connected sums) rests on the
/// Boyer realization of presented pairings by simply connected topological
/// fillings; this report certifies the algebra.
struct EmbeddingReport {
  CyclicLinkingForm target;

  /// Second Betti number of a coboundary: 1 when a rank-1 presentation
  /// exists, else 2; 0 for the trivial form.
  int coboundary_b2 = 0;
  std::optional<PresentationCertificate> coboundary_witness;

  /// Bound for #n (CP^2 # CP^2bar): the rank-2 odd presentation gives 2.
  int cp2_cp2bar_bound = 0;
  std::optional<PresentationCertificate> cp2_cp2bar_witness;

  /// Bound for #n S^2 x S^2: the rank of the even presentation, <= 4.
  std::size_t s2xs2_bound = 0;
  std::optional<PresentationCertificate> s2xs2_witness;

  /// Bound for #n CP^2: rank of a positive definite presentation of (q/p)
  /// plus one of (-q/p); <= 8.
  std::size_t cp2_bound = 0;
  std::optional<PresentationCertificate> definite_witness_pos;
  std::optional<PresentationCertificate> definite_witness_neg;

  /// Literature claim of an embedding in #5 CP^2 when p is odd or
  /// q = +-1 mod p.  Informational only: no algebraic witness constructed.
  bool five_cp2_flag = false;
};

EmbeddingReport embedding_report(const Int& p, const Int& q,
                                 std::uint64_t ceiling = numtheory::kDefaultSearchCeiling);

}  // namespace linkform
