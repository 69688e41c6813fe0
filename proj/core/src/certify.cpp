#include "linkform/certify.hpp"

namespace linkform {

namespace {

// Rounds needed to make a seed positive definite: the cost order used to
// pick between a direct rank-2 seed and the negated seed of the opposite
// orientation (both present the same form).
int rounds_needed(const GramPairing& g) {
  switch (definiteness(g.gram())) {
    case Definiteness::PositiveDefinite: return 0;
    case Definiteness::Indefinite: return 1;
    case Definiteness::NegativeDefinite: return 2;
    case Definiteness::Degenerate: break;
  }
  throw SingularMatrix("embedding_report: degenerate seed");
}

}  // namespace

EmbeddingReport embedding_report(const Int& p, const Int& q, std::uint64_t ceiling) {
  if (p < 1) throw InvalidInput("embedding_report: p must be >= 1");
  if (numtheory::gcd(q, p) != 1) throw InvalidInput("embedding_report: gcd(q,p) != 1");
  EmbeddingReport rep{CyclicLinkingForm(p, p == 1 ? Int(0) : q)};
  if (p == 1) {
    rep.five_cp2_flag = true;
    return rep;
  }
  const Int qn = rep.target.q();
  const Int qneg = p - qn;

  std::optional<PresentationCertificate> r1 = rank1_presentation(p, qn);
  PresentationCertificate r2 = rank2_presentation(p, qn, ceiling);
  if (r1) {
    rep.coboundary_b2 = 1;
    rep.coboundary_witness = *r1;
  } else {
    rep.coboundary_b2 = 2;
    rep.coboundary_witness = r2;
  }
  rep.cp2_cp2bar_bound = 2;
  rep.cp2_cp2bar_witness = r2;

  PresentationCertificate even = even_presentation(p, qn, ceiling);
  rep.s2xs2_bound = even.rank();
  rep.s2xs2_witness = std::move(even);

  // Positive definite witnesses for (q/p) and (-q/p).  Each side may take
  // either its own rank-2 seed or the negation of the other side's seed
  // (which presents the same form); choosing the cheaper of the two keeps
  // the combined rank at 8 or less and symmetric under q <-> -q.
  PresentationCertificate r2neg = rank2_presentation(p, qneg, ceiling);
  GramPairing seed_pos = r2.gram;
  GramPairing seed_neg = r2neg.gram;
  std::vector<std::string> trace_pos = r2.trace;
  std::vector<std::string> trace_neg = r2neg.trace;
  {
    GramPairing alt(-r2neg.gram.gram());
    if (rounds_needed(alt) < rounds_needed(seed_pos)) {
      seed_pos = std::move(alt);
      trace_pos = r2neg.trace;
      trace_pos.push_back("seed taken as the negated rank-2 pairing of the reversed orientation");
    }
  }
  {
    GramPairing alt(-r2.gram.gram());
    if (rounds_needed(alt) < rounds_needed(seed_neg)) {
      seed_neg = std::move(alt);
      trace_neg = r2.trace;
      trace_neg.push_back("seed taken as the negated rank-2 pairing of the reversed orientation");
    }
  }
  PresentationCertificate def_pos = definite_from_seed(p, qn, seed_pos, std::move(trace_pos));
  PresentationCertificate def_neg = definite_from_seed(p, qneg, seed_neg, std::move(trace_neg));
  rep.cp2_bound = def_pos.rank() + def_neg.rank();
  rep.definite_witness_pos = std::move(def_pos);
  rep.definite_witness_neg = std::move(def_neg);

  rep.five_cp2_flag = p % 2 == 1 || qn == 1 || qneg == 1;
  return rep;
}

}  // namespace linkform
