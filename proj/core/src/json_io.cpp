#include "linkform/json_io.hpp"

#include <sstream>

namespace linkform::json_io {

namespace {

const Int kJsonMax = (Int(1) << 53) - 1;

}  // namespace

json int_to_json(const Int& v) {
  if (abs(v) <= kJsonMax) return json(v.get_si());
  return json(v.get_str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw InvalidInput("expected an integer (number or decimal string)");
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"rank", m.rows()}, {"gram", std::move(rows)}};
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("gram"))
    throw InvalidInput("matrix document must have 'rank' and 'gram'");
  std::size_t n = j.at("rank").get<std::size_t>();
  const json& g = j.at("gram");
  if (!g.is_array() || g.size() != n)
    throw InvalidInput("matrix document: 'gram' must have 'rank' rows");
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = g.at(i);
    if (!row.is_array() || row.size() != n)
      throw InvalidInput("matrix document: rows must have 'rank' entries");
    for (std::size_t k = 0; k < n; ++k) m.at(i, k) = int_from_json(row.at(k));
  }
  if (!m.is_symmetric()) throw InvalidInput("matrix document: matrix is not symmetric");
  return m;
}

const char* construction_name(Construction c) {
  switch (c) {
    case Construction::Rank1: return "rank1";
    case Construction::Rank2BruteForce: return "rank2";
    case Construction::Rank2Dirichlet: return "rank2-constructive";
    case Construction::Even: return "even";
    case Construction::Definite: return "definite";
    case Construction::Plumbing: return "plumbing";
    case Construction::Search: return "search";
  }
  return "?";
}

const char* parity_name(Parity p) { return p == Parity::Odd ? "odd" : "even"; }

const char* definiteness_name(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return "positive-definite";
    case Definiteness::NegativeDefinite: return "negative-definite";
    case Definiteness::Indefinite: return "indefinite";
    case Definiteness::Degenerate: return "degenerate";
  }
  return "?";
}

json certificate_to_json(const PresentationCertificate& cert) {
  json doc = matrix_to_json(cert.gram.gram());
  return json{
      {"target", {{"p", int_to_json(cert.target.p())}, {"q", int_to_json(cert.target.q())}}},
      {"construction", construction_name(cert.construction)},
      {"rank", cert.rank()},
      {"gram", doc.at("gram")},
      {"parity", parity_name(parity(cert.gram))},
      {"definiteness", definiteness_name(definiteness(cert.gram.gram()))},
      {"det", int_to_json(cert.gram.det())},
      {"verified", cert.verified},
      {"trace", cert.trace},
  };
}

json report_to_json(const EmbeddingReport& rep) {
  auto wit = [](const std::optional<PresentationCertificate>& c) {
    return c ? certificate_to_json(*c) : json(nullptr);
  };
  return json{
      {"target", {{"p", int_to_json(rep.target.p())}, {"q", int_to_json(rep.target.q())}}},
      {"coboundary", {{"b2", rep.coboundary_b2}, {"witness", wit(rep.coboundary_witness)}}},
      {"cp2_cp2bar", {{"bound", rep.cp2_cp2bar_bound}, {"witness", wit(rep.cp2_cp2bar_witness)}}},
      {"s2xs2", {{"bound", rep.s2xs2_bound}, {"witness", wit(rep.s2xs2_witness)}}},
      {"cp2",
       {{"bound", rep.cp2_bound},
        {"witness_pos", wit(rep.definite_witness_pos)},
        {"witness_neg", wit(rep.definite_witness_neg)}}},
      {"five_cp2",
       {{"flag", rep.five_cp2_flag},
        {"note", "literature claim; informational only, no algebraic witness"}}},
  };
}

namespace {

std::string gram_line(const std::optional<PresentationCertificate>& c) {
  if (!c) return "(none)";
  std::ostringstream os;
  const IntMatrix& m = c->gram.gram();
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.at(i, j).get_str();
  }
  os << "]" << (c->verified ? " (verified)" : " (NOT verified)");
  return os.str();
}

}  // namespace

std::string report_to_text(const EmbeddingReport& rep) {
  std::ostringstream os;
  os << "embedding report for (q/p) = (" << rep.target.q().get_str() << "/"
     << rep.target.p().get_str() << ")\n";
  os << "  coboundary b2      : " << rep.coboundary_b2 << "  witness "
     << gram_line(rep.coboundary_witness) << "\n";
  os << "  # CP2 # CP2bar     : " << rep.cp2_cp2bar_bound << "  witness "
     << gram_line(rep.cp2_cp2bar_witness) << "\n";
  os << "  # S2 x S2          : " << rep.s2xs2_bound << "  witness "
     << gram_line(rep.s2xs2_witness) << "\n";
  os << "  # CP2              : " << rep.cp2_bound << "  witness+ "
     << gram_line(rep.definite_witness_pos) << "  witness- "
     << gram_line(rep.definite_witness_neg) << "\n";
  os << "  5 CP2 claim        : " << (rep.five_cp2_flag ? "applies" : "not applicable")
     << " (literature claim; informational only, no algebraic witness)\n";
  return os.str();
}

}  // namespace linkform::json_io
