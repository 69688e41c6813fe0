#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "linkform/certify.hpp"
#include "linkform/json_io.hpp"
#include "linkform/presentations.hpp"

namespace {

using linkform::Int;
using nlohmann::json;

Int parse_int(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    throw linkform::InvalidInput("not an integer: '" + s + "'");
  }
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int cmd_present(const std::string& ps, const std::string& qs, const std::string& target,
                std::size_t max_rank, std::uint64_t ceiling) {
  Int p = parse_int(ps), q = parse_int(qs);
  std::optional<linkform::PresentationCertificate> cert;
  if (target == "rank1") {
    cert = linkform::rank1_presentation(p, q);
    if (!cert) {
      std::cerr << "no rank-1 presentation: neither +-" << q.get_str() << " is a square mod "
                << p.get_str() << "\n";
      return 1;
    }
  } else if (target == "rank2") {
    cert = linkform::rank2_presentation(p, q, ceiling);
  } else if (target == "rank2-constructive") {
    cert = linkform::rank2_constructive(p, q, ceiling);
  } else if (target == "even") {
    cert = linkform::even_presentation(p, q, ceiling);
  } else if (target == "definite") {
    cert = linkform::definite_presentation(p, q, ceiling);
  } else if (target == "plumbing") {
    cert = linkform::plumbing_presentation(p, q);
  } else if (target == "search") {
    cert = linkform::search_definite_presentation(p, q, max_rank);
    if (!cert) {
      std::cerr << "no positive definite presentation of rank <= " << max_rank << " found\n";
      return 1;
    }
  } else {
    std::cerr << "unknown --target '" << target << "'\n";
    return 2;
  }
  emit(linkform::json_io::certificate_to_json(*cert));
  return cert->verified ? 0 : 1;
}

int cmd_verify(const std::string& ps, const std::string& qs, const std::string& matrix_file) {
  Int p = parse_int(ps), q = parse_int(qs);
  linkform::CyclicLinkingForm target(p, p == 1 ? Int(0) : q);

  json doc;
  try {
    if (matrix_file.empty()) {
      doc = json::parse(std::cin);
    } else {
      std::ifstream in(matrix_file);
      if (!in) throw linkform::InvalidInput("cannot open matrix file '" + matrix_file + "'");
      doc = json::parse(in);
    }
  } catch (const json::parse_error& e) {
    throw linkform::InvalidInput(std::string("malformed matrix JSON: ") + e.what());
  }
  linkform::IntMatrix m = linkform::json_io::matrix_from_json(doc);
  linkform::GramPairing gram(std::move(m));  // throws SingularMatrix when degenerate

  linkform::FiniteLinkingForm form = linkform::presented_linking_form(gram);
  auto cyc = linkform::as_cyclic(form);
  bool presents = abs(gram.det()) == target.p() && cyc && cyclic_equivalent(*cyc, target);

  json factors = json::array();
  for (const Int& f : form.invariant_factors)
    factors.push_back(linkform::json_io::int_to_json(f));
  json presented{{"invariant_factors", std::move(factors)}};
  if (cyc) presented["cyclic_q_canonical"] = linkform::json_io::int_to_json(canonical_q(*cyc));
  emit(json{{"presents", presents},
            {"presented", std::move(presented)},
            {"det", linkform::json_io::int_to_json(gram.det())}});
  return presents ? 0 : 1;
}

int cmd_certify(const std::string& ps, const std::string& qs, bool as_json,
                std::uint64_t ceiling) {
  Int p = parse_int(ps), q = parse_int(qs);
  linkform::EmbeddingReport rep = linkform::embedding_report(p, q, ceiling);
  if (as_json)
    emit(linkform::json_io::report_to_json(rep));
  else
    std::cout << linkform::json_io::report_to_text(rep);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and verify intersection-pairing presentations of lens-space "
               "linking forms (q/p)"};
  app.require_subcommand(1);

  std::string p, q, target = "rank2", matrix_file;
  std::size_t max_rank = 4;
  std::uint64_t ceiling = linkform::numtheory::kDefaultSearchCeiling;
  bool as_json = false;

  CLI::App* present = app.add_subcommand("present", "Construct a presentation certificate");
  present->add_option("p", p, "Order of the cyclic group")->required();
  present->add_option("q", q, "Class of the linking form (q/p)")->required();
  present->add_option("--target", target,
                      "rank1|rank2|rank2-constructive|even|definite|plumbing|search");
  present->add_option("--max-rank", max_rank, "Rank cap for --target search");
  present->add_option("--ceiling", ceiling, "Search-step ceiling");

  CLI::App* verify = app.add_subcommand("verify", "Verify that a Gram matrix presents (q/p)");
  verify->add_option("p", p, "Order of the cyclic group")->required();
  verify->add_option("q", q, "Class of the linking form (q/p)")->required();
  verify->add_option("--matrix-file", matrix_file,
                     "Matrix JSON document (standard input when omitted)");

  CLI::App* certify = app.add_subcommand("certify", "Emit the embedding-bound report");
  certify->add_option("p", p, "Order of the cyclic group")->required();
  certify->add_option("q", q, "Class of the linking form (q/p)")->required();
  certify->add_flag("--json", as_json, "Machine-readable JSON output");
  certify->add_option("--ceiling", ceiling, "Search-step ceiling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (present->parsed()) return cmd_present(p, q, target, max_rank, ceiling);
    if (verify->parsed()) return cmd_verify(p, q, matrix_file);
    return cmd_certify(p, q, as_json, ceiling);
  } catch (const linkform::SingularMatrix& e) {
    std::cerr << "singular matrix: " << e.what() << "\n";
    return 2;
  } catch (const linkform::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
