#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "linkform/certify.hpp"

namespace linkform::json_io {

using nlohmann::json;

/// Integers serialize as JSON numbers while they fit in 2^53 - 1, as
/// decimal strings beyond; both forms are accepted on input.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

/// {"rank": n, "gram": [[...], ...]} with the integer convention above.
json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

const char* construction_name(Construction c);
const char* parity_name(Parity p);
const char* definiteness_name(Definiteness d);

json certificate_to_json(const PresentationCertificate& cert);

json report_to_json(const EmbeddingReport& rep);
std::string report_to_text(const EmbeddingReport& rep);

}  // namespace linkform::json_io
