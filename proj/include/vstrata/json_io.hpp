#ifndef VSTRATA_JSON_IO_HPP
#define VSTRATA_JSON_IO_HPP

#include "vstrata/certificate.hpp"
#include "vstrata/construct.hpp"
#include "vstrata/forms.hpp"
#include "vstrata/schemes.hpp"
#include "vstrata/strata.hpp"
#include "vstrata/sylvester.hpp"
#include "vstrata/terracini.hpp"

#include <json.hpp>

#include <string>

namespace vstrata {

using Json = nlohmann::json;

Json vector_to_json(const QVector& v);
// `where` names the location for error messages, e.g. "components[2].point".
QVector vector_from_json(const Json& j, const std::string& where);

Json form_to_json(const Form& f);
Form form_from_json(const Json& j);

Json component_to_json(const ComponentSpec& c);
Json scheme_to_json(const SchemeSpec& z);
// Builds and validates; malformed fields raise InputError naming their location.
SchemeSpec scheme_from_json(const Json& j);

Json label_to_json(const StratumLabel& l);
Json decomposition_to_json(const DecompositionRecord& r);
Json certificate_to_json(const Certificate& c);
Json report_to_json(const StratificationReport& r);
Json terracini_to_json(const TerraciniResult& r);
Json gamma_to_json(const GammaReport& r);
Json sylvester_to_json(const SylvesterResult& r);
Json construction_to_json(const Construction& c);

// Parses JSON text, turning syntax errors into InputError with the byte offset.
Json parse_json_text(const std::string& text, const std::string& source);

} // namespace vstrata

#endif // VSTRATA_JSON_IO_HPP
