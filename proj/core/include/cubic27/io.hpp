#pragma once

#include <string>

#include "cubic27/degenerate.hpp"
#include "cubic27/exceptional.hpp"
#include "cubic27/pencil.hpp"

// single-header nlohmann/json from vendor/; the ordered variant keeps
// output byte-stable
#include "json.hpp"

namespace cubic27 {

using Json = nlohmann::ordered_json;

// ---- parsing ----
std::array<ProjPoint, 6> parse_config_points(const Json& doc);
SixPointConfig parse_config(const Json& doc);
SixPointConfig load_config_file(const std::string& path);
Json load_json_file(const std::string& path);
HomogPoly parse_curve(const Json& doc);
ExtraCurveCertificate parse_certificate(const Json& doc);

// certificate documents bundle a configuration with the certificate
struct CertificateDocument {
  SixPointConfig config;
  ExtraCurveCertificate certificate;
};
CertificateDocument parse_certificate_document(const Json& doc);
Json certificate_document_json(const SixPointConfig& config, const ExtraCurveCertificate& cert);

// ---- emission ----
Json config_json(const SixPointConfig& config);
Json point_json(const ProjPoint& p);
Json curve_json(const HomogPoly& F);
Json genericity_json(const GenericityReport& rep);
Json support_json(const SupportReport& rep);
Json incidence_json(const IncidenceReport& rep);
Json profile_json(const MultiplicityProfile& p);
Json exceptional_json(const ExceptionalLocusReport& rep);
Json pencil_json(const PencilDiscriminantReport& rep);
Json witness_polynomial_json(const WitnessPolynomial& w);
Json verification_json(const VerificationReport& rep);

std::string rational_str(const Rational& q);

}  // namespace cubic27
