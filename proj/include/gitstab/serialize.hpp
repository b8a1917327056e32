#pragma once

// Canonical JSON for instances, statuses and reports. Keys are sorted,
// rationals are lowest-terms strings, and no floating point is ever written.
// Vertices are 1-indexed in every persisted artifact.

#include <string>

#include <json.hpp>

#include "gitstab/connectivity.hpp"
#include "gitstab/families.hpp"
#include "gitstab/harness.hpp"

namespace gitstab {

using Json = nlohmann::json;

/// Compact canonical text (sorted keys, no whitespace).
std::string canonical_dump(const Json& j);

Json rational_to_json(const Rational& r);
/// `field` names the offending field in ParseError messages.
Rational rational_from_json(const Json& j, const std::string& field);

Json complex_to_json(const ComplexRational& z);
ComplexRational complex_from_json(const Json& j, const std::string& field);

Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j, const std::string& field);

Json family_to_json(const FamilySpec& f);
FamilySpec family_from_json(const Json& j);

Json instance_to_json(const ModelInstance& x);
/// Parses an instance file; schema errors raise ParseError or ValidationError
/// naming the field.
ModelInstance instance_from_json(const Json& j);

Json one_ps_to_json(const OnePS& lambda);
OnePS one_ps_from_json(const Json& j);

Json stratum_to_json(const StratumClass& s);
StratumClass stratum_from_json(const Json& j);

Json status_to_json(const StabilityStatus& s);
StabilityStatus status_from_json(const Json& j);

Json report_to_json(const ConnectivityReport& r);
ConnectivityReport report_from_json(const Json& j);

Json trial_config_to_json(const TrialConfig& cfg);
TrialConfig trial_config_from_json(const Json& j);

Json harness_report_to_json(const HarnessReport& r);
HarnessReport harness_report_from_json(const Json& j);

}  // namespace gitstab
