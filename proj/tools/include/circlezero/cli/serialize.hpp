/*
   Copyright 2026 The circlezero Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#ifndef CIRCLEZERO_CLI_SERIALIZE_HPP
#define CIRCLEZERO_CLI_SERIALIZE_HPP

#include "json.hpp"
#include <string>
#include <vector>

#include "circlezero/approx.hpp"
#include "circlezero/families.hpp"
#include "circlezero/identities.hpp"
#include "circlezero/verify.hpp"

namespace circlezero::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "circlezero/1";

std::string rational_string(const exact::BigRational& q);

Json to_json(const precision::RealEnclosure& x);
Json to_json(const precision::ComplexEnclosure& z);
Json to_json(const families::ZetaCoefficient& c);
Json to_json(const families::FamilyPoly& p);
Json to_json(const verify::VerificationReport& r);
Json to_json(const verify::CriteriaReport& r);
Json to_json(const approx::ApproxResult& r);
Json to_json(const approx::SeriesEvaluation& e);
Json to_json(const identities::ObservationReport& r);
Json to_json(const identities::ExactIdentity& r);

/// Flat CSV projection: enclosures become <name>_mid, <name>_rad columns.
/// Works on an array of flat-ish JSON objects (nested enclosure objects and
/// re/im pairs are flattened, arrays are joined with ';').
std::string to_csv(const Json& rows);
/// One "key=value" line per row.
std::string to_text(const Json& rows);

}  // namespace circlezero::cli

#endif  // CIRCLEZERO_CLI_SERIALIZE_HPP
