#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "mcf/candidates.hpp"
#include "mcf/expansion.hpp"

namespace mcf {

// Machine output is exact end to end: every number is a string holding a
// reduced rational, never a float. Key order is fixed, so equal inputs
// dump byte-identically.
using Json = nlohmann::ordered_json;

Json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j);

Json field_to_json(const NumberField& f);
Json element_to_json(const FieldElement& e);
Json label_to_json(const StepLabel& l);
Json qtuple_to_json(const QTuple& q);

Json expansion_report(const Expansion& e);
Json candidates_report(const CandidateEnumeration& en, const UnitSystem& units);
Json match_report(const std::optional<Candidate>& match);
Json pure_exclusion_report(const PureExclusionReport& r, const NumberField& field);
Json unit_certificate_to_json(const UnitCertificate& c);
Json family_report(const FamilyPrediction& p);

// Compact rendering of eventually periodic expansions, e.g.
//   (v) = C1 overline( C2^2 C1^2 )
std::string expansion_text(const Expansion& e);

std::string dump_deterministic(const Json& j);

}  // namespace mcf
