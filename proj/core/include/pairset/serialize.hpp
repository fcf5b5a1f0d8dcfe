#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "pairset/avoidability.hpp"
#include "pairset/density.hpp"
#include "pairset/hypergraph.hpp"
#include "pairset/oracle.hpp"

namespace pairset {

// Structured documents emitted by `--format json`. Rationals are objects
// {"p": "<int>", "q": "<int>"} with decimal-string components; counts are
// JSON integers. Every document carries a "schema" tag "pairset.<kind>/1".

nlohmann::json to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PairQuery& pair);
PairQuery pair_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Inequality& ineq);
Inequality inequality_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RealizabilityCheck& check, const std::string& name);

/// {schema, pair, checks[], conclusion, case, k_f, k_fbar, trace[]}.
/// `checks` holds A(f) and A(fbar) as evaluated under `rules`.
nlohmann::json certificate_document(const PairQuery& pair, const std::optional<AvoidabilityCertificate>& cert,
                                    const RealizabilityRules& rules = {});

/// Inverse of certificate_document: nullopt when the conclusion is "not-certified".
std::optional<AvoidabilityCertificate> certificate_from_document(const nlohmann::json& doc);

nlohmann::json to_json(const TheoremMainResult& result);
TheoremMainResult theorem_main_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const DensityBound& bound);
DensityBound density_bound_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const CorollaryRow& row);

nlohmann::json to_json(const ArrowVerdict& verdict);
ArrowVerdict arrow_verdict_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const BlowupReport& report);

nlohmann::json to_json(const Spectrum& spectrum);
Spectrum spectrum_from_json(const nlohmann::json& doc);

}  // namespace pairset
