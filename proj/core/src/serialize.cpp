#include "pairset/serialize.hpp"

#include "pairset/io.hpp"

namespace pairset {

using nlohmann::json;

json to_json(const Rational& q) { return json{{"p", q.num().str()}, {"q", q.den().str()}}; }

Rational rational_from_json(const json& j) {
  return Rational(BigInt(j.at("p").get<std::string>()), BigInt(j.at("q").get<std::string>()));
}

json to_json(const PairQuery& pair) { return json{{"r", pair.r()}, {"m", pair.m()}, {"f", pair.f()}}; }

PairQuery pair_from_json(const json& j) {
  return PairQuery(j.at("r").get<Int>(), j.at("m").get<Int>(), j.at("f").get<Int>());
}

json to_json(const Inequality& ineq) {
  return json{{"label", ineq.label}, {"lhs", ineq.lhs}, {"rel", to_string(ineq.rel)}, {"rhs", ineq.rhs},
              {"holds", ineq.holds()}};
}

Inequality inequality_from_json(const json& j) {
  return Inequality{j.at("label").get<std::string>(), j.at("lhs").get<Int>(),
                    relation_from_string(j.at("rel").get<std::string>()), j.at("rhs").get<Int>()};
}

json to_json(const RealizabilityCheck& check, const std::string& name) {
  json out{{"name", name}, {"kind", to_string(check.kind)}, {"f", check.pair.f()}, {"realizable", check.realizable()}};
  if (check.witness) {
    out["witness"] = json{{"x", check.witness->x}, {"h", check.witness->h}};
  } else {
    json rejected = json::array();
    for (const auto& rej : check.rejected)
      rejected.push_back(json{{"x", rej.x}, {"h", rej.h}, {"reason", to_string(rej.reason)}, {"limit", rej.limit}});
    out["rejected"] = std::move(rejected);
  }
  return out;
}

namespace {

json optional_int(const std::optional<Int>& v) { return v ? json(*v) : json(nullptr); }

std::optional<Int> optional_int_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<Int>();
}

}  // namespace

json certificate_document(const PairQuery& pair, const std::optional<AvoidabilityCertificate>& cert,
                          const RealizabilityRules& rules) {
  const Int fbar = pair.total() - pair.f();
  json checks = json::array();
  checks.push_back(to_json(realizable_A(pair.m(), pair.f(), pair.r(), rules), "A(f)"));
  checks.push_back(to_json(realizable_A(pair.m(), fbar, pair.r(), rules), "A(fbar)"));
  json doc{{"schema", "pairset.certificate/1"},
           {"pair", to_json(pair)},
           {"checks", std::move(checks)},
           {"conclusion", cert ? "absolutely-avoidable" : "not-certified"}};
  json trace = json::array();
  if (cert) {
    doc["case"] = to_string(cert->kind);
    doc["k_f"] = optional_int(cert->k_f);
    doc["k_fbar"] = optional_int(cert->k_fbar);
    for (const auto& ineq : cert->trace) trace.push_back(to_json(ineq));
  }
  doc["trace"] = std::move(trace);
  return doc;
}

std::optional<AvoidabilityCertificate> certificate_from_document(const json& doc) {
  if (doc.at("conclusion").get<std::string>() != "absolutely-avoidable") return std::nullopt;
  AvoidabilityCertificate cert{pair_from_json(doc.at("pair")),
                               certificate_case_from_string(doc.at("case").get<std::string>()),
                               optional_int_from(doc.at("k_f")), optional_int_from(doc.at("k_fbar")), {}};
  for (const auto& ineq : doc.at("trace")) cert.trace.push_back(inequality_from_json(ineq));
  return cert;
}

json to_json(const TheoremMainResult& result) {
  return json{{"schema", "pairset.theorem-main/1"},
              {"r", result.certificate.pair.r()},
              {"m", result.certificate.pair.m()},
              {"f0", result.f0},
              {"x", result.x},
              {"case", to_string(result.kind)},
              {"f", result.f},
              {"certificate", certificate_document(result.certificate.pair, result.certificate)}};
}

TheoremMainResult theorem_main_from_json(const json& doc) {
  auto cert = certificate_from_document(doc.at("certificate"));
  if (!cert) throw DomainError("theorem-main document without a certificate");
  return TheoremMainResult{doc.at("f").get<Int>(), doc.at("f0").get<Int>(), doc.at("x").get<Int>(),
                           theorem_case_from_string(doc.at("case").get<std::string>()), std::move(*cert)};
}

json to_json(const DensityBound& bound) {
  json out{{"schema", "pairset.density-bound/1"},
           {"pair", to_json(bound.pair)},
           {"bound", to_json(bound.bound)},
           {"l", bound.l_used},
           {"case", to_string(bound.kind)},
           {"justification", bound.justification}};
  out["failing_check"] = bound.failing_check ? json(*bound.failing_check) : json(nullptr);
  return out;
}

DensityBound density_bound_from_json(const json& doc) {
  DensityBound out{pair_from_json(doc.at("pair")),
                   rational_from_json(doc.at("bound")),
                   doc.at("l").get<Int>(),
                   bound_case_from_string(doc.at("case").get<std::string>()),
                   doc.at("justification").get<std::string>(),
                   std::nullopt};
  if (!doc.at("failing_check").is_null()) out.failing_check = doc.at("failing_check").get<std::string>();
  return out;
}

json to_json(const CorollaryRow& row) {
  return json{{"condition", row.condition}, {"bound", to_json(row.bound)}, {"l", row.l},
              {"two_sided", row.two_sided}, {"m_from", optional_int(row.m_from)}};
}

json to_json(const ArrowVerdict& verdict) {
  const auto& q = verdict.query;
  return json{{"schema", "pairset.arrow-verdict/1"},
              {"query", json{{"n", q.n}, {"e", q.e}, {"r", q.r}, {"m", q.m}, {"f", q.f}}},
              {"arrows", verdict.arrows},
              {"graphs_examined", verdict.graphs_examined},
              {"counterexample", verdict.counterexample ? json(serialize(*verdict.counterexample)) : json(nullptr)}};
}

ArrowVerdict arrow_verdict_from_json(const json& doc) {
  const auto& q = doc.at("query");
  ArrowVerdict out{{q.at("n").get<int>(), q.at("e").get<Int>(), q.at("r").get<int>(), q.at("m").get<int>(),
                    q.at("f").get<Int>()},
                   doc.at("arrows").get<bool>(),
                   std::nullopt,
                   doc.at("graphs_examined").get<std::uint64_t>()};
  if (!doc.at("counterexample").is_null())
    out.counterexample = parse_hypergraph(doc.at("counterexample").get<std::string>());
  return out;
}

json to_json(const BlowupReport& report) {
  return json{{"schema", "pairset.blowup-report/1"},
              {"base", to_string(report.base)},
              {"depth", report.depth},
              {"vertices", report.vertices},
              {"edges", report.edges},
              {"recurrence_edges", report.recurrence_edges},
              {"vacuous", report.vacuous},
              {"max_six_set", report.max_six_set},
              {"min_six_set_complement", report.min_six_set_complement},
              {"density", to_json(report.density)},
              {"low_interval", json::array({report.low_interval.first, report.low_interval.second})},
              {"high_interval", json::array({report.high_interval.first, report.high_interval.second})},
              {"covered_sizes", report.covered_sizes},
              {"possible_sizes", report.possible_sizes},
              {"avoids_6_10", report.avoids_6_10}};
}

json to_json(const Spectrum& spectrum) {
  json counts = json::array();
  for (const auto& [f, count] : spectrum.counts) counts.push_back(json::array({f, count}));
  return json{{"schema", "pairset.spectrum/1"}, {"m", spectrum.m}, {"counts", std::move(counts)}};
}

Spectrum spectrum_from_json(const json& doc) {
  Spectrum out;
  out.m = doc.at("m").get<int>();
  for (const auto& entry : doc.at("counts")) out.counts[entry.at(0).get<Int>()] = entry.at(1).get<std::uint64_t>();
  return out;
}

}  // namespace pairset
