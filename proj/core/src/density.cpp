#include "pairset/density.hpp"

namespace pairset {

std::string to_string(BoundCase c) {
  switch (c) {
    case BoundCase::OneSided: return "one-sided";
    case BoundCase::TwoSided: return "two-sided";
    case BoundCase::ZeroCertificate: return "zero-certificate";
  }
  return "?";
}

BoundCase bound_case_from_string(const std::string& text) {
  if (text == "one-sided") return BoundCase::OneSided;
  if (text == "two-sided") return BoundCase::TwoSided;
  if (text == "zero-certificate") return BoundCase::ZeroCertificate;
  throw DomainError("unknown bound case '" + text + "'");
}

DensityBound sigma_upper(Int m, Int f, Int r, const RealizabilityRules& rules) {
  if (r < 3) throw DomainError("sigma_upper requires r >= 3");
  if (m <= r) throw DomainError("sigma_upper requires m > r");
  const PairQuery pair(r, m, f);

  const auto checks = four_checks(m, f, r, rules);
  if (auto absent = checks.first_absent()) {
    return DensityBound{pair, Rational(0), 0, BoundCase::ZeroCertificate,
                        "realizability check " + absent->first + " is absent", absent->first};
  }

  const Int top = l_max(m, r);
  std::optional<DensityBound> best;
  for (Int l = r; l <= top; ++l) {
    const Int t = turan_count(m, l, r);
    const Rational ratio = turan_ratio(l, r);
    const bool two_sided = t < f && f < pair.total() - t;
    const Rational bound = two_sided ? Rational(1) - Rational(2) * ratio : Rational(1) - ratio;
    if (!best || bound < best->bound) {
      best = DensityBound{pair,
                          bound,
                          l,
                          two_sided ? BoundCase::TwoSided : BoundCase::OneSided,
                          two_sided ? "t_r(m,l) < f < C(m,r) - t_r(m,l) at l=" + std::to_string(l)
                                    : "Turán-partite bound at l=" + std::to_string(l),
                          std::nullopt};
    }
  }
  return *best;
}

std::vector<CorollaryRow> corollary_table(Int r, Int scan_limit) {
  if (r != 3 && r != 4) throw DomainError("corollary_table supports r in {3, 4}, got " + std::to_string(r));
  std::vector<CorollaryRow> rows;
  const Rational base = turan_ratio(r, r);
  rows.push_back({"generic, l=" + std::to_string(r), Rational(1) - base, r, false, std::nullopt});
  rows.push_back({"t_r(m," + std::to_string(r) + ") < f < C(m,r) - t_r(m," + std::to_string(r) + ")",
                  Rational(1) - Rational(2) * base, r, true, std::nullopt});

  const Rational half(BigInt(1), BigInt(2));
  for (Int l = r + 1; turan_ratio(l, r) < half; ++l) {
    // First m from which l_max(m, r) >= l holds for every m up to scan_limit.
    std::optional<Int> from;
    for (Int m = scan_limit; m > r; --m) {
      if (l_max(m, r) < l) break;
      from = m;
    }
    rows.push_back({from ? "m >= " + std::to_string(*from) + " (scanned to " + std::to_string(scan_limit) + ")"
                         : "not reached by m=" + std::to_string(scan_limit),
                    Rational(1) - turan_ratio(l, r), l, false, from});
  }
  return rows;
}

std::pair<Rational, Rational> turan_density_bracket(Int m, Int r) {
  if (r < 2) throw DomainError("turan_density_bracket requires r >= 2");
  if (m <= r) throw DomainError("turan_density_bracket requires m > r");
  BigInt num = 1;
  BigInt den = 1;
  for (Int i = 0; i < r - 1; ++i) {
    num *= (r - 1);
    den *= (m - 1);
  }
  Rational lower = Rational(1) - Rational(num, den);
  BigInt c = 1;  // C(m-1, r-1) without overflow
  for (Int i = 0; i < r - 1; ++i) c = c * (m - 1 - i) / (i + 1);
  Rational upper = Rational(1) - Rational(BigInt(1), c);
  return {lower, upper};
}

}  // namespace pairset
