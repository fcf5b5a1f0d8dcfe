#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pairset/avoidability.hpp"
#include "pairset/rational.hpp"

namespace pairset {

enum class BoundCase { OneSided, TwoSided, ZeroCertificate };

std::string to_string(BoundCase c);
BoundCase bound_case_from_string(const std::string& text);

/// Exact upper bound on the density of (m, f).
struct DensityBound {
  PairQuery pair;
  Rational bound;
  Int l_used = 0;  ///< 0 for zero certificates
  BoundCase kind = BoundCase::OneSided;
  std::string justification;
  /// For zero certificates: which realizability check is absent ("A(f)", ...).
  std::optional<std::string> failing_check;
};

/// Zero when any of the four realizability checks is absent; otherwise the
/// best Turán-type bound over r <= l <= l_max(m, r):
///   1 - 2 (l)_r / l^r  if t_r(m,l) < f < C(m,r) - t_r(m,l)
///   1 -   (l)_r / l^r  otherwise.
/// Requires m > r >= 3.
DensityBound sigma_upper(Int m, Int f, Int r, const RealizabilityRules& rules = {});

struct CorollaryRow {
  std::string condition;
  Rational bound;
  Int l = 0;
  bool two_sided = false;
  std::optional<Int> m_from;  ///< row applies for m >= m_from (checked up to the scan limit)
};

/// Bounds for r in {3, 4}, derived from turan_ratio and l_max only:
/// the generic l = r row, the two-sided l = r row, then one row per l up to
/// the largest l with (l)_r / l^r < 1/2, each with the first m from which
/// l_max(m, r) >= l across [m, scan_limit].
std::vector<CorollaryRow> corollary_table(Int r, Int scan_limit = 2000);

/// Sidorenko lower and de Caen upper bounds on the Turán density of K_m^(r):
///   1 - ((r-1)/(m-1))^(r-1)  <=  pi  <=  1 - 1/C(m-1, r-1).
/// Requires m > r >= 2.
std::pair<Rational, Rational> turan_density_bracket(Int m, Int r);

}  // namespace pairset
