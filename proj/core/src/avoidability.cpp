#include "pairset/avoidability.hpp"

#include <algorithm>

namespace pairset {

std::string to_string(RealizationKind kind) {
  return kind == RealizationKind::CliquePlusBounded ? "clique-plus-bounded" : "complement-type";
}

std::string to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::Negative: return "negative";
    case RejectReason::ExceedsWindow: return "exceeds-window";
    case RejectReason::ExceedsCapacity: return "exceeds-capacity";
  }
  return "?";
}

namespace {

bool within_window(Int h, Int m, Window window) { return window == Window::Strict ? h < m : h <= m; }

Int window_limit(Int m, Window window) { return window == Window::Strict ? m - 1 : m; }

}  // namespace

RealizabilityCheck realizable_A(Int m, Int f, Int r, const RealizabilityRules& rules) {
  RealizabilityCheck out{PairQuery(r, m, f), RealizationKind::CliquePlusBounded, std::nullopt, {}};
  std::vector<RejectedClique> rejected;
  for (Int x = m; x >= 0; --x) {
    const Int h = f - binomial(x, r);
    if (h < 0) {
      rejected.push_back({x, h, RejectReason::Negative, 0});
      continue;
    }
    if (!within_window(h, m, rules.window)) {
      rejected.push_back({x, h, RejectReason::ExceedsWindow, window_limit(m, rules.window)});
      continue;
    }
    const Int capacity = binomial(m - x, r);
    if (rules.vertex_capacity && h > capacity) {
      rejected.push_back({x, h, RejectReason::ExceedsCapacity, capacity});
      continue;
    }
    out.witness = RealizabilityWitness{RealizationKind::CliquePlusBounded, x, h};
    return out;
  }
  std::reverse(rejected.begin(), rejected.end());
  out.rejected = std::move(rejected);
  return out;
}

RealizabilityCheck realizable_B(Int m, Int f, Int r, const RealizabilityRules& rules) {
  RealizabilityCheck out{PairQuery(r, m, f), RealizationKind::ComplementType, std::nullopt, {}};
  std::vector<RejectedClique> rejected;
  for (Int x = m; x >= 0; --x) {
    const Int cx = binomial(x, r);
    const Int h = cx - f;
    if (h < 0) {
      rejected.push_back({x, h, RejectReason::Negative, 0});
      continue;
    }
    if (!within_window(h, m, rules.window)) {
      rejected.push_back({x, h, RejectReason::ExceedsWindow, window_limit(m, rules.window)});
      continue;
    }
    // h <= C(x, r) holds since f >= 0.
    out.witness = RealizabilityWitness{RealizationKind::ComplementType, x, h};
    return out;
  }
  std::reverse(rejected.begin(), rejected.end());
  out.rejected = std::move(rejected);
  return out;
}

bool FourChecks::all_realizable() const noexcept {
  return a_f.realizable() && a_fbar.realizable() && b_f.realizable() && b_fbar.realizable();
}

std::optional<std::pair<std::string, const RealizabilityCheck*>> FourChecks::first_absent() const {
  if (!a_f.realizable()) return std::make_pair(std::string("A(f)"), &a_f);
  if (!a_fbar.realizable()) return std::make_pair(std::string("A(fbar)"), &a_fbar);
  if (!b_f.realizable()) return std::make_pair(std::string("B(f)"), &b_f);
  if (!b_fbar.realizable()) return std::make_pair(std::string("B(fbar)"), &b_fbar);
  return std::nullopt;
}

FourChecks four_checks(Int m, Int f, Int r, const RealizabilityRules& rules) {
  const PairQuery pair(r, m, f);
  const Int fbar = pair.total() - f;
  return FourChecks{realizable_A(m, f, r, rules), realizable_A(m, fbar, r, rules), realizable_B(m, f, r, rules),
                    realizable_B(m, fbar, r, rules)};
}

std::optional<Int> gap_mainclaim(Int m, Int f, Int r) {
  PairQuery(r, m, f);
  // Only the decomposition x can satisfy C(k,r) <= f < C(k+1,r) with a gap.
  const auto d = binom_decompose(f, r);
  const Int k = d.x;
  if (checked_add(binomial(k, r), m) < f && f < binomial(k + 1, r)) return k;
  return std::nullopt;
}

std::optional<Int> gap_mainclaim2(Int m, Int f, Int r) {
  PairQuery(r, m, f);
  const auto d = binom_decompose(f, r);
  // C(k-1,r) < f forces k-1 <= x; f < C(k,r) - m <= C(k,r) forces k >= x+1.
  const Int k = d.x + 1;
  if (binomial(k - 1, r) < f && checked_add(f, m) < binomial(k, r)) return k;
  return std::nullopt;
}

std::string to_string(Relation rel) {
  switch (rel) {
    case Relation::Less: return "<";
    case Relation::LessEqual: return "<=";
    case Relation::Greater: return ">";
    case Relation::GreaterEqual: return ">=";
    case Relation::Equal: return "==";
  }
  return "?";
}

Relation relation_from_string(const std::string& text) {
  if (text == "<") return Relation::Less;
  if (text == "<=") return Relation::LessEqual;
  if (text == ">") return Relation::Greater;
  if (text == ">=") return Relation::GreaterEqual;
  if (text == "==") return Relation::Equal;
  throw DomainError("unknown relation '" + text + "'");
}

bool Inequality::holds() const noexcept {
  switch (rel) {
    case Relation::Less: return lhs < rhs;
    case Relation::LessEqual: return lhs <= rhs;
    case Relation::Greater: return lhs > rhs;
    case Relation::GreaterEqual: return lhs >= rhs;
    case Relation::Equal: return lhs == rhs;
  }
  return false;
}

std::string Inequality::str() const {
  return label + ": " + std::to_string(lhs) + " " + to_string(rel) + " " + std::to_string(rhs);
}

std::string to_string(CertificateCase c) {
  switch (c) {
    case CertificateCase::GapAtF: return "gap-at-f";
    case CertificateCase::GapAtComplement: return "gap-at-complement";
    case CertificateCase::Both: return "both";
    case CertificateCase::ScanOnly: return "scan-only";
  }
  return "?";
}

CertificateCase certificate_case_from_string(const std::string& text) {
  if (text == "gap-at-f") return CertificateCase::GapAtF;
  if (text == "gap-at-complement") return CertificateCase::GapAtComplement;
  if (text == "both") return CertificateCase::Both;
  if (text == "scan-only") return CertificateCase::ScanOnly;
  throw DomainError("unknown certificate case '" + text + "'");
}

namespace {

std::string binom_label(Int x, Int r) { return "C(" + std::to_string(x) + "," + std::to_string(r) + ")"; }

void push_gap_trace(std::vector<Inequality>& trace, const std::string& name, Int m, Int f, Int r, Int k) {
  trace.push_back({binom_label(k, r) + "+m < " + name, binomial(k, r) + m, Relation::Less, f});
  trace.push_back({name + " < " + binom_label(k + 1, r), f, Relation::Less, binomial(k + 1, r)});
}

// The absence proof of an A-scan as one inequality per clique order.
void push_scan_trace(std::vector<Inequality>& trace, const std::string& name, const RealizabilityCheck& check) {
  const Int f = check.pair.f();
  const Int r = check.pair.r();
  for (const auto& rej : check.rejected) {
    const auto cx = binom_label(rej.x, r);
    switch (rej.reason) {
      case RejectReason::Negative:
        trace.push_back({cx + " > " + name, binomial(rej.x, r), Relation::Greater, f});
        break;
      case RejectReason::ExceedsWindow:
        trace.push_back({name + "-" + cx + " > window", rej.h, Relation::Greater, rej.limit});
        break;
      case RejectReason::ExceedsCapacity:
        trace.push_back({name + "-" + cx + " > " + binom_label(check.pair.m() - rej.x, r), rej.h,
                         Relation::Greater, rej.limit});
        break;
    }
  }
}

CertificateCase case_of(bool gap_f, bool gap_fbar) {
  if (gap_f && gap_fbar) return CertificateCase::Both;
  if (gap_f) return CertificateCase::GapAtF;
  if (gap_fbar) return CertificateCase::GapAtComplement;
  return CertificateCase::ScanOnly;
}

}  // namespace

bool AvoidabilityCertificate::verify(const RealizabilityRules& rules) const {
  for (const auto& ineq : trace)
    if (!ineq.holds()) return false;
  const Int m = pair.m();
  const Int r = pair.r();
  if (realizable_A(m, pair.f(), r, rules).realizable()) return false;
  if (realizable_A(m, pair.total() - pair.f(), r, rules).realizable()) return false;
  if (k_f && gap_mainclaim(m, pair.f(), r) != k_f) return false;
  if (k_fbar && gap_mainclaim(m, pair.total() - pair.f(), r) != k_fbar) return false;
  return true;
}

std::optional<AvoidabilityCertificate> absolutely_avoidable(Int m, Int f, Int r, const RealizabilityRules& rules) {
  const PairQuery pair(r, m, f);
  const Int fbar = pair.total() - f;
  auto a_f = realizable_A(m, f, r, rules);
  if (a_f.realizable()) return std::nullopt;
  auto a_fbar = realizable_A(m, fbar, r, rules);
  if (a_fbar.realizable()) return std::nullopt;

  AvoidabilityCertificate cert{pair, CertificateCase::ScanOnly, gap_mainclaim(m, f, r), gap_mainclaim(m, fbar, r), {}};
  cert.kind = case_of(cert.k_f.has_value(), cert.k_fbar.has_value());
  if (cert.k_f) push_gap_trace(cert.trace, "f", m, f, r, *cert.k_f);
  if (cert.k_fbar) push_gap_trace(cert.trace, "fbar", m, fbar, r, *cert.k_fbar);
  push_scan_trace(cert.trace, "f", a_f);
  push_scan_trace(cert.trace, "fbar", a_fbar);
  return cert;
}

std::string to_string(TheoremCase c) {
  switch (c) {
    case TheoremCase::One: return "1";
    case TheoremCase::OnePrime: return "1'";
    case TheoremCase::Two: return "2";
  }
  return "?";
}

TheoremCase theorem_case_from_string(const std::string& text) {
  if (text == "1") return TheoremCase::One;
  if (text == "1'") return TheoremCase::OnePrime;
  if (text == "2") return TheoremCase::Two;
  throw DomainError("unknown theorem case '" + text + "'");
}

TheoremMainResult theorem_main_pair(Int m, Int r) {
  if (r < 3) throw DomainError("theorem_main_pair requires r >= 3");
  if (m <= r) throw DomainError("theorem_main_pair requires m > r");
  const Int total = binomial(m, r);
  const Int f0 = total / 2;
  const Int ceil_half = total - f0;
  const Int x = binom_decompose(f0, r).x;
  const auto C = [r](Int a) { return a < 0 ? Int{0} : binomial(a, r); };

  std::vector<Inequality> trace;
  auto require = [&trace](Inequality ineq) {
    if (!ineq.holds()) throw BelowThreshold(ineq);
    trace.push_back(std::move(ineq));
  };

  require({binom_label(x, r) + " <= f0", C(x), Relation::LessEqual, f0});
  require({"f0 < " + binom_label(x + 1, r), f0, Relation::Less, C(x + 1)});
  require({"margin C(x-1,r-1) > 2m+2", x >= 1 ? binomial(x - 1, r - 1) : 0, Relation::Greater, 2 * m + 2});

  const Int f_minus = f0 - (m + 1);
  const Int f_plus = ceil_half + (m + 1);

  TheoremCase kind;
  Int f;
  Int k_f;
  Int k_fbar;
  if (C(x) + m < f0) {
    require({binom_label(x, r) + "+m < f0", C(x) + m, Relation::Less, f0});
    if (ceil_half < C(x + 1)) {
      require({binom_label(x, r) + "+m < ceil(C(m,r)/2)", C(x) + m, Relation::Less, ceil_half});
      require({"ceil(C(m,r)/2) < " + binom_label(x + 1, r), ceil_half, Relation::Less, C(x + 1)});
      kind = TheoremCase::One;
      f = f0;
      k_f = x;
      k_fbar = x;
    } else {
      require({"ceil(C(m,r)/2) == " + binom_label(x + 1, r), ceil_half, Relation::Equal, C(x + 1)});
      require({"C(x,r-1)-(m+1) > m", binomial(x, r - 1) - (m + 1), Relation::Greater, m});
      require({binom_label(x, r) + "+m < f-", C(x) + m, Relation::Less, f_minus});
      require({"f- < " + binom_label(x + 1, r), f_minus, Relation::Less, C(x + 1)});
      require({binom_label(x + 1, r) + "+m < f+", C(x + 1) + m, Relation::Less, f_plus});
      require({"f+ < " + binom_label(x + 2, r), f_plus, Relation::Less, C(x + 2)});
      kind = TheoremCase::OnePrime;
      f = f_minus;
      k_f = x;
      k_fbar = x + 1;
    }
  } else {
    require({"f0 <= " + binom_label(x, r) + "+m", f0, Relation::LessEqual, C(x) + m});
    require({"f- >= 0", f_minus, Relation::GreaterEqual, 0});
    require({binom_label(x - 1, r) + "+m < f-", C(x - 1) + m, Relation::Less, f_minus});
    require({"f- < " + binom_label(x, r), f_minus, Relation::Less, C(x)});
    require({binom_label(x, r) + "+m < f+", C(x) + m, Relation::Less, f_plus});
    require({"f+ < " + binom_label(x + 1, r), f_plus, Relation::Less, C(x + 1)});
    kind = TheoremCase::Two;
    f = f_minus;
    k_f = x - 1;
    k_fbar = x;
  }
  require({"f + fbar == C(m,r)", f + (total - f), Relation::Equal, total});

  AvoidabilityCertificate cert{PairQuery(r, m, f), CertificateCase::Both, k_f, k_fbar, std::move(trace)};
  return TheoremMainResult{f, f0, x, kind, std::move(cert)};
}

std::optional<Int> theorem_main_threshold(Int r, Int m_hi) {
  std::optional<Int> lowest;
  for (Int m = m_hi; m > r; --m) {
    try {
      theorem_main_pair(m, r);
      lowest = m;
    } catch (const BelowThreshold&) {
      break;
    }
  }
  return lowest;
}

namespace {

struct Interval {
  Int lo;
  Int hi;
};

// The f values passing A (or B) form a union of one interval per clique order x.
std::vector<Interval> realizable_intervals(Int m, Int r, const RealizabilityRules& rules, bool kind_a) {
  const Int hmax = window_limit(m, rules.window);
  std::vector<Interval> raw;
  for (Int x = 0; x <= m; ++x) {
    const Int c = binomial(x, r);
    if (kind_a) {
      const Int h = rules.vertex_capacity ? std::min(hmax, binomial(m - x, r)) : hmax;
      if (h >= 0) raw.push_back({c, c + h});
    } else if (hmax >= 0) {
      raw.push_back({std::max<Int>(0, c - hmax), c});
    }
  }
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> merged;
  for (const auto& iv : raw) {
    if (!merged.empty() && iv.lo <= merged.back().hi + 1)
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    else
      merged.push_back(iv);
  }
  return merged;
}

bool member(const std::vector<Interval>& set, Int f) {
  auto it = std::upper_bound(set.begin(), set.end(), f, [](Int v, const Interval& iv) { return v < iv.lo; });
  return it != set.begin() && f <= std::prev(it)->hi;
}

}  // namespace

std::vector<Int> enumerate_candidates(Int m, Int r, const RealizabilityRules& rules) {
  if (m <= r) throw DomainError("enumerate_candidates requires m > r");
  const Int total = binomial(m, r);
  const auto a = realizable_intervals(m, r, rules, true);
  const auto b = realizable_intervals(m, r, rules, false);
  std::vector<Int> out;
  for (const auto& iv : a)
    for (Int f = std::max<Int>(iv.lo, 1); f <= std::min(iv.hi, total - 1); ++f)
      if (member(a, total - f) && member(b, f) && member(b, total - f)) out.push_back(f);
  return out;
}

}  // namespace pairset
