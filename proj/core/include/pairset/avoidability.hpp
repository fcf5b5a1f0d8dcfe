#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pairset/combinatorics.hpp"
#include "pairset/errors.hpp"

namespace pairset {

// Realizability checks for an order-size pair (m, f):
//   A: f = C(x, r) + h, a clique K_x plus an h-edge r-graph on the other m - x vertices
//   B: f = C(x, r) - h, a clique K_x with h edges removed, plus m - x isolated vertices
// with 0 <= x <= m and h bounded by the window (h <= m, or h < m when strict)
// and, for A, by the vertex capacity C(m - x, r).

enum class Window { AtMost, Strict };

struct RealizabilityRules {
  Window window = Window::AtMost;
  bool vertex_capacity = true;
};

enum class RealizationKind { CliquePlusBounded, ComplementType };

std::string to_string(RealizationKind kind);

struct RealizabilityWitness {
  RealizationKind kind = RealizationKind::CliquePlusBounded;
  Int x = 0;
  Int h = 0;

  friend bool operator==(const RealizabilityWitness&, const RealizabilityWitness&) = default;
};

enum class RejectReason { Negative, ExceedsWindow, ExceedsCapacity };

std::string to_string(RejectReason reason);

/// One clique order x that fails, with the constraint it fails.
struct RejectedClique {
  Int x = 0;
  Int h = 0;  ///< f - C(x,r) for A, C(x,r) - f for B; may be negative
  RejectReason reason = RejectReason::Negative;
  Int limit = 0;  ///< the bound h violated (0, m, or C(m-x, r))

  friend bool operator==(const RejectedClique&, const RejectedClique&) = default;
};

struct RealizabilityCheck {
  PairQuery pair;
  RealizationKind kind = RealizationKind::CliquePlusBounded;
  std::optional<RealizabilityWitness> witness;
  /// Filled only when no witness exists: every x in [0, m] with its failure.
  std::vector<RejectedClique> rejected;

  bool realizable() const noexcept { return witness.has_value(); }
};

/// Searches x from m down; the first valid x is the largest.
RealizabilityCheck realizable_A(Int m, Int f, Int r, const RealizabilityRules& rules = {});
RealizabilityCheck realizable_B(Int m, Int f, Int r, const RealizabilityRules& rules = {});

/// A(f), A(f̄), B(f), B(f̄) for the pair.
struct FourChecks {
  RealizabilityCheck a_f;
  RealizabilityCheck a_fbar;
  RealizabilityCheck b_f;
  RealizabilityCheck b_fbar;

  bool all_realizable() const noexcept;
  /// Name ("A(f)", "A(fbar)", "B(f)", "B(fbar)") and check of the first absent one.
  std::optional<std::pair<std::string, const RealizabilityCheck*>> first_absent() const;
};

FourChecks four_checks(Int m, Int f, Int r, const RealizabilityRules& rules = {});

/// k with C(k,r) + m < f < C(k+1,r), if any. Such a k rules out A(f).
std::optional<Int> gap_mainclaim(Int m, Int f, Int r);

/// k with C(k-1,r) < f < C(k,r) - m, if any. Such a k rules out B(f).
std::optional<Int> gap_mainclaim2(Int m, Int f, Int r);

enum class Relation { Less, LessEqual, Greater, GreaterEqual, Equal };

std::string to_string(Relation rel);
Relation relation_from_string(const std::string& text);

/// A checked exact inequality `lhs rel rhs` with a human-readable label.
struct Inequality {
  std::string label;
  Int lhs = 0;
  Relation rel = Relation::Less;
  Int rhs = 0;

  bool holds() const noexcept;
  std::string str() const;

  friend bool operator==(const Inequality&, const Inequality&) = default;
};

enum class CertificateCase { GapAtF, GapAtComplement, Both, ScanOnly };

std::string to_string(CertificateCase c);
CertificateCase certificate_case_from_string(const std::string& text);

/// Absolute avoidability of (m, f) via: neither (m, f) nor (m, C(m,r) - f) is
/// a clique plus an at-most-m-edge r-graph. The n_0 it implies is only
/// known to exist.
struct AvoidabilityCertificate {
  PairQuery pair;
  CertificateCase kind = CertificateCase::ScanOnly;
  std::optional<Int> k_f;
  std::optional<Int> k_fbar;
  std::vector<Inequality> trace;

  /// Every trace inequality holds and both A-scans come back absent.
  bool verify(const RealizabilityRules& rules = {}) const;
};

std::optional<AvoidabilityCertificate> absolutely_avoidable(Int m, Int f, Int r,
                                                           const RealizabilityRules& rules = {});

enum class TheoremCase { One, OnePrime, Two };

std::string to_string(TheoremCase c);
TheoremCase theorem_case_from_string(const std::string& text);

struct TheoremMainResult {
  Int f = 0;   ///< the certified size
  Int f0 = 0;  ///< floor(C(m,r)/2)
  Int x = 0;   ///< C(x,r) <= f0 < C(x+1,r)
  TheoremCase kind = TheoremCase::One;
  AvoidabilityCertificate certificate;
};

/// Raised when some inequality of the half-size argument fails for this m.
class BelowThreshold : public DomainError {
public:
  explicit BelowThreshold(Inequality failing)
      : DomainError("below threshold: " + failing.str() + " fails"), failing_(std::move(failing)) {}

  const Inequality& failing() const noexcept { return failing_; }

private:
  Inequality failing_;
};

/// Certifies (m, floor(C(m,r)/2)) or (m, floor(C(m,r)/2) - m - 1). Requires r >= 3.
TheoremMainResult theorem_main_pair(Int m, Int r);

/// Smallest m0 > r such that theorem_main_pair succeeds for every m in [m0, m_hi].
/// Returns nullopt when it fails at m_hi itself.
std::optional<Int> theorem_main_threshold(Int r, Int m_hi);

/// Every f in (0, C(m,r)) passing all four realizability checks, ascending.
/// Requires m > r.
std::vector<Int> enumerate_candidates(Int m, Int r, const RealizabilityRules& rules = {});

}  // namespace pairset
