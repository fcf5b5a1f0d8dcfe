#pragma once

#include <vector>

#include "pairset/checked.hpp"
#include "pairset/rational.hpp"

namespace pairset {

/// C(n, k); 0 when k > n. Throws OverflowError rather than wrapping.
Int binomial(Int n, Int k);

/// (l)_r = l (l-1) ... (l-r+1); 1 for r == 0.
Int falling_factorial(Int l, Int r);

/// (l)_r / l^r in lowest terms. Requires l >= r >= 2.
Rational turan_ratio(Int l, Int r);

/// Balanced partition of n into l parts, sizes descending.
std::vector<Int> partite_sizes(Int n, Int l);

/// Number of edges of the complete balanced l-partite r-graph on n vertices.
Int turan_count(Int n, Int l, Int r);

/// Largest l with 2 * t_r(m, l) < C(m, r). Requires m > r >= 3.
Int l_max(Int m, Int r);

struct BinomDecomposition {
  Int x = 0;
  Int rem = 0;

  friend bool operator==(const BinomDecomposition&, const BinomDecomposition&) = default;
};

/// x is the largest integer with C(x, r) <= f, rem = f - C(x, r).
/// For f == 0 the canonical choice is x = r - 1.
BinomDecomposition binom_decompose(Int f, Int r);

/// An order-size pair (m, f) under uniformity r. Validated on construction.
class PairQuery {
public:
  PairQuery(Int r, Int m, Int f);

  Int r() const noexcept { return r_; }
  Int m() const noexcept { return m_; }
  Int f() const noexcept { return f_; }

  /// C(m, r).
  Int total() const noexcept { return total_; }

  PairQuery complement() const { return PairQuery(r_, m_, total_ - f_); }

  friend bool operator==(const PairQuery&, const PairQuery&) = default;

private:
  Int r_;
  Int m_;
  Int f_;
  Int total_;
};

}  // namespace pairset
