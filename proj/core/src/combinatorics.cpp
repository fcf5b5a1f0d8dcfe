#include "pairset/combinatorics.hpp"

#include <numeric>
#include <string>

namespace pairset {

Int binomial(Int n, Int k) {
  if (n < 0 || k < 0) throw DomainError("binomial of negative argument");
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  // result * (n - i) is always divisible by (i + 1); divide by the gcd first
  // so the intermediate stays close to the final value.
  Int result = 1;
  for (Int i = 0; i < k; ++i) {
    Int num = n - i;
    Int den = i + 1;
    Int g = std::gcd(result, den);
    result /= g;
    den /= g;
    num /= den;
    result = checked_mul(result, num);
  }
  return result;
}

Int falling_factorial(Int l, Int r) {
  if (l < 0 || r < 0) throw DomainError("falling_factorial of negative argument");
  Int out = 1;
  for (Int i = 0; i < r; ++i) out = checked_mul(out, l - i);
  return out;
}

Rational turan_ratio(Int l, Int r) {
  if (r < 2) throw DomainError("turan_ratio requires r >= 2");
  if (l < r) throw DomainError("turan_ratio requires l >= r");
  BigInt num = 1;
  BigInt den = 1;
  for (Int i = 0; i < r; ++i) {
    num *= (l - i);
    den *= l;
  }
  return Rational(num, den);
}

std::vector<Int> partite_sizes(Int n, Int l) {
  if (n < 0 || l < 1) throw DomainError("partite_sizes requires n >= 0 and l >= 1");
  std::vector<Int> sizes(static_cast<std::size_t>(l), n / l);
  for (Int i = 0; i < n % l; ++i) ++sizes[static_cast<std::size_t>(i)];
  return sizes;
}

Int turan_count(Int n, Int l, Int r) {
  if (r < 1) throw DomainError("turan_count requires r >= 1");
  if (l < r) return 0;
  // Elementary symmetric polynomial e_r of the part sizes.
  std::vector<Int> e(static_cast<std::size_t>(r) + 1, 0);
  e[0] = 1;
  for (Int size : partite_sizes(n, l)) {
    for (Int j = r; j >= 1; --j) {
      auto ju = static_cast<std::size_t>(j);
      e[ju] = checked_add(e[ju], checked_mul(e[ju - 1], size));
    }
  }
  return e[static_cast<std::size_t>(r)];
}

Int l_max(Int m, Int r) {
  if (r < 3) throw DomainError("l_max requires r >= 3");
  if (m <= r) throw DomainError("l_max requires m > r");
  Int total = binomial(m, r);
  // t_r(m, l) is non-decreasing in l and reaches C(m, r) at l = m, so the scan stops.
  Int l = r;
  while (checked_mul(2, turan_count(m, l + 1, r)) < total) ++l;
  return l;
}

BinomDecomposition binom_decompose(Int f, Int r) {
  if (f < 0) throw DomainError("binom_decompose requires f >= 0");
  if (r < 1) throw DomainError("binom_decompose requires r >= 1");
  if (f == 0) return {r - 1, 0};
  Int x = r;
  while (binomial(x + 1, r) <= f) ++x;
  return {x, f - binomial(x, r)};
}

PairQuery::PairQuery(Int r, Int m, Int f) : r_(r), m_(m), f_(f), total_(0) {
  if (r < 2) throw DomainError("uniformity must be >= 2, got " + std::to_string(r));
  if (m < r) throw DomainError("order m must be >= r, got m=" + std::to_string(m));
  total_ = binomial(m, r);
  if (f < 0 || f > total_)
    throw DomainError("size f must lie in [0, C(m,r)] = [0, " + std::to_string(total_) +
                      "], got " + std::to_string(f));
}

}  // namespace pairset
