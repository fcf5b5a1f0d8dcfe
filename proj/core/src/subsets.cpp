#include "pairset/subsets.hpp"

#include <bit>

#include "pairset/combinatorics.hpp"

namespace pairset {

std::uint64_t colex_rank(std::span<const int> sorted_set) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < sorted_set.size(); ++i)
    out += static_cast<std::uint64_t>(binomial(sorted_set[i], static_cast<Int>(i) + 1));
  return out;
}

std::vector<int> colex_unrank(std::uint64_t rank, int k) {
  std::vector<int> out(static_cast<std::size_t>(k));
  for (int i = k; i >= 1; --i) {
    // largest v with C(v, i) <= rank
    int v = i - 1;
    while (static_cast<std::uint64_t>(binomial(v + 1, i)) <= rank) ++v;
    out[static_cast<std::size_t>(i - 1)] = v;
    rank -= static_cast<std::uint64_t>(binomial(v, i));
  }
  return out;
}

bool next_combination_colex(std::vector<int>& c, int n) {
  const std::size_t k = c.size();
  for (std::size_t i = 0; i < k; ++i) {
    int limit = (i + 1 < k) ? c[i + 1] : n;
    if (c[i] + 1 < limit) {
      ++c[i];
      for (std::size_t j = 0; j < i; ++j) c[j] = static_cast<int>(j);
      return true;
    }
  }
  return false;
}

BinomialTable::BinomialTable(int n, int k)
    : stride_(static_cast<std::size_t>(k) + 1),
      table_(static_cast<std::size_t>(n > 0 ? n : 0) * (static_cast<std::size_t>(k) + 1), 0) {
  for (int a = 0; a < n; ++a)
    for (int j = 0; j <= k; ++j)
      table_[static_cast<std::size_t>(a) * stride_ + static_cast<std::size_t>(j)] =
          static_cast<std::uint64_t>(binomial(a, j));
}

std::size_t Bitset::count() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

}  // namespace pairset
