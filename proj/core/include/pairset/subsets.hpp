#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace pairset {

/// Colex rank of a strictly increasing vertex tuple: sum over i of C(v_i, i+1).
std::uint64_t colex_rank(std::span<const int> sorted_set);

/// Inverse of colex_rank for k-subsets.
std::vector<int> colex_unrank(std::uint64_t rank, int k);

/// Advances `c` (a strictly increasing k-subset of {0..n-1}) to its colex
/// successor. Returns false, leaving `c` unspecified, when `c` was the last.
bool next_combination_colex(std::vector<int>& c, int n);

/// Table of C(a, j) for a < n, j <= k, used by the enumeration kernels.
class BinomialTable {
public:
  BinomialTable(int n, int k);

  std::uint64_t operator()(int a, int j) const {
    return table_[static_cast<std::size_t>(a) * stride_ + static_cast<std::size_t>(j)];
  }

  /// colex_rank via table lookups.
  std::uint64_t rank(std::span<const int> sorted_set) const {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < sorted_set.size(); ++i) out += (*this)(sorted_set[i], static_cast<int>(i) + 1);
    return out;
  }

private:
  std::size_t stride_;
  std::vector<std::uint64_t> table_;
};

/// Fixed-size bitset over edge ranks.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return bits_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  std::size_t count() const;

private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace pairset
