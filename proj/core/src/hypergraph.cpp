#include "pairset/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>

#include "pairset/combinatorics.hpp"
#include "pairset/errors.hpp"

namespace pairset {

namespace {

std::uint64_t checked_capacity(int n, int r) {
  if (r < 1) throw DomainError("uniformity must be >= 1");
  if (n < 0) throw DomainError("vertex count must be >= 0");
  return static_cast<std::uint64_t>(binomial(n, r));
}

// Position tuples of every r-subset of an m-set, flattened.
std::vector<int> subset_positions(int m, int r) {
  std::vector<int> out;
  if (r > m) return out;
  std::vector<int> c(static_cast<std::size_t>(r));
  std::iota(c.begin(), c.end(), 0);
  do {
    out.insert(out.end(), c.begin(), c.end());
  } while (next_combination_colex(c, m));
  return out;
}

}  // namespace

Hypergraph::Hypergraph(int r, int n) : r_(r), n_(n), capacity_(checked_capacity(n, r)) {}

Hypergraph::Hypergraph(int r, int n, std::vector<std::uint64_t> sorted_ranks)
    : r_(r), n_(n), capacity_(checked_capacity(n, r)), ranks_(std::move(sorted_ranks)) {}

Hypergraph Hypergraph::from_edges(int r, int n, const std::vector<std::vector<int>>& edges) {
  checked_capacity(n, r);
  std::vector<std::uint64_t> ranks;
  ranks.reserve(edges.size());
  for (const auto& e : edges) {
    if (static_cast<int>(e.size()) != r)
      throw DomainError("edge has " + std::to_string(e.size()) + " vertices, expected " + std::to_string(r));
    std::vector<int> sorted = e;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] < 0 || sorted[i] >= n)
        throw DomainError("vertex " + std::to_string(sorted[i]) + " out of range for n=" + std::to_string(n));
      if (i > 0 && sorted[i] == sorted[i - 1])
        throw DomainError("edge repeats vertex " + std::to_string(sorted[i]));
    }
    ranks.push_back(colex_rank(sorted));
  }
  return from_ranks(r, n, std::move(ranks));
}

Hypergraph Hypergraph::from_ranks(int r, int n, std::vector<std::uint64_t> ranks) {
  const auto cap = checked_capacity(n, r);
  std::sort(ranks.begin(), ranks.end());
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (ranks[i] >= cap) throw DomainError("edge rank " + std::to_string(ranks[i]) + " out of range");
    if (i > 0 && ranks[i] == ranks[i - 1]) throw DomainError("duplicate edge");
  }
  return Hypergraph(r, n, std::move(ranks));
}

std::vector<std::vector<int>> Hypergraph::edges() const {
  std::vector<std::vector<int>> out;
  out.reserve(ranks_.size());
  for (auto rank : ranks_) out.push_back(colex_unrank(rank, r_));
  return out;
}

bool Hypergraph::contains(std::span<const int> sorted_edge) const {
  if (static_cast<int>(sorted_edge.size()) != r_) return false;
  for (int v : sorted_edge)
    if (v < 0 || v >= n_) return false;
  return std::binary_search(ranks_.begin(), ranks_.end(), colex_rank(sorted_edge));
}

Bitset Hypergraph::bitset() const {
  Bitset bits(static_cast<std::size_t>(capacity_));
  for (auto rank : ranks_) bits.set(static_cast<std::size_t>(rank));
  return bits;
}

Hypergraph complete(int n, int r) {
  std::vector<std::uint64_t> ranks(checked_capacity(n, r));
  std::iota(ranks.begin(), ranks.end(), std::uint64_t{0});
  return Hypergraph::from_ranks(r, n, std::move(ranks));
}

Hypergraph complement(const Hypergraph& g) {
  std::vector<std::uint64_t> ranks;
  ranks.reserve(static_cast<std::size_t>(g.capacity() - g.size()));
  auto it = g.ranks().begin();
  for (std::uint64_t rank = 0; rank < g.capacity(); ++rank) {
    if (it != g.ranks().end() && *it == rank) {
      ++it;
      continue;
    }
    ranks.push_back(rank);
  }
  return Hypergraph::from_ranks(g.uniformity(), g.order(), std::move(ranks));
}

Hypergraph disjoint_union(const Hypergraph& g, const Hypergraph& h) {
  if (g.uniformity() != h.uniformity())
    throw DomainError("disjoint_union of r=" + std::to_string(g.uniformity()) + " and r=" +
                      std::to_string(h.uniformity()));
  const int shift = g.order();
  std::vector<std::uint64_t> ranks(g.ranks().begin(), g.ranks().end());
  for (auto e : h.edges()) {
    for (int& v : e) v += shift;
    ranks.push_back(colex_rank(e));
  }
  return Hypergraph::from_ranks(g.uniformity(), g.order() + h.order(), std::move(ranks));
}

Hypergraph induced(const Hypergraph& g, std::span<const int> vertices) {
  std::vector<int> s(vertices.begin(), vertices.end());
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= g.order())
      throw DomainError("vertex " + std::to_string(s[i]) + " out of range for n=" + std::to_string(g.order()));
    if (i > 0 && s[i] == s[i - 1]) throw DomainError("vertex " + std::to_string(s[i]) + " listed twice");
  }
  const int r = g.uniformity();
  const int k = static_cast<int>(s.size());
  std::vector<std::uint64_t> ranks;
  if (k >= r) {
    const auto bits = g.bitset();
    std::vector<int> c(static_cast<std::size_t>(r));
    std::iota(c.begin(), c.end(), 0);
    std::vector<int> original(static_cast<std::size_t>(r));
    do {
      for (std::size_t i = 0; i < c.size(); ++i) original[i] = s[static_cast<std::size_t>(c[i])];
      if (bits.test(static_cast<std::size_t>(colex_rank(original)))) ranks.push_back(colex_rank(c));
    } while (next_combination_colex(c, k));
  }
  return Hypergraph::from_ranks(r, k, std::move(ranks));
}

std::uint64_t Spectrum::total() const {
  std::uint64_t out = 0;
  for (const auto& [f, count] : counts) out += count;
  return out;
}

Int Spectrum::min() const {
  if (counts.empty()) throw DomainError("empty spectrum");
  return counts.begin()->first;
}

Int Spectrum::max() const {
  if (counts.empty()) throw DomainError("empty spectrum");
  return counts.rbegin()->first;
}

Spectrum spectrum(const Hypergraph& g, int m, const Limits& limits) {
  if (m < 0) throw DomainError("subset order must be >= 0");
  Spectrum out;
  out.m = m;
  const int n = g.order();
  if (m > n) return out;
  const auto subsets = static_cast<std::uint64_t>(binomial(n, m));
  if (subsets > limits.spectrum_cap)
    throw BudgetExceeded("spectrum needs C(" + std::to_string(n) + "," + std::to_string(m) + ") = " +
                         std::to_string(subsets) + " subsets, cap is " + std::to_string(limits.spectrum_cap));
  const int r = g.uniformity();
  const auto bits = g.bitset();
  const auto positions = subset_positions(m, r);
  const BinomialTable table(n, r);
  const std::size_t per_subset = static_cast<std::size_t>(r);

  // Histogram over [0, C(m, r)] per worker; merged in order afterwards.
  const auto width = static_cast<std::size_t>(binomial(m, r)) + 1;
  const unsigned workers = std::max(1U, std::min<unsigned>(limits.jobs, static_cast<unsigned>(std::min<std::uint64_t>(subsets, 64))));
  std::vector<std::vector<std::uint64_t>> hist(workers, std::vector<std::uint64_t>(width, 0));

  auto scan = [&](unsigned w) {
    const std::uint64_t begin = subsets * w / workers;
    const std::uint64_t end = subsets * (w + 1) / workers;
    if (begin == end) return;
    std::vector<int> s = colex_unrank(begin, m);
    std::vector<int> t(per_subset);
    auto& h = hist[w];
    for (std::uint64_t i = begin; i < end; ++i) {
      std::size_t count = 0;
      for (std::size_t p = 0; p < positions.size(); p += per_subset) {
        std::uint64_t rank = 0;
        for (std::size_t j = 0; j < per_subset; ++j)
          rank += table(s[static_cast<std::size_t>(positions[p + j])], static_cast<int>(j) + 1);
        count += bits.test(static_cast<std::size_t>(rank)) ? 1 : 0;
      }
      ++h[count];
      if (i + 1 < end) next_combination_colex(s, n);
    }
  };

  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(scan, w);
    for (auto& t : threads) t.join();
  }
  for (std::size_t f = 0; f < width; ++f) {
    std::uint64_t sum = 0;
    for (const auto& h : hist) sum += h[f];
    if (sum > 0) out.counts[static_cast<Int>(f)] = sum;
  }
  return out;
}

bool is_sparse(const Hypergraph& g, int m, const Limits& limits) {
  if (m > g.order()) return true;
  return spectrum(g, m, limits).max() <= m;
}

Hypergraph relabel(const Hypergraph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw DomainError("permutation size mismatch");
  std::vector<std::uint64_t> ranks;
  ranks.reserve(g.size());
  for (auto e : g.edges()) {
    for (int& v : e) v = perm[static_cast<std::size_t>(v)];
    std::sort(e.begin(), e.end());
    ranks.push_back(colex_rank(e));
  }
  return Hypergraph::from_ranks(g.uniformity(), g.order(), std::move(ranks));
}

CanonicalForm canonical_form(const Hypergraph& g, const Limits& limits) {
  const int n = g.order();
  if (n > limits.canonical_cap)
    throw BudgetExceeded("canonical_form needs n <= " + std::to_string(limits.canonical_cap) + ", got n=" +
                         std::to_string(n));
  const int r = g.uniformity();
  const auto edges = g.edges();
  const BinomialTable table(std::max(n, 1), r);

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint64_t> best;
  std::vector<std::uint64_t> current(edges.size());
  std::vector<int> e(static_cast<std::size_t>(r));
  bool first = true;
  do {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      for (std::size_t j = 0; j < e.size(); ++j) e[j] = perm[static_cast<std::size_t>(edges[i][j])];
      std::sort(e.begin(), e.end());
      current[i] = table.rank(e);
    }
    std::sort(current.begin(), current.end(), std::greater<>());
    if (first || current < best) {
      best = current;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return CanonicalForm{r, n, std::move(best)};
}

}  // namespace pairset
