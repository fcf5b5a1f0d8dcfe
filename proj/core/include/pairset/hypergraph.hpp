#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "pairset/checked.hpp"
#include "pairset/subsets.hpp"

namespace pairset {

/// Configured enumeration caps. Exceeding one raises BudgetExceeded.
struct Limits {
  std::uint64_t spectrum_cap = 10'000'000;  ///< max C(n, m) for spectrum()
  int canonical_cap = 10;                   ///< max n for canonical_form()
  unsigned jobs = 1;                        ///< worker threads for subset scans
};

/// An r-uniform hypergraph on vertices 0..n-1. Edges are stored as sorted
/// colex ranks of their vertex sets. Immutable once built.
class Hypergraph {
public:
  /// Edgeless r-graph on n vertices.
  Hypergraph(int r, int n);

  /// Validates arity, range, strict increase after sorting, and duplicates.
  static Hypergraph from_edges(int r, int n, const std::vector<std::vector<int>>& edges);

  /// Ranks may be in any order; duplicates and out-of-range ranks throw.
  static Hypergraph from_ranks(int r, int n, std::vector<std::uint64_t> ranks);

  int uniformity() const noexcept { return r_; }
  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return ranks_.size(); }

  /// C(n, r).
  std::uint64_t capacity() const noexcept { return capacity_; }

  /// Sorted ascending.
  std::span<const std::uint64_t> ranks() const noexcept { return ranks_; }

  /// Edges as increasing vertex tuples, in colex order.
  std::vector<std::vector<int>> edges() const;

  bool contains(std::span<const int> sorted_edge) const;

  /// Membership bitset indexed by colex rank, of size C(n, r).
  Bitset bitset() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
  Hypergraph(int r, int n, std::vector<std::uint64_t> sorted_ranks);

  int r_;
  int n_;
  std::uint64_t capacity_;
  std::vector<std::uint64_t> ranks_;
};

/// K_n^(r).
Hypergraph complete(int n, int r);

Hypergraph complement(const Hypergraph& g);

/// Vertices of h are shifted by g.order(). Throws DomainError on uniformity mismatch.
Hypergraph disjoint_union(const Hypergraph& g, const Hypergraph& h);

/// Sub-hypergraph induced on `vertices`, relabeled to 0..|S|-1 in increasing
/// order of original label.
Hypergraph induced(const Hypergraph& g, std::span<const int> vertices);

/// Histogram of induced edge counts over all m-subsets of V(G).
struct Spectrum {
  int m = 0;
  std::map<Int, std::uint64_t> counts;

  bool contains(Int f) const { return counts.find(f) != counts.end(); }
  std::uint64_t total() const;
  /// Throws DomainError on an empty spectrum (m > n).
  Int min() const;
  Int max() const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

/// Exhaustive over all C(n, m) subsets. Refuses (BudgetExceeded) above
/// limits.spectrum_cap; m > n yields an empty histogram.
Spectrum spectrum(const Hypergraph& g, int m, const Limits& limits = {});

/// Every m-subset induces at most m edges. Trivially true when m > n.
bool is_sparse(const Hypergraph& g, int m, const Limits& limits = {});

/// Lexicographically minimal descending list of edge ranks over all n!
/// relabelings. Compares like the edge bitset read as a big number.
struct CanonicalForm {
  int r = 0;
  int n = 0;
  std::vector<std::uint64_t> ranks_desc;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Hypergraph& g, const Limits& limits = {});

/// Applies a vertex relabeling: vertex v becomes perm[v].
Hypergraph relabel(const Hypergraph& g, std::span<const int> perm);

}  // namespace pairset
