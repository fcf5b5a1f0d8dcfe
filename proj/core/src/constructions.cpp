#include "pairset/constructions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>

#include "pairset/combinatorics.hpp"
#include "pairset/errors.hpp"

namespace pairset {

Hypergraph turan_graph(int n, int l, int r) {
  const auto sizes = partite_sizes(n, l);
  std::vector<int> part_of;
  part_of.reserve(static_cast<std::size_t>(n));
  for (std::size_t p = 0; p < sizes.size(); ++p)
    part_of.insert(part_of.end(), static_cast<std::size_t>(sizes[p]), static_cast<int>(p));

  std::vector<std::uint64_t> ranks;
  if (l >= r && n >= r) {
    std::vector<int> c(static_cast<std::size_t>(r));
    std::iota(c.begin(), c.end(), 0);
    std::uint64_t rank = 0;
    std::vector<int> parts(c.size());
    do {
      for (std::size_t i = 0; i < c.size(); ++i) parts[i] = part_of[static_cast<std::size_t>(c[i])];
      std::sort(parts.begin(), parts.end());
      if (std::adjacent_find(parts.begin(), parts.end()) == parts.end()) ranks.push_back(rank);
      ++rank;
    } while (next_combination_colex(c, n));
  }
  return Hypergraph::from_ranks(r, n, std::move(ranks));
}

std::string to_string(BlowupBase base) {
  return base == BlowupBase::SingleEdge ? "k3" : "c5";
}

BlowupBase blowup_base_from_string(const std::string& name) {
  if (name == "k3") return BlowupBase::SingleEdge;
  if (name == "c5") return BlowupBase::TightC5;
  throw DomainError("unknown blow-up base '" + name + "' (expected k3 or c5)");
}

namespace {

struct BaseShape {
  int vertices;
  std::vector<std::array<int, 3>> edges;
};

BaseShape shape_of(BlowupBase base) {
  if (base == BlowupBase::SingleEdge) return {3, {{0, 1, 2}}};
  BaseShape c5{5, {}};
  for (int i = 0; i < 5; ++i) {
    std::array<int, 3> e{i, (i + 1) % 5, (i + 2) % 5};
    std::sort(e.begin(), e.end());
    c5.edges.push_back(e);
  }
  return c5;
}

}  // namespace

Int blowup_order(BlowupBase base, int depth) {
  if (depth < 1) throw DomainError("blow-up depth must be >= 1");
  const Int b = shape_of(base).vertices;
  Int n = 1;
  for (int i = 0; i < depth; ++i) n = checked_mul(n, b);
  return n;
}

Hypergraph iterated_blowup(const BlowupSpec& spec) {
  const Int order = blowup_order(spec.base, spec.depth);
  if (order > spec.max_vertices)
    throw BudgetExceeded("blow-up of depth " + std::to_string(spec.depth) + " has " + std::to_string(order) +
                         " vertices, budget is " + std::to_string(spec.max_vertices));
  const auto shape = shape_of(spec.base);

  // Start from G_0, a single vertex, and apply the blow-up step depth times.
  int n = 1;
  std::vector<std::array<int, 3>> edges;
  for (int level = 0; level < spec.depth; ++level) {
    std::vector<std::array<int, 3>> next;
    next.reserve(edges.size() * static_cast<std::size_t>(shape.vertices) +
                 shape.edges.size() * static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
                     static_cast<std::size_t>(n));
    for (int copy = 0; copy < shape.vertices; ++copy)
      for (const auto& e : edges) next.push_back({e[0] + copy * n, e[1] + copy * n, e[2] + copy * n});
    for (const auto& be : shape.edges)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) next.push_back({a + be[0] * n, b + be[1] * n, c + be[2] * n});
    edges = std::move(next);
    n *= shape.vertices;
  }

  std::vector<std::uint64_t> ranks;
  ranks.reserve(edges.size());
  for (const auto& e : edges) ranks.push_back(colex_rank(e));
  return Hypergraph::from_ranks(3, n, std::move(ranks));
}

namespace {

// Scans every m-subset; when one spans more than m present edges, clears its
// lowest-rank edges until it spans exactly m. Deletions never raise a count,
// so one pass leaves every m-set repaired.
std::size_t repair_pass(Bitset& bits, int n, int r, int m) {
  std::size_t repairs = 0;
  if (m > n) return 0;
  const BinomialTable table(n, r);
  std::vector<int> positions;
  {
    std::vector<int> c(static_cast<std::size_t>(r));
    std::iota(c.begin(), c.end(), 0);
    do positions.insert(positions.end(), c.begin(), c.end());
    while (next_combination_colex(c, m));
  }
  const std::size_t width = static_cast<std::size_t>(r);
  std::vector<int> s(static_cast<std::size_t>(m));
  std::iota(s.begin(), s.end(), 0);
  std::vector<std::uint64_t> present;
  do {
    present.clear();
    for (std::size_t p = 0; p < positions.size(); p += width) {
      std::uint64_t rank = 0;
      for (std::size_t j = 0; j < width; ++j)
        rank += table(s[static_cast<std::size_t>(positions[p + j])], static_cast<int>(j) + 1);
      if (bits.test(static_cast<std::size_t>(rank))) present.push_back(rank);
    }
    if (present.size() > static_cast<std::size_t>(m)) {
      std::sort(present.begin(), present.end());
      const std::size_t excess = present.size() - static_cast<std::size_t>(m);
      for (std::size_t i = 0; i < excess; ++i) bits.reset(static_cast<std::size_t>(present[i]));
      repairs += excess;
    }
  } while (next_combination_colex(s, n));
  return repairs;
}

}  // namespace

SparseResult random_sparse(const SparseGenConfig& config) {
  const int n = config.n;
  const int r = config.r;
  const int m = config.m;
  if (r < 2) throw DomainError("random_sparse requires r >= 2");
  if (!(n > m && m >= r)) throw DomainError("random_sparse requires n > m >= r");
  if (config.density_constant <= Rational(0)) throw DomainError("density constant must be positive");
  const auto subsets = static_cast<std::uint64_t>(binomial(n, m));
  if (subsets > config.limits.spectrum_cap)
    throw BudgetExceeded("random_sparse cannot verify: C(" + std::to_string(n) + "," + std::to_string(m) +
                         ") = " + std::to_string(subsets) + " exceeds cap " +
                         std::to_string(config.limits.spectrum_cap));

  const double c = config.density_constant.to_double();
  const double p = std::min(1.0, c * std::pow(static_cast<double>(n), -static_cast<double>(m) / (m + 1)));
  const std::uint64_t capacity = static_cast<std::uint64_t>(binomial(n, r));

  GeneratorLog log;
  log.probability = p;
  log.theoretical_target = static_cast<std::uint64_t>(
      std::floor(c * std::pow(static_cast<double>(n), r - 1 + 1.0 / (m + 1))));

  Bitset bits(static_cast<std::size_t>(capacity));
  std::mt19937_64 rng(config.seed);
  // p * 2^64 as an integer threshold; p == 1 keeps everything.
  const bool keep_all = p >= 1.0;
  const auto threshold = keep_all ? ~std::uint64_t{0}
                                  : static_cast<std::uint64_t>(std::ldexp(static_cast<long double>(p), 64));
  for (std::uint64_t rank = 0; rank < capacity; ++rank) {
    const std::uint64_t u = rng();
    if (keep_all || u < threshold) {
      bits.set(static_cast<std::size_t>(rank));
      ++log.sampled_edges;
    }
  }
  log.repairs = repair_pass(bits, n, r, m);

  std::vector<std::uint64_t> ranks;
  for (std::uint64_t rank = 0; rank < capacity; ++rank)
    if (bits.test(static_cast<std::size_t>(rank))) ranks.push_back(rank);
  auto graph = Hypergraph::from_ranks(r, n, std::move(ranks));
  log.final_edges = graph.size();
  if (!is_sparse(graph, m, config.limits))
    throw std::logic_error("random_sparse produced a graph that fails verification");
  return {std::move(graph), log};
}

bool at_most_m_per_m_set(const Hypergraph& g, int m, const Limits& limits) {
  if (m >= g.order()) return g.size() <= static_cast<std::size_t>(m);
  return is_sparse(g, m, limits);
}

Realization realize_clique_plus_sparse(int n, Int e, int r, int m, const RealizeOptions& options) {
  if (r < 2) throw DomainError("uniformity must be >= 2");
  if (m < r) throw DomainError("realize requires m >= r");
  if (n < 0) throw DomainError("vertex count must be >= 0");
  const Int total = binomial(n, r);
  if (e < 0 || e > total)
    throw DomainError("edge count " + std::to_string(e) + " outside [0, " + std::to_string(total) + "]");

  Realization out{Hypergraph(r, n), 0, 0, {}};
  if (e == 0) return out;

  const auto d = binom_decompose(e, r);
  const int k = static_cast<int>(d.x);
  const int rest = n - k;
  out.clique_order = k;
  out.sparse_edges = d.rem;

  Hypergraph sparse(r, rest);
  if (d.rem > 0) {
    if (rest <= m) {
      // Too few vertices for an m-set: the whole part must carry <= m edges.
      if (d.rem > m || d.rem > binomial(rest, r))
        throw InfeasibleError("sparse part on " + std::to_string(rest) + " vertices cannot hold " +
                              std::to_string(d.rem) + " edges with at most " + std::to_string(m) +
                              " per m-set");
      std::vector<std::uint64_t> ranks(static_cast<std::size_t>(d.rem));
      std::iota(ranks.begin(), ranks.end(), std::uint64_t{0});
      sparse = Hypergraph::from_ranks(r, rest, std::move(ranks));
    } else {
      Rational c = options.density_constant;
      bool found = false;
      for (int attempt = 0; attempt < options.max_attempts && !found; ++attempt) {
        SparseGenConfig cfg{rest, r, m, options.seed, c, options.limits};
        auto generated = random_sparse(cfg);
        out.generator = generated.log;
        if (static_cast<Int>(generated.graph.size()) >= d.rem) {
          auto first = generated.graph.ranks().subspan(0, static_cast<std::size_t>(d.rem));
          sparse = Hypergraph::from_ranks(r, rest, {first.begin(), first.end()});
          found = true;
        } else if (generated.log.probability >= 1.0) {
          break;
        }
        c = c * Rational(2);
      }
      if (!found)
        throw InfeasibleError("sparse generator supplied " + std::to_string(out.generator.final_edges) + " of " +
                              std::to_string(d.rem) + " needed edges on " + std::to_string(rest) +
                              " vertices; n is too small for e");
    }
  }
  out.graph = disjoint_union(complete(k, r), sparse);

  if (static_cast<Int>(out.graph.size()) != e) throw std::logic_error("realization has wrong edge count");
  if (!at_most_m_per_m_set(sparse, m, options.limits))
    throw std::logic_error("realization sparse part fails verification");
  return out;
}

Realization realize_complement_sparse(int n, Int e, int r, int m, const RealizeOptions& options) {
  const Int total = binomial(n, r);
  if (e < 0 || e > total)
    throw DomainError("edge count " + std::to_string(e) + " outside [0, " + std::to_string(total) + "]");
  auto base = realize_clique_plus_sparse(n, total - e, r, m, options);
  base.graph = complement(base.graph);
  return base;
}

}  // namespace pairset
