#include "pairset/oracle.hpp"

#include <bit>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>

#include "pairset/combinatorics.hpp"
#include "pairset/errors.hpp"

namespace pairset {

OracleOptions oracle_options_from_env() {
  OracleOptions options;
  if (const char* env = std::getenv("PAIRSET_BUDGET")) {
    try {
      std::size_t used = 0;
      options.budget = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw DomainError(std::string("PAIRSET_BUDGET is not a non-negative integer: '") + env + "'");
    }
  }
  return options;
}

bool graph_arrows(const Hypergraph& g, int m, Int f, const Limits& limits) {
  return spectrum(g, m, limits).contains(f);
}

namespace {

// For every m-subset, the bitmask of the r-sets (by colex rank) it contains.
std::vector<std::uint64_t> subset_masks(int n, int r, int m) {
  std::vector<std::uint64_t> masks;
  if (m > n) return masks;
  std::vector<int> s(static_cast<std::size_t>(m));
  std::iota(s.begin(), s.end(), 0);
  do {
    std::uint64_t mask = 0;
    if (r <= m) {
      std::vector<int> c(static_cast<std::size_t>(r));
      std::iota(c.begin(), c.end(), 0);
      std::vector<int> t(c.size());
      do {
        for (std::size_t i = 0; i < c.size(); ++i) t[i] = s[static_cast<std::size_t>(c[i])];
        mask |= std::uint64_t{1} << colex_rank(t);
      } while (next_combination_colex(c, m));
    }
    masks.push_back(mask);
  } while (next_combination_colex(s, n));
  return masks;
}

// Gosper's hack: next larger integer with the same popcount. Numeric order of
// masks is colex order of the edge sets they encode.
std::uint64_t next_same_popcount(std::uint64_t v) {
  const std::uint64_t c = v & (~v + 1);
  const std::uint64_t r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

Hypergraph graph_of_mask(int r, int n, std::uint64_t mask) {
  std::vector<std::uint64_t> ranks;
  while (mask) {
    ranks.push_back(static_cast<std::uint64_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return Hypergraph::from_ranks(r, n, std::move(ranks));
}

struct Kernel {
  int n;
  int r;
  int m;
  std::uint64_t edge_slots;
  std::vector<std::uint64_t> masks;
};

Kernel make_kernel(int n, int r, int m) {
  if (r < 2) throw DomainError("uniformity must be >= 2");
  if (n < 0 || m < 0) throw DomainError("n and m must be >= 0");
  const auto slots = static_cast<std::uint64_t>(binomial(n, r));
  if (slots > 64)
    throw BudgetExceeded("oracle enumerates edge sets as 64-bit masks; C(" + std::to_string(n) + "," +
                         std::to_string(r) + ") = " + std::to_string(slots) + " > 64");
  return Kernel{n, r, m, slots, subset_masks(n, r, m)};
}

bool mask_arrows(const Kernel& k, std::uint64_t graph, Int f) {
  for (auto sub : k.masks)
    if (std::popcount(graph & sub) == f) return true;
  return false;
}

ArrowVerdict run_pair(const Kernel& k, Int e, Int f, const OracleOptions& options) {
  ArrowVerdict verdict{{k.n, e, k.r, k.m, f}, true, std::nullopt, 0};
  const auto slots = static_cast<Int>(k.edge_slots);
  if (e < 0 || e > slots) throw DomainError("edge count outside [0, C(n,r)]");
  if (k.m > k.n) {
    // No m-subsets at all: nothing is induced.
    verdict.arrows = false;
    verdict.counterexample = graph_of_mask(k.r, k.n, e == 0 ? 0 : (~std::uint64_t{0} >> (64 - e)));
    verdict.graphs_examined = 1;
    return verdict;
  }

  std::set<CanonicalForm> seen;
  std::uint64_t mask = e == 0 ? 0 : (e == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << e) - 1));
  const std::uint64_t limit = k.edge_slots == 64 ? 0 : (std::uint64_t{1} << k.edge_slots);
  while (true) {
    bool skip = false;
    if (options.dedup) skip = !seen.insert(canonical_form(graph_of_mask(k.r, k.n, mask), options.limits)).second;
    if (!skip) {
      ++verdict.graphs_examined;
      if (!mask_arrows(k, mask, f)) {
        verdict.arrows = false;
        verdict.counterexample = graph_of_mask(k.r, k.n, mask);
        return verdict;
      }
    }
    if (e == 0 || e == slots) break;
    const std::uint64_t next = next_same_popcount(mask);
    if (next <= mask || (limit != 0 && next >= limit)) break;
    mask = next;
  }
  return verdict;
}

std::uint64_t pair_cost(const Kernel& k, Int e) {
  const auto graphs = static_cast<std::uint64_t>(binomial(static_cast<Int>(k.edge_slots), e));
  const auto subsets = std::max<std::uint64_t>(1, k.masks.size());
  if (graphs > ~std::uint64_t{0} / subsets) return ~std::uint64_t{0};
  return graphs * subsets;
}

}  // namespace

ArrowVerdict pair_arrows(int n, Int e, int r, int m, Int f, const OracleOptions& options) {
  const auto kernel = make_kernel(n, r, m);
  const auto cost = pair_cost(kernel, e);
  if (cost > options.budget)
    throw BudgetExceeded("pair_arrows needs " + std::to_string(cost) + " checks, budget is " +
                         std::to_string(options.budget));
  return run_pair(kernel, e, f, options);
}

std::vector<Int> non_arrowing_sizes(int n, int r, int m, Int f, const OracleOptions& options) {
  const auto kernel = make_kernel(n, r, m);
  const auto slots = static_cast<Int>(kernel.edge_slots);
  std::uint64_t cost = 0;
  for (Int e = 0; e <= slots; ++e) {
    const auto c = pair_cost(kernel, e);
    cost = (c > ~std::uint64_t{0} - cost) ? ~std::uint64_t{0} : cost + c;
  }
  if (cost > options.budget)
    throw BudgetExceeded("non_arrowing_sizes needs " + std::to_string(cost) + " checks, budget is " +
                         std::to_string(options.budget));
  std::vector<Int> out;
  for (Int e = 0; e <= slots; ++e)
    if (!run_pair(kernel, e, f, options).arrows) out.push_back(e);
  return out;
}

BlowupReport verify_blowup_claims(int depth, BlowupBase base, const Limits& limits) {
  const Int order = blowup_order(base, depth);
  if (order > 27 && base == BlowupBase::SingleEdge)
    throw BudgetExceeded("blow-up verification supports depth <= 3 for k3");
  if (order > 25 && base == BlowupBase::TightC5)
    throw BudgetExceeded("blow-up verification supports depth <= 2 for c5");

  BlowupSpec spec{base, depth, static_cast<int>(order)};
  const auto g = iterated_blowup(spec);

  BlowupReport report;
  report.base = base;
  report.depth = depth;
  report.vertices = g.order();
  report.edges = static_cast<Int>(g.size());

  const Int b = base == BlowupBase::SingleEdge ? 3 : 5;
  const Int base_edges = base == BlowupBase::SingleEdge ? 1 : 5;
  Int v = 1;
  Int e = 0;
  for (int level = 0; level < depth; ++level) {
    e = checked_add(checked_mul(b, e), checked_mul(base_edges, checked_mul(v, checked_mul(v, v))));
    v = checked_mul(v, b);
  }
  report.recurrence_edges = e;

  const Int total = binomial(g.order(), 3);
  report.density = Rational(BigInt(report.edges), BigInt(total));
  report.possible_sizes = total + 1;
  if (g.order() < 6) {
    report.vacuous = true;
    report.avoids_6_10 = true;
  } else {
    const auto spec_g = spectrum(g, 6, limits);
    const auto spec_c = spectrum(complement(g), 6, limits);
    report.max_six_set = spec_g.max();
    report.min_six_set_complement = spec_c.min();
    // Edge deletion cannot raise a 6-set count, edge addition cannot lower one.
    report.avoids_6_10 = report.max_six_set < 10 && report.min_six_set_complement > 10;
  }
  report.low_interval = {0, report.edges};
  report.high_interval = {total - report.edges, total};
  const Int low_count = report.edges + 1;
  const Int high_count = report.edges + 1;
  const Int overlap = std::max<Int>(0, report.low_interval.second - report.high_interval.first + 1);
  report.covered_sizes = low_count + high_count - overlap;
  return report;
}

}  // namespace pairset
