#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pairset/constructions.hpp"
#include "pairset/hypergraph.hpp"
#include "pairset/rational.hpp"

namespace pairset {

struct OracleOptions {
  /// Max elementary checks (graphs x m-subsets). Overridden by PAIRSET_BUDGET
  /// via oracle_options_from_env().
  std::uint64_t budget = 100'000'000;
  /// Skip graphs isomorphic to one already examined (exact for n <= canonical cap).
  bool dedup = false;
  Limits limits{};
};

/// Defaults, with budget taken from PAIRSET_BUDGET when set.
OracleOptions oracle_options_from_env();

/// G has an induced sub-hypergraph on m vertices with exactly f edges.
bool graph_arrows(const Hypergraph& g, int m, Int f, const Limits& limits = {});

struct ArrowQuery {
  int n = 0;
  Int e = 0;
  int r = 0;
  int m = 0;
  Int f = 0;
};

struct ArrowVerdict {
  ArrowQuery query;
  bool arrows = true;
  /// Present iff arrows is false: the lowest-colex e-edge graph with no induced (m, f).
  std::optional<Hypergraph> counterexample;
  std::uint64_t graphs_examined = 0;
};

/// Exhaustive decision of (n, e) -> (m, f) over labeled e-edge r-graphs on
/// n vertices, scanned in colex order of edge sets. Requires C(n, r) <= 64.
ArrowVerdict pair_arrows(int n, Int e, int r, int m, Int f, const OracleOptions& options = {});

/// All e in [0, C(n, r)] with (n, e) not arrowing (m, f), ascending.
std::vector<Int> non_arrowing_sizes(int n, int r, int m, Int f, const OracleOptions& options = {});

struct BlowupReport {
  BlowupBase base = BlowupBase::SingleEdge;
  int depth = 0;
  int vertices = 0;
  Int edges = 0;
  Int recurrence_edges = 0;  ///< from |E_k| = b |E_{k-1}| + (#base edges) |V_{k-1}|^3
  bool vacuous = false;      ///< n < 6: no 6-sets
  Int max_six_set = 0;       ///< max induced edges over 6-sets of G_k
  Int min_six_set_complement = 0;  ///< min over 6-sets of the complement
  Rational density;          ///< |E_k| / C(n, 3)
  /// e in [0, edges] (subgraphs of G_k) and [C(n,3) - edges, C(n,3)]
  /// (supergraphs of its complement) do not arrow (6, 10).
  std::pair<Int, Int> low_interval{0, 0};
  std::pair<Int, Int> high_interval{0, 0};
  Int covered_sizes = 0;  ///< distinct e in the union of both intervals
  Int possible_sizes = 0;  ///< C(n, 3) + 1
  bool avoids_6_10 = false;
};

/// Exhaustively checks the 6-set claims for the depth-k blow-up.
BlowupReport verify_blowup_claims(int depth, BlowupBase base = BlowupBase::SingleEdge,
                                  const Limits& limits = {});

}  // namespace pairset
