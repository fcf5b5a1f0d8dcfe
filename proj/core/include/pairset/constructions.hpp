#pragma once

#include <cstdint>
#include <string>

#include "pairset/hypergraph.hpp"
#include "pairset/rational.hpp"

namespace pairset {

/// T_r(n, l). Part i holds a consecutive vertex block; parts sized by partite_sizes.
Hypergraph turan_graph(int n, int l, int r);

enum class BlowupBase {
  SingleEdge,  ///< K_3^(3): 3 vertices, one edge
  TightC5,     ///< C_5^(3): edges {i, i+1, i+2} mod 5
};

std::string to_string(BlowupBase base);
BlowupBase blowup_base_from_string(const std::string& name);

struct BlowupSpec {
  BlowupBase base = BlowupBase::SingleEdge;
  int depth = 1;
  int max_vertices = 256;
};

/// G_1 is the base; G_k takes one copy of G_{k-1} per base vertex and adds,
/// for each base edge, every triple with one vertex in each of its copies.
/// Throws BudgetExceeded when the vertex count passes spec.max_vertices.
Hypergraph iterated_blowup(const BlowupSpec& spec);

/// Number of vertices of G_k, without building it.
Int blowup_order(BlowupBase base, int depth);

struct SparseGenConfig {
  int n = 0;
  int r = 3;
  int m = 0;
  std::uint64_t seed = 1;
  Rational density_constant = Rational(BigInt(1), BigInt(4));
  Limits limits{};
};

/// Side-channel record of a random_sparse run. Never part of the graph file.
struct GeneratorLog {
  double probability = 0.0;
  std::size_t sampled_edges = 0;
  std::size_t repairs = 0;
  std::size_t final_edges = 0;
  /// floor(c * n^(r - 1 + 1/(m + 1))); reported, not promised.
  std::uint64_t theoretical_target = 0;
};

struct SparseResult {
  Hypergraph graph;
  GeneratorLog log;
};

/// Samples each r-set with p = min(1, c * n^(-m/(m+1))) in colex order from a
/// seeded mt19937_64, then repairs: every m-set with more than m edges loses
/// its lowest-rank edges until it has m. Output is verified m-sparse before
/// return; BudgetExceeded if C(n, m) is over the spectrum cap.
SparseResult random_sparse(const SparseGenConfig& config);

struct RealizeOptions {
  std::uint64_t seed = 1;
  Rational density_constant = Rational(BigInt(1), BigInt(4));
  int max_attempts = 8;
  Limits limits{};
};

struct Realization {
  Hypergraph graph;
  int clique_order = 0;       ///< k: the clique occupies vertices 0..k-1
  Int sparse_edges = 0;       ///< edges outside the clique
  GeneratorLog generator{};   ///< last generator run, when one was needed
};

/// K_k disjoint union an m-sparse r-graph on n - k vertices, with exactly e
/// edges, where k is the largest clique order with C(k, r) <= e.
/// Throws InfeasibleError when the sparse part cannot supply e - C(k, r) edges.
Realization realize_clique_plus_sparse(int n, Int e, int r, int m, const RealizeOptions& options = {});

/// Complement of realize_clique_plus_sparse(n, C(n,r) - e, r, m).
Realization realize_complement_sparse(int n, Int e, int r, int m, const RealizeOptions& options = {});

/// True when every set of at most m vertices spans at most m edges: for
/// n >= m this is is_sparse(g, m), otherwise |E| <= m.
bool at_most_m_per_m_set(const Hypergraph& g, int m, const Limits& limits = {});

}  // namespace pairset
