#include <doctest.h>

#include <numeric>
#include <random>

#include "pairset/combinatorics.hpp"
#include "pairset/constructions.hpp"
#include "pairset/errors.hpp"
#include "pairset/io.hpp"
#include "support/brute.hpp"

using namespace pairset;

TEST_CASE("turan graph") {
  CHECK(turan_graph(9, 3, 3).size() == 27);
  CHECK(turan_graph(12, 4, 3).size() == 108);
  CHECK(turan_graph(5, 2, 3).size() == 0);
  for (int n = 0; n <= 10; ++n)
    for (int l = 1; l <= 5; ++l) CHECK(static_cast<Int>(turan_graph(n, l, 3).size()) == turan_count(n, l, 3));
  // no edge meets a part twice: parts are consecutive blocks of sizes 3,3,2
  const auto g = turan_graph(8, 3, 3);
  for (const auto& e : g.edges()) {
    auto part = [](int v) { return v < 3 ? 0 : v < 6 ? 1 : 2; };
    CHECK(part(e[0]) != part(e[1]));
    CHECK(part(e[1]) != part(e[2]));
    CHECK(part(e[0]) != part(e[2]));
  }
}

TEST_CASE("iterated blow-up sizes follow the recurrence") {
  CHECK(iterated_blowup({BlowupBase::SingleEdge, 1}).size() == 1);
  Int prev_v = 1, prev_e = 0;
  for (int k = 1; k <= 4; ++k) {
    const auto g = iterated_blowup({BlowupBase::SingleEdge, k});
    CHECK(g.order() == prev_v * 3);
    CHECK(static_cast<Int>(g.size()) == prev_v * prev_v * prev_v + 3 * prev_e);
    CHECK(blowup_order(BlowupBase::SingleEdge, k) == g.order());
    prev_v = g.order();
    prev_e = static_cast<Int>(g.size());
  }
  CHECK(iterated_blowup({BlowupBase::SingleEdge, 2}).size() == 30);
  CHECK(iterated_blowup({BlowupBase::SingleEdge, 3}).size() == 819);
  CHECK_THROWS_AS(iterated_blowup({BlowupBase::SingleEdge, 6}), BudgetExceeded);
}

TEST_CASE("blow-up density decreases toward 1/4") {
  auto density = [](int k) {
    const auto g = iterated_blowup({BlowupBase::SingleEdge, k});
    return Rational(BigInt(g.size()), BigInt(binomial(g.order(), 3)));
  };
  const Rational d2 = density(2), d3 = density(3), quarter(BigInt(1), BigInt(4));
  CHECK(d2 == Rational(BigInt(30), BigInt(84)));
  CHECK(d3 == Rational(BigInt(819), BigInt(2925)));
  CHECK(d3 < d2);
  CHECK(d3 >= quarter);
}

TEST_CASE("tight C5 blow-up") {
  const auto g1 = iterated_blowup({BlowupBase::TightC5, 1});
  CHECK(g1.order() == 5);
  CHECK(g1.size() == 5);
  const auto g2 = iterated_blowup({BlowupBase::TightC5, 2});
  CHECK(g2.order() == 25);
  CHECK(g2.size() == 5 * 5 + 5 * 125);
  CHECK(blowup_base_from_string("c5") == BlowupBase::TightC5);
  CHECK(to_string(BlowupBase::SingleEdge) == "k3");
  CHECK_THROWS_AS(blowup_base_from_string("k4"), DomainError);
}

TEST_CASE("random sparse graphs are sparse, deterministic, and dense enough") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    SparseGenConfig cfg;
    cfg.n = 30;
    cfg.r = 3;
    cfg.m = 6;
    cfg.seed = seed;
    const auto a = random_sparse(cfg);
    CHECK(is_sparse(a.graph, 6));
    CHECK(a.log.final_edges == a.graph.size());
    CHECK(a.graph.size() >= 21);
    const auto b = random_sparse(cfg);
    CHECK(serialize(a.graph) == serialize(b.graph));
  }
  SparseGenConfig c1, c2;
  c1.n = c2.n = 20;
  c1.m = c2.m = 5;
  c1.seed = 1;
  c2.seed = 2;
  CHECK(random_sparse(c1).graph != random_sparse(c2).graph);
}

TEST_CASE("random sparse refuses over the verification cap") {
  SparseGenConfig cfg;
  cfg.n = 200;
  cfg.m = 8;
  cfg.limits.spectrum_cap = 1000;
  CHECK_THROWS_AS(random_sparse(cfg), BudgetExceeded);
}

TEST_CASE("clique plus sparse realizations") {
  auto check_realization = [](const Realization& res, int n, Int e, int r, int m) {
    CHECK(res.graph.order() == n);
    CHECK(static_cast<Int>(res.graph.size()) == e);
    const int k = res.clique_order;
    CHECK(binomial(k, r) + res.sparse_edges == e);
    std::vector<int> clique(k), rest(n - k);
    std::iota(clique.begin(), clique.end(), 0);
    std::iota(rest.begin(), rest.end(), k);
    CHECK(induced(res.graph, clique) == complete(k, r));
    const auto outside = induced(res.graph, rest);
    CHECK(static_cast<Int>(outside.size()) == res.sparse_edges);
    CHECK(at_most_m_per_m_set(outside, m));
  };

  const auto r1 = realize_clique_plus_sparse(40, 1000, 3, 6);
  CHECK(r1.clique_order == binom_decompose(1000, 3).x);
  CHECK(r1.clique_order == 19);
  CHECK(r1.sparse_edges == 1000 - 969);
  check_realization(r1, 40, 1000, 3, 6);

  for (int k = 3; k <= 10; ++k) {
    const auto res = realize_clique_plus_sparse(14, binomial(k, 3), 3, 5);
    CHECK(res.clique_order == k);
    CHECK(res.sparse_edges == 0);
    check_realization(res, 14, binomial(k, 3), 3, 5);
  }
  CHECK(realize_clique_plus_sparse(12, 0, 3, 5).graph == Hypergraph(3, 12));

  for (Int e : {5, 40, 90, 125, 200}) check_realization(realize_clique_plus_sparse(24, e, 3, 5), 24, e, 3, 5);

  CHECK_THROWS_AS(realize_clique_plus_sparse(8, 55, 3, 5), InfeasibleError);
  CHECK_THROWS_AS(realize_clique_plus_sparse(8, 57, 3, 5), DomainError);
}

TEST_CASE("complement-type realizations") {
  CHECK(realize_complement_sparse(9, 84, 3, 5).graph == complete(9, 3));
  const auto res = realize_complement_sparse(10, 115, 3, 5);
  CHECK(res.graph.size() == 115);
  const auto comp = complement(res.graph);
  CHECK(comp.size() == 5);
  CHECK(is_sparse(comp, 5));
}

TEST_CASE("realizations are reproducible from the seed") {
  RealizeOptions opts;
  opts.seed = 9;
  const auto a = realize_clique_plus_sparse(30, 700, 3, 6, opts);
  const auto b = realize_clique_plus_sparse(30, 700, 3, 6, opts);
  CHECK(serialize(a.graph) == serialize(b.graph));
}
