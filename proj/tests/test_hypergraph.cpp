#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "pairset/constructions.hpp"
#include "pairset/errors.hpp"
#include "pairset/hypergraph.hpp"
#include "pairset/io.hpp"
#include "support/brute.hpp"

using namespace pairset;

namespace {

Hypergraph random_graph(std::mt19937_64& rng, int r, int n, double p) {
  std::vector<std::uint64_t> ranks;
  const auto cap = static_cast<std::uint64_t>(brute::binom(n, r));
  std::bernoulli_distribution coin(p);
  for (std::uint64_t i = 0; i < cap; ++i)
    if (coin(rng)) ranks.push_back(i);
  return Hypergraph::from_ranks(r, n, ranks);
}

brute::EdgeSet edge_set(const Hypergraph& g) {
  const auto e = g.edges();
  return brute::EdgeSet(e.begin(), e.end());
}

Hypergraph g2() { return iterated_blowup({BlowupBase::SingleEdge, 2}); }

}  // namespace

TEST_CASE("complete") {
  CHECK(complete(5, 3).size() == 10);
  CHECK(complete(2, 3).size() == 0);
  CHECK(complete(6, 3).size() == 20);
}

TEST_CASE("complement") {
  CHECK(complement(complete(5, 3)).size() == 0);
  CHECK(complement(Hypergraph::from_edges(3, 3, {{0, 1, 2}})).size() == 0);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto g = random_graph(rng, 3, 7, 0.4);
    CHECK(complement(complement(g)) == g);
    CHECK(g.size() + complement(g).size() == g.capacity());
  }
}

TEST_CASE("disjoint union") {
  const auto k5v = disjoint_union(complete(5, 3), Hypergraph(3, 1));
  CHECK(k5v.order() == 6);
  CHECK(k5v.size() == 10);
  const auto kk = disjoint_union(complete(4, 3), complete(4, 3));
  CHECK(kk.order() == 8);
  CHECK(kk.size() == 8);
  const auto g = g2();
  CHECK(disjoint_union(Hypergraph(3, 0), g) == g);
  CHECK_THROWS_AS(disjoint_union(complete(4, 3), complete(4, 2)), DomainError);
}

TEST_CASE("induced") {
  const std::vector<int> s{1, 2, 4, 5};
  CHECK(induced(complete(6, 3), s) == complete(4, 3));
  const auto g = g2();
  std::vector<int> all(9);
  std::iota(all.begin(), all.end(), 0);
  CHECK(induced(g, all) == g);
  // one whole copy of G_1 blown up plus a second: the two internal edges only
  const std::vector<int> two_parts{0, 1, 2, 3, 4, 5};
  CHECK(induced(g, two_parts).size() == 2);
  const std::vector<int> bad{0, 9};
  CHECK_THROWS_AS(induced(g, bad), DomainError);
}

TEST_CASE("induced commutes with complement") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    const auto g = random_graph(rng, 3, 8, 0.5);
    const std::vector<int> s{0, 2, 3, 5, 7};
    CHECK(induced(complement(g), s) == complement(induced(g, s)));
  }
}

TEST_CASE("spectrum examples") {
  const auto g = g2();
  const auto s = spectrum(g, 6);
  CHECK(s.max() == 8);
  CHECK(s.min() == 2);
  CHECK(s.total() == 84);
  const auto e = spectrum(Hypergraph(3, 10), 6);
  CHECK(e.counts == std::map<Int, std::uint64_t>{{0, 210}});
  CHECK(spectrum(Hypergraph(3, 4), 6).counts.empty());
}

TEST_CASE("spectrum agrees with brute force, sums, and reflects under complement") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const int n = 6 + i % 4;
    const auto g = random_graph(rng, 3, n, 0.3 + 0.02 * i);
    for (int m = 3; m <= n; ++m) {
      const auto s = spectrum(g, m);
      CHECK(s.total() == static_cast<std::uint64_t>(brute::binom(n, m)));
      const auto sizes = brute::induced_sizes(edge_set(g), n, m);
      std::set<int> keys;
      for (auto [f, c] : s.counts) keys.insert(static_cast<int>(f));
      CHECK(keys == sizes);
      const auto sc = spectrum(complement(g), m);
      const Int cm = brute::binom(m, 3);
      for (auto [f, c] : s.counts) CHECK(sc.counts.at(cm - f) == c);
    }
  }
}

TEST_CASE("spectrum is identical across job counts and respects its cap") {
  const auto g = iterated_blowup({BlowupBase::SingleEdge, 3});
  Limits one;
  Limits four;
  four.jobs = 4;
  CHECK(spectrum(g, 5, one) == spectrum(g, 5, four));
  Limits tiny;
  tiny.spectrum_cap = 1000;
  CHECK_THROWS_AS(spectrum(g, 6, tiny), BudgetExceeded);
}

TEST_CASE("is_sparse") {
  CHECK(is_sparse(Hypergraph(3, 9), 6));
  CHECK_FALSE(is_sparse(complete(6, 3), 6));
  CHECK_FALSE(is_sparse(g2(), 6));
  CHECK(is_sparse(complete(5, 3), 6));
}

TEST_CASE("canonical form") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 120; ++i) {
    const int n = 3 + i % 5;
    const auto g = random_graph(rng, 3, n, 0.45);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(relabel(g, perm)) == canonical_form(g));
  }
  std::vector<int> p{4, 2, 0, 3, 1};
  CHECK(canonical_form(relabel(complete(5, 3), p)) == canonical_form(complete(5, 3)));
  CHECK(canonical_form(Hypergraph::from_edges(3, 3, {{0, 1, 2}})) != canonical_form(Hypergraph(3, 3)));
  // same edge count, different shapes: a 2-edge path vs two disjoint edges
  const auto a = Hypergraph::from_edges(2, 4, {{0, 1}, {1, 2}});
  const auto b = Hypergraph::from_edges(2, 4, {{0, 1}, {2, 3}});
  CHECK(canonical_form(a) != canonical_form(b));
  CHECK_THROWS_AS(canonical_form(Hypergraph(3, 11)), BudgetExceeded);
}

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(Hypergraph::from_edges(3, 4, {{0, 1}}), DomainError);
  CHECK_THROWS_AS(Hypergraph::from_edges(3, 4, {{0, 1, 4}}), DomainError);
  CHECK_THROWS_AS(Hypergraph::from_edges(3, 4, {{0, 1, 2}, {2, 1, 0}}), DomainError);
  CHECK_THROWS_AS(Hypergraph::from_ranks(3, 4, {0, 4}), DomainError);
  CHECK(Hypergraph::from_edges(3, 4, {{2, 0, 1}}).contains(std::vector<int>{0, 1, 2}));
}

TEST_CASE("parse and serialize") {
  const auto g = parse_hypergraph("3 4\n0 1 2\n1 2 3\n");
  CHECK(g.uniformity() == 3);
  CHECK(g.order() == 4);
  CHECK(g.size() == 2);
  const auto b = g2();
  CHECK(parse_hypergraph(serialize(b)) == b);
  const std::string text = serialize(b);
  CHECK(serialize(parse_hypergraph(text)) == text);
  CHECK(parse_hypergraph("# comment\n3 4\n\n# edge\n0 1 2\n").size() == 1);

  auto line_of = [](const std::string& s) -> std::size_t {
    try {
      parse_hypergraph(s);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("3 4\n0 1 5\n") == 2);
  CHECK(line_of("3 4\n0 1 2\n0 1 2\n") == 3);
  CHECK(line_of("3 4\n0 1\n") == 2);
  CHECK(line_of("3 4\n1 0 2\n") == 2);
  CHECK(line_of("3\n") == 1);
  CHECK(line_of("") == 1);
  CHECK(line_of("3 4\n0  1 2\n") == 2);
  CHECK(line_of("3 4\r\n0 1 2\n") == 1);
}
