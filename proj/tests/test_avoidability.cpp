#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "pairset/avoidability.hpp"
#include "pairset/combinatorics.hpp"
#include "pairset/errors.hpp"
#include "pairset/hypergraph.hpp"
#include "support/brute.hpp"

using namespace pairset;

TEST_CASE("realizable_A examples") {
  const auto a = realizable_A(6, 10, 3);
  REQUIRE(a.witness);
  CHECK(a.witness->x == 5);
  CHECK(a.witness->h == 0);
  const auto b = realizable_A(12, 110, 3);
  CHECK_FALSE(b.realizable());
  CHECK(b.rejected.size() == 13);
  const auto z = realizable_A(9, 0, 3);
  REQUIRE(z.witness);
  CHECK(z.witness->h == 0);
  CHECK(binomial(z.witness->x, 3) == 0);
}

TEST_CASE("realizable_B examples") {
  CHECK_FALSE(realizable_B(10, 36, 3).realizable());
  const auto w = realizable_B(6, 10, 3);
  REQUIRE(w.witness);
  CHECK(w.witness->x == 5);
  CHECK(w.witness->h == 0);
  const auto full = realizable_B(7, 35, 3);
  REQUIRE(full.witness);
  CHECK(full.witness->x == 7);
}

TEST_CASE("realizability scans agree with the definition") {
  for (bool strict : {false, true})
    for (bool cap : {false, true}) {
      RealizabilityRules rules{strict ? Window::Strict : Window::AtMost, cap};
      for (int r = 3; r <= 4; ++r)
        for (int m = r; m <= 16; ++m)
          for (Int f = 0; f <= binomial(m, r); ++f) {
            const auto a = realizable_A(m, f, r, rules);
            const auto b = realizable_B(m, f, r, rules);
            CHECK(a.realizable() == brute::realizable_A(m, f, r, strict, cap));
            CHECK(b.realizable() == brute::realizable_B(m, f, r, strict));
            if (a.witness) {
              CHECK(binomial(a.witness->x, r) + a.witness->h == f);
            } else {
              CHECK(a.rejected.size() == static_cast<std::size_t>(m + 1));
            }
            if (b.witness) CHECK(binomial(b.witness->x, r) - b.witness->h == f);
          }
    }
}

TEST_CASE("gap lemma examples") {
  CHECK(gap_mainclaim(12, 110, 3) == 9);
  CHECK_FALSE(gap_mainclaim(6, 10, 3));
  CHECK_FALSE(gap_mainclaim(12, 96, 3));
  CHECK(gap_mainclaim2(10, 36, 3) == 8);
  CHECK_FALSE(gap_mainclaim2(6, 10, 3));
  CHECK_FALSE(gap_mainclaim2(7, 0, 3));
}

TEST_CASE("gap lemmas imply absence, exhaustively for r = 3 and m <= 20") {
  for (int m = 3; m <= 20; ++m)
    for (Int f = 0; f <= binomial(m, 3); ++f) {
      if (auto k = gap_mainclaim(m, f, 3)) {
        CHECK(binomial(*k, 3) + m < f);
        CHECK(f < binomial(*k + 1, 3));
        CHECK_FALSE(realizable_A(m, f, 3).realizable());
        CHECK_FALSE(brute::realizable_A(m, f, 3, false, false));
      }
      if (auto k = gap_mainclaim2(m, f, 3)) {
        CHECK(binomial(*k - 1, 3) < f);
        CHECK(f < binomial(*k, 3) - m);
        CHECK_FALSE(realizable_B(m, f, 3).realizable());
        CHECK_FALSE(brute::realizable_B(m, f, 3));
      }
    }
}

TEST_CASE("absolutely_avoidable examples") {
  const auto c = absolutely_avoidable(12, 110, 3);
  REQUIRE(c);
  CHECK(c->k_f == 9);
  CHECK(c->k_fbar == 9);
  CHECK(c->kind == CertificateCase::Both);
  CHECK(c->verify());
  CHECK_FALSE(absolutely_avoidable(6, 10, 3));
  CHECK_FALSE(absolutely_avoidable(8, 0, 3));
}

TEST_CASE("certificate iff both A-scans are absent, with complement symmetry") {
  for (int r = 3; r <= 4; ++r)
    for (int m = r + 1; m <= 18; ++m) {
      const Int total = binomial(m, r);
      for (Int f = 0; f <= total; ++f) {
        const auto c = absolutely_avoidable(m, f, r);
        const bool expect =
            !brute::realizable_A(m, f, r) && !brute::realizable_A(m, total - f, r);
        CHECK(c.has_value() == expect);
        CHECK(absolutely_avoidable(m, total - f, r).has_value() == c.has_value());
        if (c) {
          CHECK(c->verify());
          for (const auto& ineq : c->trace) CHECK(ineq.holds());
        }
      }
    }
}

TEST_CASE("tampered certificates fail verification") {
  auto c = absolutely_avoidable(12, 110, 3);
  REQUIRE(c);
  REQUIRE_FALSE(c->trace.empty());
  auto bad = *c;
  bad.trace.front().lhs = bad.trace.front().rhs + 1000;
  CHECK_FALSE(bad.verify());
  AvoidabilityCertificate forged{PairQuery(3, 6, 10), CertificateCase::ScanOnly, std::nullopt, std::nullopt, {}};
  CHECK_FALSE(forged.verify());
}

TEST_CASE("theorem_main_pair examples") {
  const auto a = theorem_main_pair(12, 3);
  CHECK(a.f == 110);
  CHECK(a.f0 == 110);
  CHECK(a.x == 9);
  CHECK(a.kind == TheoremCase::One);
  const auto b = theorem_main_pair(100, 3);
  CHECK(b.f == 80850);
  CHECK(b.x == 79);
  CHECK(b.kind == TheoremCase::One);
  CHECK_THROWS_AS(theorem_main_pair(5, 3), BelowThreshold);
  try {
    theorem_main_pair(5, 3);
  } catch (const BelowThreshold& e) {
    CHECK_FALSE(e.failing().holds());
  }
  CHECK_THROWS_AS(theorem_main_pair(12, 2), DomainError);
}

TEST_CASE("theorem_main_pair re-verifies independently for r in 3..5, m <= 500") {
  for (Int r = 3; r <= 5; ++r) {
    int ok = 0;
    for (Int m = r + 1; m <= 500; ++m) {
      std::optional<TheoremMainResult> found;
      try {
        found = theorem_main_pair(m, r);
      } catch (const BelowThreshold&) {
        continue;
      } catch (const OverflowError&) {
        break;
      }
      ++ok;
      const auto& res = *found;
      CAPTURE(m);
      CHECK(res.f0 == binomial(m, r) / 2);
      if (res.kind == TheoremCase::One) CHECK(res.f == res.f0);
      else CHECK(res.f == res.f0 - m - 1);
      CHECK(res.certificate.verify());
      const auto indep = absolutely_avoidable(m, res.f, r);
      REQUIRE(indep);
      CHECK(indep->pair.f() == res.f);
      CHECK(!brute::realizable_A(m, res.f, r));
      CHECK(!brute::realizable_A(m, binomial(m, r) - res.f, r));
    }
    CHECK(ok > 0);
  }
}

TEST_CASE("theorem_main_threshold is a true threshold") {
  const auto t = theorem_main_threshold(3, 300);
  REQUIRE(t);
  for (Int m = *t; m <= 300; ++m) CHECK_NOTHROW(theorem_main_pair(m, 3));
  CHECK_THROWS_AS(theorem_main_pair(*t - 1, 3), BelowThreshold);
}

TEST_CASE("enumerate_candidates") {
  CHECK(enumerate_candidates(6, 3) == std::vector<Int>{10});
  CHECK(enumerate_candidates(7, 3).empty());
  CHECK(enumerate_candidates(10, 3).empty());
  for (bool strict : {false, true})
    for (bool cap : {false, true})
      for (int r = 3; r <= 4; ++r)
        for (int m = r + 1; m <= 22; ++m) {
          const RealizabilityRules rules{strict ? Window::Strict : Window::AtMost, cap};
          const auto c = enumerate_candidates(m, r, rules);
          const Int total = binomial(m, r);
          for (Int f : c) CHECK(std::binary_search(c.begin(), c.end(), total - f));
          std::vector<Int> expect;
          for (Int f = 1; f < total; ++f)
            if (brute::realizable_A(m, f, r, strict, cap) && brute::realizable_A(m, total - f, r, strict, cap) &&
                brute::realizable_B(m, f, r, strict) && brute::realizable_B(m, total - f, r, strict))
              expect.push_back(f);
          CHECK(c == expect);
          if (m <= 16) {
            std::vector<Int> via_checks;
            for (Int f = 1; f < total; ++f)
              if (four_checks(m, f, r, rules).all_realizable()) via_checks.push_back(f);
            CHECK(c == via_checks);
          }
        }
}

TEST_CASE("witnesses build graphs realizing the pair, r = 3 and m <= 12") {
  for (int m = 3; m <= 12; ++m)
    for (Int f = 0; f <= binomial(m, 3); ++f) {
      const auto a = realizable_A(m, f, 3);
      if (a.witness && a.witness->h <= binomial(m - a.witness->x, 3)) {
        const int x = static_cast<int>(a.witness->x);
        // K_x plus the first h triples on the remaining m - x vertices
        std::vector<std::vector<int>> edges;
        brute::for_each_subset(x, 3, [&](const std::vector<int>& s) { edges.push_back(s); });
        Int left = a.witness->h;
        brute::for_each_subset(m - x, 3, [&](const std::vector<int>& s) {
          if (left-- > 0) edges.push_back({s[0] + x, s[1] + x, s[2] + x});
        });
        const auto g = Hypergraph::from_edges(3, m, edges);
        CHECK(static_cast<Int>(g.size()) == f);
        CHECK(spectrum(g, m).contains(f));
      }
      const auto b = realizable_B(m, f, 3);
      if (b.witness) {
        const int x = static_cast<int>(b.witness->x);
        std::vector<std::vector<int>> edges;
        Int drop = b.witness->h;
        brute::for_each_subset(x, 3, [&](const std::vector<int>& s) {
          if (drop-- > 0) return;
          edges.push_back(s);
        });
        const auto g = Hypergraph::from_edges(3, m, edges);
        CHECK(static_cast<Int>(g.size()) == f);
        CHECK(complement(g).size() == static_cast<std::size_t>(binomial(m, 3) - f));
      }
    }
}

TEST_CASE("window and capacity variants") {
  RealizabilityRules strict{Window::Strict, true};
  CHECK(enumerate_candidates(6, 3, strict) == std::vector<Int>{10});
  // with h <= m, K_3 plus a 5-edge graph on 2 vertices is ruled out only by capacity
  RealizabilityRules loose{Window::AtMost, false};
  CHECK(realizable_A(5, 6, 3, loose).realizable());
  CHECK_FALSE(realizable_A(5, 6, 3).realizable());
}
