#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "pairset/io.hpp"
#include "pairset/serialize.hpp"

using namespace pairset;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("pairset_test_" + name);
}

}  // namespace

TEST_CASE("theorem-main prints the certified pair") {
  const auto r = run({"theorem-main", "--r", "3", "--m", "12"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("certified: (12,110), case 1\n", 0) == 0);
  CHECK(r.out.find("trace:") != std::string::npos);
  const auto low = run({"theorem-main", "--r", "3", "--m", "5"});
  CHECK(low.code == 1);
  CHECK(low.err.find("below threshold") != std::string::npos);
}

TEST_CASE("classify prints one line per m") {
  const auto r = run({"classify", "--r", "3", "--m-max", "15"});
  CHECK(r.code == 0);
  CHECK(r.out.find("m=6: {10}\n") != std::string::npos);
  CHECK(r.out.find("m=7: {}\n") != std::string::npos);
  CHECK(r.out.find("m=15: {}\n") != std::string::npos);
  CHECK(r.out.find("survivors:") != std::string::npos);
}

TEST_CASE("oracle sizes prints the arrowing set") {
  const auto r = run({"oracle", "sizes", "--n", "5", "--r", "3", "--m", "4", "--f", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("arrowing: {8..10}") != std::string::npos);
  CHECK(r.out.find("non-arrowing: {0..7}") != std::string::npos);
  const auto j = run({"oracle", "sizes", "--n", "5", "--r", "3", "--m", "4", "--f", "4", "--format", "json"});
  CHECK(nlohmann::json::parse(j.out).at("arrowing") == nlohmann::json{8, 9, 10});
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"avoid", "--m", "6"}).code == 1);
  CHECK(run({"avoid", "--m", "6", "--f", "10", "--bogus"}).code == 1);
  CHECK(run({"avoid", "--m", "6", "--f", "99"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("theorem-main") != std::string::npos);
  const auto refused = run({"--budget", "10", "oracle", "arrows", "--n", "6", "--e", "10", "--m", "5", "--f", "4"});
  CHECK(refused.code == 2);
  CHECK(refused.err.find("refused") != std::string::npos);
  CHECK(run({"--spectrum-cap", "10", "oracle", "blowup-verify", "--depth", "3"}).code == 2);
}

TEST_CASE("PAIRSET_BUDGET overrides the default budget") {
  ::setenv("PAIRSET_BUDGET", "10", 1);
  const auto r = run({"oracle", "arrows", "--n", "6", "--e", "10", "--m", "5", "--f", "4"});
  ::unsetenv("PAIRSET_BUDGET");
  CHECK(r.code == 2);
  CHECK(run({"oracle", "arrows", "--n", "5", "--e", "7", "--m", "4", "--f", "4"}).code == 0);
}

TEST_CASE("json output round trips through the schemas") {
  const auto a = run({"avoid", "--m", "12", "--f", "110", "--format", "json"});
  CHECK(a.code == 0);
  const auto cert = certificate_from_document(nlohmann::json::parse(a.out));
  REQUIRE(cert);
  CHECK(cert->verify());

  const auto t = run({"--format", "json", "theorem-main", "--m", "100"});
  CHECK(theorem_main_from_json(nlohmann::json::parse(t.out)).f == 80850);

  const auto b = run({"bounds", "--m", "6", "--f", "10", "--format", "json"});
  CHECK(density_bound_from_json(nlohmann::json::parse(b.out)).bound == Rational(BigInt(5), BigInt(9)));

  const auto o = run({"oracle", "arrows", "--n", "5", "--e", "7", "--m", "4", "--f", "4", "--format", "json"});
  const auto v = arrow_verdict_from_json(nlohmann::json::parse(o.out));
  CHECK_FALSE(v.arrows);
  REQUIRE(v.counterexample);
  CHECK(v.counterexample->size() == 7);
}

TEST_CASE("table output renders rationals with a decimal") {
  const auto b = run({"bounds", "--r", "3", "--m", "6", "--f", "10"});
  CHECK(b.out.find("5/9 (≈ 0.5556)") != std::string::npos);
  const auto c = run({"bounds", "--r", "3"});
  CHECK(c.out.find("13/25") != std::string::npos);
  CHECK(run({"bounds", "--r", "5"}).code == 1);
}

TEST_CASE("construct writes graph files and is seed-deterministic") {
  const auto p = temp_file("sparse.txt");
  const auto a = run({"construct", "sparse", "--n", "25", "--m", "5", "--seed", "4", "--out", p.string()});
  CHECK(a.code == 0);
  CHECK(a.err.find("generator:") != std::string::npos);
  const auto g = read_hypergraph(p);
  CHECK(is_sparse(g, 5));
  const auto b = run({"construct", "sparse", "--n", "25", "--m", "5", "--seed", "4"});
  CHECK(b.out == serialize(g));
  CHECK(b.out == run({"construct", "sparse", "--n", "25", "--m", "5", "--seed", "4"}).out);
  std::filesystem::remove(p);

  const auto blow = run({"construct", "blowup", "--depth", "2"});
  CHECK(parse_hypergraph(blow.out).size() == 30);
  const auto tur = run({"construct", "turan", "--n", "9", "--l", "3"});
  CHECK(parse_hypergraph(tur.out).size() == 27);
  const auto rea = run({"construct", "realize", "--n", "40", "--e", "1000", "--m", "6"});
  CHECK(rea.code == 0);
  CHECK(parse_hypergraph(rea.out).size() == 1000);
  const auto comp = run({"construct", "realize", "--complement", "--n", "10", "--e", "115", "--m", "5"});
  CHECK(parse_hypergraph(comp.out).size() == 115);
}

TEST_CASE("spectrum reads a graph file") {
  const auto p = temp_file("blowup.txt");
  CHECK(run({"construct", "blowup", "--depth", "2", "--out", p.string()}).code == 0);
  const auto s = run({"spectrum", "--in", p.string(), "--m", "6"});
  CHECK(s.code == 0);
  CHECK(s.out.rfind("m=6 subsets=84\n", 0) == 0);
  const auto j = run({"spectrum", "--in", p.string(), "--m", "6", "--format", "json"});
  const auto spec = spectrum_from_json(nlohmann::json::parse(j.out));
  CHECK(spec.max() == 8);
  std::filesystem::remove(p);
  CHECK(run({"spectrum", "--in", "/nonexistent/graph.txt", "--m", "3"}).code == 1);
}

TEST_CASE("avoid reports checks and conclusion") {
  const auto r = run({"avoid", "--r", "3", "--m", "12", "--f", "110"});
  CHECK(r.out.find("conclusion: absolutely avoidable") != std::string::npos);
  const auto n = run({"avoid", "--m", "6", "--f", "10"});
  CHECK(n.out.find("conclusion: not certified") != std::string::npos);
  const auto s = run({"avoid", "--m", "5", "--f", "5", "--window", "strict"});
  CHECK(s.code == 0);
}
