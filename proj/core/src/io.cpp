#include "pairset/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "pairset/combinatorics.hpp"
#include "pairset/errors.hpp"

namespace pairset {

namespace {

// Splits on single spaces; empty fields (double spaces, trailing space) are errors.
std::vector<long long> parse_fields(std::string_view line, std::size_t lineno) {
  std::vector<long long> out;
  std::size_t pos = 0;
  while (true) {
    auto next = line.find(' ', pos);
    auto field = line.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    if (field.empty()) throw ParseError(lineno, "empty field (fields are separated by single spaces)");
    long long value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
      throw ParseError(lineno, "not an integer: '" + std::string(field) + "'");
    out.push_back(value);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  bool have_header = false;
  int r = 0;
  int n = 0;
  std::vector<std::uint64_t> ranks;
  std::vector<std::size_t> rank_lines;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    auto line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    pos = (end == std::string_view::npos) ? text.size() : end + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') throw ParseError(lineno, "CR line ending; expected LF");
    if (line.empty() || line.front() == '#') continue;
    auto fields = parse_fields(line, lineno);
    if (!have_header) {
      if (fields.size() != 2) throw ParseError(lineno, "malformed header; expected 'r n'");
      if (fields[0] < 2) throw ParseError(lineno, "malformed header; uniformity must be >= 2");
      if (fields[1] < 0 || fields[1] > 1'000'000) throw ParseError(lineno, "malformed header; bad vertex count");
      r = static_cast<int>(fields[0]);
      n = static_cast<int>(fields[1]);
      try {
        binomial(n, r);
      } catch (const OverflowError&) {
        throw ParseError(lineno, "malformed header; C(n,r) overflows");
      }
      have_header = true;
      continue;
    }
    if (static_cast<int>(fields.size()) != r)
      throw ParseError(lineno, "wrong arity: " + std::to_string(fields.size()) + " vertices, expected " +
                                   std::to_string(r));
    std::vector<int> edge;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (fields[i] < 0 || fields[i] >= n)
        throw ParseError(lineno, "vertex " + std::to_string(fields[i]) + " out of range (n=" + std::to_string(n) + ")");
      if (i > 0 && fields[i] <= fields[i - 1]) throw ParseError(lineno, "vertices not strictly increasing");
      edge.push_back(static_cast<int>(fields[i]));
    }
    ranks.push_back(colex_rank(edge));
    rank_lines.push_back(lineno);
  }
  if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "malformed header; missing 'r n' line");

  std::vector<std::size_t> order(ranks.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) {
    return ranks[a] != ranks[b] ? ranks[a] < ranks[b] : rank_lines[a] < rank_lines[b];
  });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (ranks[order[i]] == ranks[order[i - 1]]) throw ParseError(rank_lines[order[i]], "duplicate edge");
  return Hypergraph::from_ranks(r, n, std::move(ranks));
}

std::string serialize(const Hypergraph& g) {
  std::string out = std::to_string(g.uniformity()) + " " + std::to_string(g.order()) + "\n";
  for (const auto& e : g.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(e[i]);
    }
    out += '\n';
  }
  return out;
}

Hypergraph read_hypergraph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_hypergraph(buf.str());
}

void write_hypergraph(const std::filesystem::path& path, const Hypergraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write " + path.string());
  out << serialize(g);
}

}  // namespace pairset
