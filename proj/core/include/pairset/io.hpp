#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "pairset/hypergraph.hpp"

namespace pairset {

// Text format, LF line endings:
//   line 1:      "r n"
//   other lines: r strictly increasing 0-based vertex indices, single spaces
//   "#..."       comment; blank lines are skipped
// serialize() writes edges in colex order, so serialize(parse(s)) == s for
// any s that serialize() produced.

Hypergraph parse_hypergraph(std::string_view text);
std::string serialize(const Hypergraph& g);

Hypergraph read_hypergraph(const std::filesystem::path& path);
void write_hypergraph(const std::filesystem::path& path, const Hypergraph& g);

}  // namespace pairset
