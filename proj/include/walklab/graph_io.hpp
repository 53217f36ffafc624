#pragma once

#include <string>
#include <string_view>

#include "walklab/graph.hpp"

namespace walklab {

/// Reads the line-oriented graph format:
///
///   # comment
///   mgraph <n>
///   e <u> <v> <mult>
///   l <v> <mult>
///
/// At most one line per unordered pair. Errors carry the 1-based line number.
Multigraph parse_graph(std::string_view text);

/// Canonical form: header, then pairs in lexicographic order. Loops are
/// written as "l" lines in their sorted position.
std::string serialize_graph(const Multigraph& g);

Multigraph load_graph_file(const std::string& path);

}  // namespace walklab
