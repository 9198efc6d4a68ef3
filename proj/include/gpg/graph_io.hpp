#pragma once

#include <iosfwd>
#include <string>

#include "gpg/graph.hpp"

namespace gpg {

/// Text format:
///   c <comment>
///   p gp <n>
///   e <u> <v>
/// 0-based endpoints, one edge per line. Duplicate and reversed edges are
/// tolerated and deduplicated; self-loops are a ParseError.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
Graph load_graph(const std::string& path);

/// Canonical serialization: header, then edges sorted with u < v.
/// Parsing the output reproduces the graph bit-exactly.
std::string format_graph(const Graph& g);
void save_graph(const Graph& g, const std::string& path);

}  // namespace gpg
