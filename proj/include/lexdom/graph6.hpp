#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lexdom/graph.hpp"

namespace lexdom {

/// Decodes one graph6 line (trailing whitespace ignored). Throws std::invalid_argument on a
/// malformed header, characters outside 63..126, a truncated or overlong bit stream, or an
/// order above kMaxVertices.
Graph parse_graph6(std::string_view line);

std::string write_graph6(const Graph& g);

/// Reads every non-empty line of a graph6 stream; a leading ">>graph6<<" marker is accepted.
std::vector<Graph> read_graph6_stream(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace lexdom
