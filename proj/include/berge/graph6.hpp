#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "berge/graph.hpp"

namespace berge {

/// Decodes one graph6 line (an optional ">>graph6<<" prefix and trailing
/// newline are accepted). Throws ParseError naming the failing byte offset.
/// `max_n` guards the vertex count.
Graph parse_graph6(std::string_view text, int max_n = kMaxVertices);

/// Canonical graph6 encoding (no header, no newline).
std::string emit_graph6(const Graph& g);

/// Reads a DIMACS-style edge list: `c` comments, one `p edge n m` header,
/// then `e u v` lines with 1-based endpoints.
Graph parse_dimacs(std::istream& in, int max_n = kMaxVertices);

}  // namespace berge
