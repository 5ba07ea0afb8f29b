#pragma once

#include <string>

#include "pairwalk/graph.hpp"

namespace pairwalk {

// Standard graph6 line (no trailing newline): header byte n+63, then the
// upper-triangle adjacency bits in column-major order ((0,1),(0,2),(1,2),
// (0,3),...), packed 6 bits per byte MSB-first, zero padded, each byte
// offset by 63.
std::string graph6_encode(const Graph& g);

// Throws graph6_error for malformed text (header, byte range, length,
// nonzero padding) and std::invalid_argument when the order parses fine but
// falls outside this library's supported 1..12 range.
Graph graph6_decode(const std::string& line);

}  // namespace pairwalk
