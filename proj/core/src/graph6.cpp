#include "pairwalk/graph6.hpp"

#include "pairwalk/errors.hpp"

namespace pairwalk {

std::string graph6_encode(const Graph& g) {
  int n = g.size();
  std::string out;
  out.push_back(char(n + 63));
  int bit_count = n * (n - 1) / 2;
  int chunk = 0, filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(char(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(char((chunk << (6 - filled)) + 63));
  (void)bit_count;
  return out;
}

Graph graph6_decode(const std::string& line) {
  if (line.empty()) throw graph6_error("graph6: empty line");
  for (char c : line) {
    if (c < 63 || c > 126) throw graph6_error("graph6: byte out of printable range");
  }
  int n = line[0] - 63;
  if (n > 62) throw graph6_error("graph6: multi-byte order encoding not supported");
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("graph6: order " + std::to_string(n) +
                                " outside supported range 1..." + std::to_string(kMaxVertices));
  }
  std::size_t expected = 1 + std::size_t(n * (n - 1) / 2 + 5) / 6;
  if (line.size() != expected) {
    throw graph6_error("graph6: expected " + std::to_string(expected) + " bytes for order " +
                       std::to_string(n) + ", got " + std::to_string(line.size()));
  }
  Graph g(n);
  int bit_count = n * (n - 1) / 2;
  int idx = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++idx) {
      int byte = line[1 + idx / 6] - 63;
      if ((byte >> (5 - idx % 6)) & 1) g.add_edge(u, v);
    }
  }
  // Padding bits beyond the triangle must be zero.
  for (int idx2 = bit_count; idx2 % 6 != 0; ++idx2) {
    int byte = line[1 + idx2 / 6] - 63;
    if ((byte >> (5 - idx2 % 6)) & 1) throw graph6_error("graph6: nonzero padding bits");
  }
  return g;
}

}  // namespace pairwalk
