#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>

#include "pairwalk/graph.hpp"

namespace pairwalk {

// Isomorphism-invariant key: the lexicographically minimal upper-triangle
// adjacency bit string over all vertex relabelings. Bits use the same
// column-major order as graph6, so the key is itself a decodable adjacency
// encoding. Equal keys <=> isomorphic graphs.
struct CanonicalForm {
  std::uint8_t n = 0;
  std::array<std::uint8_t, 9> code{};  // ceil(C(12,2)/8) bytes, zero padded

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& c) const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint8_t byte) {
      h ^= byte;
      h *= 1099511628211ull;
    };
    mix(c.n);
    for (std::uint8_t b : c.code) mix(b);
    return h;
  }
};

// Branch-and-bound search over relabelings, pruned against the best code seen
// so far and skipping twin vertices (interchangeable branches).
CanonicalForm canonical_form(const Graph& g);
Graph from_canonical(const CanonicalForm& c);
bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace pairwalk
