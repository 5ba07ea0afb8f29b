#include "pairwalk/canonical.hpp"

#include <algorithm>

namespace pairwalk {

namespace {

// The candidate code under a partial relabeling is tracked column by column:
// col[d] holds the adjacency bits between the vertex placed at position d and
// the vertices placed at positions 0..d-1, earliest placement most
// significant. Comparing col arrays position by position is exactly the
// lexicographic comparison of the column-major upper-triangle bit string.
struct CanonicalSearch {
  const Graph* g = nullptr;
  int n = 0;
  std::array<std::uint16_t, kMaxVertices> twin_mask{};
  std::array<int, kMaxVertices> perm{};
  std::array<std::uint16_t, kMaxVertices> col{};
  std::array<std::uint16_t, kMaxVertices> best_col{};
  std::uint16_t used = 0;

  std::uint16_t column_bits(int v, int depth) const {
    std::uint16_t bits = 0;
    std::uint16_t nbrs = g->neighbors(v);
    for (int i = 0; i < depth; ++i) bits = std::uint16_t((bits << 1) | ((nbrs >> perm[i]) & 1));
    return bits;
  }

  // True while col[1..depth-1] equals the current best prefix. It can never
  // exceed it: larger branches are pruned before recursing, and any best
  // update while this node is on the stack comes from its own subtree, whose
  // completions share this prefix.
  bool prefix_equals_best(int depth) const {
    for (int d = 1; d < depth; ++d)
      if (col[d] != best_col[d]) return false;
    return true;
  }

  void run(const Graph& graph) {
    g = &graph;
    n = graph.size();
    for (int v = 0; v < n; ++v) {
      twin_mask[v] = 0;
      for (int u = 0; u < n; ++u)
        if (u != v && twins(graph, u, v)) twin_mask[v] |= std::uint16_t(1u << u);
    }
    // Seed with the identity labeling so pruning is active from the start.
    for (int v = 0; v < n; ++v) {
      perm[v] = v;
      best_col[v] = column_bits(v, v);
    }
    descend(0);
  }

  void descend(int depth) {
    if (depth == n) {
      for (int d = 1; d < n; ++d) {
        if (col[d] > best_col[d]) return;
        if (col[d] < best_col[d]) break;
        if (d == n - 1) return;  // equal to best, nothing to do
      }
      best_col = col;
      return;
    }
    struct Move {
      std::uint16_t bits;
      int v;
    };
    std::array<Move, kMaxVertices> moves;
    int move_count = 0;
    for (int v = 0; v < n; ++v)
      if (!((used >> v) & 1)) moves[move_count++] = {column_bits(v, depth), v};
    std::sort(moves.begin(), moves.begin() + move_count, [](const Move& a, const Move& b) {
      return a.bits < b.bits || (a.bits == b.bits && a.v < b.v);
    });
    std::uint16_t tried = 0;
    for (int i = 0; i < move_count; ++i) {
      auto [bits, v] = moves[i];
      // The best code shrinks as the search runs, so the prefix relation is
      // re-evaluated per move rather than inherited from the parent.
      if (prefix_equals_best(depth) && bits > best_col[depth]) break;
      // Two still-unplaced twins always have equal columns and lead to
      // isomorphic subtrees; exploring one of them suffices.
      if (i > 0 && moves[i - 1].bits == bits && (twin_mask[v] & tried)) continue;
      tried |= std::uint16_t(1u << v);
      perm[depth] = v;
      col[depth] = bits;
      used |= std::uint16_t(1u << v);
      descend(depth + 1);
      used &= std::uint16_t(~(1u << v));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  CanonicalSearch search;
  search.run(g);
  CanonicalForm out;
  out.n = std::uint8_t(g.size());
  int idx = 0;
  for (int d = 1; d < g.size(); ++d) {
    for (int i = 0; i < d; ++i, ++idx) {
      int bit = (search.best_col[d] >> (d - 1 - i)) & 1;
      if (bit) out.code[idx / 8] |= std::uint8_t(0x80u >> (idx % 8));
    }
  }
  return out;
}

Graph from_canonical(const CanonicalForm& c) {
  Graph g(c.n);
  int idx = 0;
  for (int v = 1; v < c.n; ++v)
    for (int u = 0; u < v; ++u, ++idx)
      if ((c.code[idx / 8] >> (7 - idx % 8)) & 1) g.add_edge(u, v);
  return g;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.size() != h.size() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace pairwalk
