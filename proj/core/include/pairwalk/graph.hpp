#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pairwalk {

// Hard cap shared by the whole library: adjacency rows are single-word
// bitmasks and every exact-arithmetic bound downstream assumes small n.
inline constexpr int kMaxVertices = 12;

// Labeled simple graph on 1..12 vertices, adjacency as per-vertex bitmasks.
// Immutable once built (add_edge is construction-phase only); cheap to copy
// and safe to share across threads.
class Graph {
 public:
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edge_list);

  int size() const { return n_; }
  std::uint16_t neighbors(int v) const;
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  int degree(int v) const;
  int edge_count() const;
  // Edge list sorted lexicographically with u < v.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 1;
  std::array<std::uint16_t, kMaxVertices> adj_{};
};

// Named families. Vertex labelings are fixed so downstream state bookkeeping
// is reproducible.
Graph path_graph(int n);            // 0-1-2-...-(n-1), n >= 1
Graph cycle_graph(int n);           // n >= 3
Graph complete_graph(int n);        // n >= 1
Graph star_graph(int leaves);       // K_{1,k}: center 0, leaves 1..k
Graph double_star_graph(int s, int t);  // centers 0,1 adjacent; s leaves on 0, t on 1
Graph figure1_graph();  // 6 vertices; smallest graph with PST from an edge pair to a non-edge pair
Graph figure3_graph();  // P_2 x P_3 with the fixed labeling used by its worked examples
Graph figure4_graph();  // complement of figure3_graph(); hosts the pair-transfer composition example
// Parses a family spec such as "path:5", "double_star:2:3", "figure1".
Graph build_named(const std::string& spec);

Graph complement(const Graph& g);
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
// Cartesian product; vertex (u, a) of g x h gets index u*h.size() + a.
Graph cartesian_product(const Graph& g, const Graph& h);

// N(a)\{b} == N(b)\{a}; equivalently the transposition (a b) is an automorphism.
bool twins(const Graph& g, int a, int b);
bool is_connected(const Graph& g);
// Proper 2-coloring (color per vertex, BFS layering per component), or absent.
std::optional<std::vector<int>> bipartition(const Graph& g);
// All adjacency-preserving permutations (perm[v] = image of v), n <= 10.
std::vector<std::vector<int>> automorphisms(const Graph& g);

}  // namespace pairwalk
