#include "pairwalk/enumerate.hpp"

#include <set>
#include <stdexcept>

#include "pairwalk/canonical.hpp"

namespace pairwalk {

namespace {

void check_order(int n, int cap, const char* what) {
  if (n < 1 || n > cap) {
    throw std::invalid_argument(std::string(what) + " supports 1..." + std::to_string(cap) +
                                " vertices, got " + std::to_string(n));
  }
}

// Canonical codes of all graphs (connected or not) on n vertices.
std::set<CanonicalForm> all_graph_codes(int n) {
  std::set<CanonicalForm> level = {canonical_form(Graph(1))};
  for (int k = 2; k <= n; ++k) {
    std::set<CanonicalForm> next;
    for (const CanonicalForm& code : level) {
      Graph parent = from_canonical(code);
      // Attach vertex k-1 to every subset of the existing vertices, the
      // empty subset included (isolated vertices are legitimate here).
      for (std::uint32_t subset = 0; subset < (1u << (k - 1)); ++subset) {
        Graph child(k);
        for (auto [u, v] : parent.edges()) child.add_edge(u, v);
        for (int v = 0; v < k - 1; ++v)
          if ((subset >> v) & 1) child.add_edge(v, k - 1);
        next.insert(canonical_form(child));
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace

std::vector<Graph> enumerate_all_graphs(int n) {
  check_order(n, 9, "graph enumeration");
  std::vector<Graph> out;
  for (const CanonicalForm& code : all_graph_codes(n)) out.push_back(from_canonical(code));
  return out;
}

std::vector<Graph> enumerate_connected(int n) {
  check_order(n, 9, "graph enumeration");
  std::vector<Graph> out;
  for (const CanonicalForm& code : all_graph_codes(n)) {
    Graph g = from_canonical(code);
    if (is_connected(g)) out.push_back(g);
  }
  return out;
}

std::vector<Graph> enumerate_trees(int n) {
  check_order(n, kMaxVertices, "tree enumeration");
  std::set<CanonicalForm> level = {canonical_form(Graph(1))};
  for (int k = 2; k <= n; ++k) {
    std::set<CanonicalForm> next;
    for (const CanonicalForm& code : level) {
      Graph parent = from_canonical(code);
      for (int v = 0; v < k - 1; ++v) {
        Graph child(k);
        for (auto [a, b] : parent.edges()) child.add_edge(a, b);
        child.add_edge(v, k - 1);
        next.insert(canonical_form(child));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (const CanonicalForm& code : level) out.push_back(from_canonical(code));
  return out;
}

}  // namespace pairwalk
