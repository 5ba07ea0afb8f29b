#include "pairwalk/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace pairwalk {

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("graph order must be in [1, " +
                                std::to_string(kMaxVertices) + "], got " + std::to_string(n));
  }
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edge_list) {
  Graph g(n);
  for (auto [u, v] : edge_list) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for order " +
                                std::to_string(n_));
  }
}

std::uint16_t Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(u));
  adj_[u] |= std::uint16_t(1u << v);
  adj_[v] |= std::uint16_t(1u << u);
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[v]);
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if ((adj_[u] >> v) & 1) out.emplace_back(u, v);
  return out;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices, got " + std::to_string(n));
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph star_graph(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star needs at least 1 leaf");
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph double_star_graph(int s, int t) {
  if (s < 1 || t < 1) throw std::invalid_argument("double star arm counts must be >= 1");
  Graph g(s + t + 2);
  g.add_edge(0, 1);
  for (int i = 0; i < s; ++i) g.add_edge(0, 2 + i);
  for (int i = 0; i < t; ++i) g.add_edge(1, 2 + s + i);
  return g;
}

Graph figure1_graph() {
  return Graph::from_edges(6, {{0, 3}, {0, 4}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 5}});
}

Graph figure3_graph() {
  return Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 5}, {4, 5}});
}

Graph figure4_graph() { return complement(figure3_graph()); }

Graph build_named(const std::string& spec) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t colon = spec.find(':', start);
    parts.push_back(spec.substr(start, colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  auto arg = [&](std::size_t i) {
    if (i >= parts.size()) throw std::invalid_argument("named graph '" + spec + "': missing parameter");
    try {
      std::size_t used = 0;
      int value = std::stoi(parts[i], &used);
      if (used != parts[i].size()) throw std::invalid_argument("");
      return value;
    } catch (const std::exception&) {
      throw std::invalid_argument("named graph '" + spec + "': bad integer parameter '" + parts[i] + "'");
    }
  };
  auto expect_arity = [&](std::size_t n_params) {
    if (parts.size() != n_params + 1) {
      throw std::invalid_argument("named graph '" + spec + "': expected " +
                                  std::to_string(n_params) + " parameter(s)");
    }
  };
  const std::string& family = parts[0];
  if (family == "path") { expect_arity(1); return path_graph(arg(1)); }
  if (family == "cycle") { expect_arity(1); return cycle_graph(arg(1)); }
  if (family == "complete") { expect_arity(1); return complete_graph(arg(1)); }
  if (family == "star") { expect_arity(1); return star_graph(arg(1)); }
  if (family == "double_star") { expect_arity(2); return double_star_graph(arg(1), arg(2)); }
  if (family == "figure1") { expect_arity(0); return figure1_graph(); }
  if (family == "figure3") { expect_arity(0); return figure3_graph(); }
  if (family == "figure4") { expect_arity(0); return figure4_graph(); }
  throw std::invalid_argument("unknown named graph family '" + family + "'");
}

Graph complement(const Graph& g) {
  Graph c(g.size());
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

Graph join(const Graph& g, const Graph& h) {
  Graph j = disjoint_union(g, h);
  for (int u = 0; u < g.size(); ++u)
    for (int v = 0; v < h.size(); ++v) j.add_edge(u, g.size() + v);
  return j;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph u(g.size() + h.size());
  for (auto [a, b] : g.edges()) u.add_edge(a, b);
  for (auto [a, b] : h.edges()) u.add_edge(g.size() + a, g.size() + b);
  return u;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  Graph p(g.size() * h.size());
  auto id = [&](int u, int a) { return u * h.size() + a; };
  for (int u = 0; u < g.size(); ++u)
    for (int a = 0; a < h.size(); ++a) {
      for (int b = a + 1; b < h.size(); ++b)
        if (h.has_edge(a, b)) p.add_edge(id(u, a), id(u, b));
      for (int v = u + 1; v < g.size(); ++v)
        if (g.has_edge(u, v)) p.add_edge(id(u, a), id(v, a));
    }
  return p;
}

bool twins(const Graph& g, int a, int b) {
  if (a == b) throw std::invalid_argument("twins requires two distinct vertices");
  std::uint16_t outside = std::uint16_t(~((1u << a) | (1u << b)));
  return (g.neighbors(a) & outside) == (g.neighbors(b) & outside);
}

bool is_connected(const Graph& g) {
  std::uint16_t seen = 1;  // start from vertex 0
  std::uint16_t frontier = 1;
  while (frontier) {
    std::uint16_t next = 0;
    for (int v = 0; v < g.size(); ++v)
      if ((frontier >> v) & 1) next |= g.neighbors(v);
    frontier = next & std::uint16_t(~seen);
    seen |= next;
  }
  return seen == std::uint16_t((1u << g.size()) - 1);
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> color(g.size(), -1);
  for (int root = 0; root < g.size(); ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::vector<int> queue{root};
    while (!queue.empty()) {
      int u = queue.back();
      queue.pop_back();
      for (int v = 0; v < g.size(); ++v) {
        if (!((g.neighbors(u) >> v) & 1)) continue;
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

namespace {

void extend_automorphism(const Graph& g, std::vector<int>& image, std::uint16_t used, int depth,
                         std::vector<std::vector<int>>& out) {
  int n = g.size();
  if (depth == n) {
    out.push_back(image);
    return;
  }
  for (int w = 0; w < n; ++w) {
    if ((used >> w) & 1) continue;
    if (g.degree(depth) != g.degree(w)) continue;
    bool ok = true;
    for (int u = 0; u < depth && ok; ++u)
      ok = g.has_edge(depth, u) == g.has_edge(w, image[u]);
    if (!ok) continue;
    image[depth] = w;
    extend_automorphism(g, image, used | std::uint16_t(1u << w), depth + 1, out);
  }
}

}  // namespace

std::vector<std::vector<int>> automorphisms(const Graph& g) {
  if (g.size() > 10) {
    throw std::invalid_argument("automorphism search capped at 10 vertices, got " +
                                std::to_string(g.size()));
  }
  std::vector<std::vector<int>> out;
  std::vector<int> image(g.size(), -1);
  extend_automorphism(g, image, 0, 0, out);
  return out;
}

}  // namespace pairwalk
