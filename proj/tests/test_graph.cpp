#include "pairwalk/graph.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

using namespace pairwalk;

TEST_CASE("graph construction and basic accessors") {
  Graph g(4);
  CHECK(g.size() == 4);
  CHECK(g.edge_count() == 0);
  g.add_edge(0, 2);
  g.add_edge(2, 3);
  CHECK(g.has_edge(2, 0));
  CHECK(!g.has_edge(0, 1));
  CHECK(g.degree(2) == 2);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 2}, {2, 3}});

  CHECK_THROWS_AS(Graph(0), std::invalid_argument);
  CHECK_THROWS_AS(Graph(13), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(g.has_edge(-1, 0), std::invalid_argument);
}

TEST_CASE("named families") {
  CHECK(path_graph(3).edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(path_graph(1).edge_count() == 0);

  Graph c3 = cycle_graph(3);
  for (int v = 0; v < 3; ++v) CHECK(c3.degree(v) == 2);

  CHECK(complete_graph(4).edge_count() == 6);
  CHECK(star_graph(4).degree(0) == 4);
  CHECK(star_graph(4).edge_count() == 4);

  Graph ds = double_star_graph(2, 3);
  CHECK(ds.size() == 7);
  CHECK(ds.degree(0) == 3);
  CHECK(ds.degree(1) == 4);
  CHECK(ds.has_edge(0, 1));

  CHECK(figure1_graph().edges() ==
        std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 5}});
  CHECK(figure3_graph().edges() ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 5}, {4, 5}});
  CHECK(figure4_graph() == complement(figure3_graph()));

  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
  CHECK_THROWS_AS(star_graph(0), std::invalid_argument);
  CHECK_THROWS_AS(double_star_graph(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(path_graph(0), std::invalid_argument);
}

TEST_CASE("build_named parses family specs") {
  CHECK(build_named("path:5") == path_graph(5));
  CHECK(build_named("cycle:4") == cycle_graph(4));
  CHECK(build_named("complete:3") == complete_graph(3));
  CHECK(build_named("star:6") == star_graph(6));
  CHECK(build_named("double_star:2:3") == double_star_graph(2, 3));
  CHECK(build_named("figure1") == figure1_graph());
  CHECK(build_named("figure3") == figure3_graph());
  CHECK(build_named("figure4") == figure4_graph());

  CHECK_THROWS_AS(build_named("petersen"), std::invalid_argument);
  CHECK_THROWS_AS(build_named("path"), std::invalid_argument);
  CHECK_THROWS_AS(build_named("path:x"), std::invalid_argument);
  CHECK_THROWS_AS(build_named("path:3:4"), std::invalid_argument);
  CHECK_THROWS_AS(build_named("cycle:-4"), std::invalid_argument);
}

TEST_CASE("complement basics and involution") {
  Graph empty4 = complement(complete_graph(4));
  CHECK(empty4.edge_count() == 0);

  // complement(figure3) is the published 8-edge companion graph.
  CHECK(complement(figure3_graph()).edges() ==
        std::vector<std::pair<int, int>>{
            {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 5}, {2, 4}, {2, 5}, {3, 4}});

  std::mt19937 rng(12345);
  for (int i = 0; i < 50; ++i) {
    Graph g = oracles::random_graph(rng, 2 + int(rng() % 11));
    CHECK(complement(complement(g)) == g);
  }
}

TEST_CASE("join and disjoint union") {
  CHECK(join(Graph(1), Graph(1)) == complete_graph(2));

  Graph k22 = join(Graph(2), Graph(2));
  CHECK(k22.edge_count() == 4);
  CHECK(oracles::brute_isomorphic(k22, cycle_graph(4)));

  std::mt19937 rng(777);
  for (int i = 0; i < 30; ++i) {
    Graph g = oracles::random_graph(rng, 1 + int(rng() % 5));
    Graph h = oracles::random_graph(rng, 1 + int(rng() % 5));
    Graph j = join(g, h);
    CHECK(j.edge_count() == g.edge_count() + h.edge_count() + g.size() * h.size());
    // complement(join(g,h)) == disjoint_union(complement(g), complement(h))
    CHECK(complement(j) == disjoint_union(complement(g), complement(h)));
  }
}

TEST_CASE("cartesian product") {
  Graph p2p3 = cartesian_product(path_graph(2), path_graph(3));
  CHECK(p2p3.size() == 6);
  CHECK(p2p3.edge_count() == 7);
  CHECK(oracles::brute_isomorphic(p2p3, figure3_graph()));

  std::mt19937 rng(4242);
  Graph h = oracles::random_graph(rng, 6);
  CHECK(cartesian_product(Graph(1), h) == h);

  // Adjacency rule: (u,a)~(v,b) iff (u=v and a~b) or (a=b and u~v).
  Graph g = cycle_graph(3);
  Graph k2 = path_graph(2);
  Graph p = cartesian_product(g, k2);
  for (int u = 0; u < 3; ++u)
    for (int a = 0; a < 2; ++a)
      for (int v = 0; v < 3; ++v)
        for (int b = 0; b < 2; ++b) {
          if (u == v && a == b) continue;
          bool expect = (u == v && k2.has_edge(a, b)) || (a == b && g.has_edge(u, v));
          CHECK(p.has_edge(u * 2 + a, v * 2 + b) == expect);
        }
}

TEST_CASE("twins") {
  CHECK(twins(path_graph(3), 0, 2));
  CHECK(!twins(path_graph(4), 0, 3));
  Graph star = star_graph(4);
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b) CHECK(twins(star, a, b));
  CHECK(!twins(star, 0, 1));
  CHECK_THROWS_AS(twins(star, 2, 2), std::invalid_argument);

  // twins(a,b) iff the transposition (a b) is an automorphism.
  std::mt19937 rng(99);
  for (int i = 0; i < 40; ++i) {
    int n = 3 + int(rng() % 5);
    Graph g = oracles::random_graph(rng, n);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        std::vector<int> swap_ab(n);
        for (int v = 0; v < n; ++v) swap_ab[v] = v;
        std::swap(swap_ab[a], swap_ab[b]);
        CHECK(twins(g, a, b) == (oracles::apply_permutation(g, swap_ab) == g));
      }
  }
}

TEST_CASE("connectivity") {
  CHECK(is_connected(path_graph(7)));
  CHECK(!is_connected(disjoint_union(path_graph(2), path_graph(3))));
  CHECK(is_connected(Graph(1)));
  Graph two = Graph(2);
  CHECK(!is_connected(two));
}

TEST_CASE("bipartition") {
  auto c4 = bipartition(cycle_graph(4));
  REQUIRE(c4.has_value());
  CHECK((*c4)[0] == (*c4)[2]);
  CHECK((*c4)[1] == (*c4)[3]);
  CHECK((*c4)[0] != (*c4)[1]);

  CHECK(!bipartition(cycle_graph(3)).has_value());
  CHECK(!bipartition(cycle_graph(5)).has_value());

  auto p6 = bipartition(path_graph(6));
  REQUIRE(p6.has_value());
  int part0 = int(std::count(p6->begin(), p6->end(), 0));
  CHECK(part0 == 3);

  // Whenever a coloring is returned it is proper; absence matches a brute
  // force search over all 2-colorings.
  std::mt19937 rng(31337);
  for (int i = 0; i < 60; ++i) {
    int n = 2 + int(rng() % 6);
    Graph g = oracles::random_graph(rng, n, 0.4);
    auto coloring = bipartition(g);
    bool brute_ok = false;
    for (std::uint32_t mask = 0; mask < (1u << n) && !brute_ok; ++mask) {
      bool proper = true;
      for (auto [u, v] : g.edges())
        if (((mask >> u) & 1) == ((mask >> v) & 1)) proper = false;
      brute_ok = proper;
    }
    CHECK(coloring.has_value() == brute_ok);
    if (coloring) {
      for (auto [u, v] : g.edges()) CHECK((*coloring)[u] != (*coloring)[v]);
    }
  }
}

TEST_CASE("automorphisms") {
  CHECK(automorphisms(path_graph(3)).size() == 2);
  CHECK(automorphisms(cycle_graph(4)).size() == 8);
  CHECK(automorphisms(complete_graph(4)).size() == 24);

  // Figure-1 graph group order, against a plain filter over all 720
  // permutations.
  Graph fig1 = figure1_graph();
  int brute = 0;
  std::vector<int> perm{0, 1, 2, 3, 4, 5};
  do {
    if (oracles::apply_permutation(fig1, perm) == fig1) ++brute;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(automorphisms(fig1).size() == std::size_t(brute));

  CHECK_THROWS_AS(automorphisms(Graph(11)), std::invalid_argument);

  // Group axioms: closed under composition and inverse, identity present.
  std::mt19937 rng(2024);
  for (int i = 0; i < 10; ++i) {
    int n = 2 + int(rng() % 5);
    Graph g = oracles::random_graph(rng, n);
    auto group = automorphisms(g);
    std::set<std::vector<int>> members(group.begin(), group.end());
    std::vector<int> identity(n);
    for (int v = 0; v < n; ++v) identity[v] = v;
    CHECK(members.count(identity) == 1);
    for (const auto& sigma : group) {
      std::vector<int> inverse(n);
      for (int v = 0; v < n; ++v) inverse[sigma[v]] = v;
      CHECK(members.count(inverse) == 1);
      for (const auto& tau : group) {
        std::vector<int> composed(n);
        for (int v = 0; v < n; ++v) composed[v] = sigma[tau[v]];
        CHECK(members.count(composed) == 1);
      }
    }
  }
}
