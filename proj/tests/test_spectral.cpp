#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "pairwalk/enumerate.hpp"
#include "pairwalk/errors.hpp"
#include "pairwalk/graph.hpp"
#include "pairwalk/intmatrix.hpp"
#include "pairwalk/spectral.hpp"

using namespace pairwalk;

namespace {

constexpr double kPi = std::numbers::pi_v<double>;

std::vector<double> pair_state(int n, int a, int b) {
  std::vector<double> s(n, 0.0);
  s[a] = 1.0;
  s[b] = -1.0;
  return s;
}

double max_entry_diff(const RealMatrix& m, const std::vector<std::vector<double>>& expected) {
  double worst = 0.0;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) worst = std::max(worst, std::fabs(m.at(i, j) - expected[i][j]));
  return worst;
}

double max_entry_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double worst = 0.0;
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) worst = std::max(worst, std::abs(a.at(i, j) - b.at(i, j)));
  return worst;
}

Graph random_graph(int n, std::mt19937& rng) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() % 2) g.add_edge(i, j);
  return g;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.n * b.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      for (int k = 0; k < b.n; ++k)
        for (int l = 0; l < b.n; ++l)
          out.at(i * b.n + k, j * b.n + l) = a.at(i, j) * b.at(k, l);
  return out;
}

}  // namespace

TEST_CASE("eigendecompose: Laplacian of P3 yields the three known idempotents") {
  EigenDecomposition d = eigendecompose(hamiltonian(path_graph(3), HamiltonianKind::kLaplacian));
  REQUIRE(d.eigenvalues.size() == 3);
  CHECK(d.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-11));
  CHECK(d.eigenvalues[1] == doctest::Approx(1.0));
  CHECK(d.eigenvalues[2] == doctest::Approx(3.0));

  const double t = 1.0 / 3.0, s = 1.0 / 6.0;
  CHECK(max_entry_diff(d.projectors[0], {{t, t, t}, {t, t, t}, {t, t, t}}) < 1e-9);
  CHECK(max_entry_diff(d.projectors[1], {{0.5, 0, -0.5}, {0, 0, 0}, {-0.5, 0, 0.5}}) < 1e-9);
  CHECK(max_entry_diff(d.projectors[2], {{s, -2 * s, s}, {-2 * s, 4 * s, -2 * s}, {s, -2 * s, s}}) <
        1e-9);
}

TEST_CASE("eigendecompose: the 6-vertex example graph") {
  EigenDecomposition d = eigendecompose(hamiltonian(figure1_graph(), HamiltonianKind::kLaplacian));
  REQUIRE(d.eigenvalues.size() == 5);
  const double r3 = std::sqrt(3.0);
  CHECK(d.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-11));
  CHECK(d.eigenvalues[1] == doctest::Approx(3.0 - r3));
  CHECK(d.eigenvalues[2] == doctest::Approx(2.0));
  CHECK(d.eigenvalues[3] == doctest::Approx(4.0));
  CHECK(d.eigenvalues[4] == doctest::Approx(3.0 + r3));

  const double q = 0.25, h = 0.5;
  CHECK(max_entry_diff(d.projectors[2], {{q, 0, 0, -q, q, -q},
                                         {0, h, -h, 0, 0, 0},
                                         {0, -h, h, 0, 0, 0},
                                         {-q, 0, 0, q, -q, q},
                                         {q, 0, 0, -q, q, -q},
                                         {-q, 0, 0, q, -q, q}}) < 1e-9);
  CHECK(max_entry_diff(d.projectors[3], {{q, 0, 0, -q, -q, q},
                                         {0, 0, 0, 0, 0, 0},
                                         {0, 0, 0, 0, 0, 0},
                                         {-q, 0, 0, q, q, -q},
                                         {-q, 0, 0, q, q, -q},
                                         {q, 0, 0, -q, -q, q}}) < 1e-9);
}

TEST_CASE("eigendecompose: zero matrix has one group with identity projector") {
  EigenDecomposition d = eigendecompose(hamiltonian(Graph(3), HamiltonianKind::kAdjacency));
  REQUIRE(d.eigenvalues.size() == 1);
  CHECK(d.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-11));
  CHECK(max_entry_diff(d.projectors[0], {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) < 1e-12);
}

TEST_CASE("eigendecompose: idempotent identities on random graphs") {
  std::mt19937 rng(7101);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + int(rng() % 6);
    Graph g = random_graph(n, rng);
    for (HamiltonianKind kind : kAllHamiltonians) {
      IntMatrix hmat = hamiltonian(g, kind);
      EigenDecomposition d = eigendecompose(hmat);

      // sum E_r = I and sum theta_r E_r = H.
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double total = 0.0, weighted = 0.0;
          for (std::size_t r = 0; r < d.projectors.size(); ++r) {
            total += d.projectors[r].at(i, j);
            weighted += d.eigenvalues[r] * d.projectors[r].at(i, j);
          }
          CHECK(std::fabs(total - (i == j ? 1.0 : 0.0)) < 1e-9);
          CHECK(std::fabs(weighted - double(hmat.at(i, j))) < 1e-8);
        }

      // E_r E_s = delta_{rs} E_r.
      for (std::size_t r = 0; r < d.projectors.size(); ++r)
        for (std::size_t s = 0; s < d.projectors.size(); ++s) {
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
              double prod = 0.0;
              for (int k = 0; k < n; ++k)
                prod += d.projectors[r].at(i, k) * d.projectors[s].at(k, j);
              const double expect = r == s ? d.projectors[r].at(i, j) : 0.0;
              CHECK(std::fabs(prod - expect) < 1e-9);
            }
        }
    }
  }
}

TEST_CASE("eigendecompose: absurd grouping tolerance is caught by the exact cross-check") {
  CHECK_THROWS_AS(eigendecompose(hamiltonian(path_graph(3), HamiltonianKind::kLaplacian), 10.0),
                  consistency_error);
}

TEST_CASE("transition: t = 0 gives the identity") {
  ComplexMatrix u = transition(hamiltonian(figure1_graph(), HamiltonianKind::kLaplacian), 0.0);
  for (int i = 0; i < u.n; ++i)
    for (int j = 0; j < u.n; ++j)
      CHECK(std::abs(u.at(i, j) - (i == j ? 1.0 : 0.0)) < 1e-12);
}

TEST_CASE("transition: U(pi/2) for the Laplacian of P3 matches the known matrix") {
  ComplexMatrix u = transition(hamiltonian(path_graph(3), HamiltonianKind::kLaplacian), kPi / 2);
  const std::complex<double> d1(1.0 / 3.0, 1.0 / 3.0);   // 1/3 + i/3
  const std::complex<double> d2(1.0 / 3.0, -2.0 / 3.0);  // 1/3 - 2i/3
  const std::complex<double> expected[3][3] = {
      {d1, d1, d2},
      {d1, d2, d1},
      {d2, d1, d1},
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(std::abs(u.at(i, j) - expected[i][j]) < 1e-9);
}

TEST_CASE("transition: Laplacian walk fixes the all-ones vector") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> dist(0.0, 8.0);
  for (int trial = 0; trial < 10; ++trial) {
    const double t = dist(rng);
    ComplexMatrix u = transition(hamiltonian(cycle_graph(4), HamiltonianKind::kLaplacian), t);
    for (int i = 0; i < 4; ++i) {
      std::complex<double> row_sum = 0.0;
      for (int j = 0; j < 4; ++j) row_sum += u.at(i, j);
      CHECK(std::abs(row_sum - 1.0) < 1e-9);
    }
  }
}

TEST_CASE("transition: unitary and symmetric on random samples") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> dist(0.0, 12.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + int(rng() % 6);
    Graph g = random_graph(n, rng);
    HamiltonianKind kind = kAllHamiltonians[rng() % 3];
    const double t = dist(rng);
    ComplexMatrix u = transition(hamiltonian(g, kind), t);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::complex<double> gram = 0.0;
        for (int k = 0; k < n; ++k) gram += u.at(i, k) * std::conj(u.at(j, k));
        CHECK(std::abs(gram - (i == j ? 1.0 : 0.0)) < 1e-9);
        CHECK(std::abs(u.at(i, j) - u.at(j, i)) < 1e-9);
      }
  }
}

TEST_CASE("fidelity: the 6-vertex example transfers perfectly at pi/2") {
  IntMatrix h = hamiltonian(figure1_graph(), HamiltonianKind::kLaplacian);
  std::vector<double> s1 = pair_state(6, 0, 3), s2 = pair_state(6, 4, 5);
  CHECK(fidelity(h, s1, s2, kPi / 2) >= 1.0 - 1e-9);

  // The amplitude is (e^{2it} - e^{4it})/2, so the fidelity curve is sin^2 t.
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> dist(0.0, 2 * kPi);
  for (int trial = 0; trial < 20; ++trial) {
    const double t = dist(rng);
    const double st = std::sin(t);
    CHECK(fidelity(h, s1, s2, t) == doctest::Approx(st * st).epsilon(1e-8).scale(1.0));
  }
}

TEST_CASE("fidelity: P3 edge-to-edge transfer at pi/2, and basics") {
  IntMatrix h = hamiltonian(path_graph(3), HamiltonianKind::kLaplacian);
  CHECK(fidelity(h, pair_state(3, 0, 1), pair_state(3, 1, 2), kPi / 2) >= 1.0 - 1e-9);
  CHECK(fidelity(h, pair_state(3, 0, 1), pair_state(3, 0, 1), 0.0) == doctest::Approx(1.0));

  CHECK_THROWS_AS(fidelity(h, std::vector<double>(3, 0.0), pair_state(3, 0, 1), 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(fidelity(h, pair_state(3, 0, 1), std::vector<double>(4, 1.0), 1.0),
                  std::invalid_argument);
}

TEST_CASE("fidelity_curve: grid layout and endpoint behavior") {
  IntMatrix h = hamiltonian(path_graph(3), HamiltonianKind::kLaplacian);
  auto curve = fidelity_curve(h, pair_state(3, 0, 1), pair_state(3, 0, 1), 2.0, 5);
  REQUIRE(curve.size() == 5);
  CHECK(curve[0].first == 0.0);
  CHECK(curve[4].first == 2.0);
  CHECK(curve[1].first == doctest::Approx(0.5));
  CHECK(curve[0].second == doctest::Approx(1.0));

  CHECK_THROWS_AS(fidelity_curve(h, pair_state(3, 0, 1), pair_state(3, 1, 2), 2.0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(fidelity_curve(h, pair_state(3, 0, 1), pair_state(3, 1, 2), 0.0, 10),
                  std::invalid_argument);
}

TEST_CASE("fidelity_curve: P4 end edges peak near sqrt(2) pi/2; C6 stays away from 1") {
  IntMatrix p4 = hamiltonian(path_graph(4), HamiltonianKind::kLaplacian);
  auto curve = fidelity_curve(p4, pair_state(4, 0, 1), pair_state(4, 2, 3), 2 * kPi, 100000);
  double best_t = 0.0, best_f = 0.0;
  for (const auto& [t, f] : curve)
    if (f > best_f) {
      best_f = f;
      best_t = t;
    }
  CHECK(best_f >= 1.0 - 1e-6);
  CHECK(std::fabs(best_t - std::sqrt(2.0) * kPi / 2) < 2 * (2 * kPi / 99999));

  IntMatrix c6 = hamiltonian(cycle_graph(6), HamiltonianKind::kLaplacian);
  for (auto [c, d] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}}) {
    double best = 0.0;
    for (const auto& [t, f] :
         fidelity_curve(c6, pair_state(6, 0, 1), pair_state(6, c, d), 2 * kPi, 20000))
      best = std::max(best, f);
    CHECK(best < 0.999);
  }
}

TEST_CASE("write_curve_csv: header and 17-digit round trip") {
  IntMatrix h = hamiltonian(path_graph(4), HamiltonianKind::kLaplacian);
  auto curve = fidelity_curve(h, pair_state(4, 0, 1), pair_state(4, 2, 3), 1.0, 4);
  std::ostringstream out;
  write_curve_csv(out, curve);
  std::istringstream in(out.str());
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "t,fidelity");
  for (const auto& [t, f] : curve) {
    REQUIRE(std::getline(in, line));
    const std::size_t comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    CHECK(std::stod(line.substr(0, comma)) == t);
    CHECK(std::stod(line.substr(comma + 1)) == f);
  }
  CHECK(!std::getline(in, line));
}

TEST_CASE("complement phase identity for pair states") {
  std::mt19937 rng(31337);
  std::uniform_real_distribution<double> dist(0.0, 2 * kPi);
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      Graph gc = complement(g);
      const int a = int(rng() % n);
      int b = int(rng() % n);
      while (b == a) b = int(rng() % n);
      const int c = int(rng() % n);
      int d = int(rng() % n);
      while (d == c) d = int(rng() % n);
      const double t = dist(rng);
      const double fg = fidelity(hamiltonian(g, HamiltonianKind::kLaplacian), pair_state(n, a, b),
                                 pair_state(n, c, d), t);
      const double fc = fidelity(hamiltonian(gc, HamiltonianKind::kLaplacian), pair_state(n, a, b),
                                 pair_state(n, c, d), t);
      CHECK(std::fabs(fg - fc) < 1e-8);
    }
  }
}

TEST_CASE("product identity: the walk factors over Cartesian products") {
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> dist(0.0, 6.0);
  std::vector<Graph> left_factors, right_factors;
  for (int n = 2; n <= 4; ++n)
    for (const Graph& g : enumerate_connected(n)) left_factors.push_back(g);
  for (int n = 2; n <= 3; ++n)
    for (const Graph& g : enumerate_connected(n)) right_factors.push_back(g);
  for (int trial = 0; trial < 12; ++trial) {
    const Graph& g = left_factors[rng() % left_factors.size()];
    const Graph& h = right_factors[rng() % right_factors.size()];
    HamiltonianKind kind = kAllHamiltonians[rng() % 3];
    const double t = dist(rng);
    ComplexMatrix left = transition(hamiltonian(cartesian_product(g, h), kind), t);
    ComplexMatrix right = kron(transition(hamiltonian(g, kind), t),
                               transition(hamiltonian(h, kind), t));
    CHECK(max_entry_diff(left, right) < 1e-8);
  }
}

TEST_CASE("regular graphs: Laplacian walk equals phased adjacency walk") {
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> dist(0.0, 6.0);
  for (const Graph& g : {cycle_graph(5), complete_graph(4), cycle_graph(6)}) {
    const int k = g.degree(0);
    const double t = dist(rng);
    ComplexMatrix ul = transition(hamiltonian(g, HamiltonianKind::kLaplacian), t);
    ComplexMatrix ua = transition(hamiltonian(g, HamiltonianKind::kAdjacency), -t);
    const std::complex<double> phase = std::polar(1.0, t * double(k));
    double worst = 0.0;
    for (int i = 0; i < g.size(); ++i)
      for (int j = 0; j < g.size(); ++j)
        worst = std::max(worst, std::abs(ul.at(i, j) - phase * ua.at(i, j)));
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("bipartite graphs: signature conjugation swaps the two Laplacians") {
  std::mt19937 rng(909);
  std::uniform_real_distribution<double> dist(0.0, 6.0);
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      auto colors = bipartition(g);
      if (!colors) continue;
      const double t = dist(rng);
      ComplexMatrix ul = transition(hamiltonian(g, HamiltonianKind::kLaplacian), t);
      ComplexMatrix uq = transition(hamiltonian(g, HamiltonianKind::kSignlessLaplacian), t);
      double worst = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const double sign = ((*colors)[i] != (*colors)[j]) ? -1.0 : 1.0;
          worst = std::max(worst, std::abs(sign * ul.at(i, j) - uq.at(i, j)));
        }
      CHECK(worst < 1e-8);
    }
  }
}

TEST_CASE("SpectralCache returns one shared decomposition per key") {
  SpectralCache cache;
  auto a = cache.get(path_graph(4), HamiltonianKind::kLaplacian);
  auto b = cache.get(path_graph(4), HamiltonianKind::kLaplacian);
  auto c = cache.get(path_graph(4), HamiltonianKind::kAdjacency);
  CHECK(a.get() == b.get());
  CHECK(a.get() != c.get());
  REQUIRE(a->eigenvalues.size() == 4);
  CHECK(a->eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-11));
  CHECK(a->eigenvalues[3] == doctest::Approx(2.0 + std::sqrt(2.0)));
}

TEST_CASE("eigendecompose rejects asymmetric input") {
  IntMatrix m(2);
  m.at(0, 1) = 1;
  CHECK_THROWS_AS(eigendecompose(m), std::invalid_argument);
}
