#include <benchmark/benchmark.h>

#include <vector>

#include "pairwalk/canonical.hpp"
#include "pairwalk/enumerate.hpp"
#include "pairwalk/graph.hpp"
#include "pairwalk/intmatrix.hpp"
#include "pairwalk/krylov.hpp"
#include "pairwalk/spectral.hpp"
#include "pairwalk/survey.hpp"
#include "pairwalk/transfer.hpp"

namespace {

using namespace pairwalk;

// An 8-vertex graph with enough structure to exercise the exact kernels:
// the prism with a pendant path of two extra vertices.
Graph bench_graph() {
  Graph g = cartesian_product(path_graph(2), path_graph(3));
  Graph out(8);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  out.add_edge(5, 6);
  out.add_edge(6, 7);
  return out;
}

void BM_CanonicalForm(benchmark::State& state) {
  Graph g = bench_graph();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm);

void BM_KrylovMinPoly(benchmark::State& state) {
  Graph g = bench_graph();
  IntMatrix h = hamiltonian(g, HamiltonianKind::kLaplacian);
  std::vector<long long> v = state_vector(QuantumState::pair(0, 7), g.size());
  for (auto _ : state) benchmark::DoNotOptimize(krylov_min_poly(h, v));
}
BENCHMARK(BM_KrylovMinPoly);

void BM_Eigendecompose(benchmark::State& state) {
  IntMatrix h = hamiltonian(bench_graph(), HamiltonianKind::kLaplacian);
  for (auto _ : state) benchmark::DoNotOptimize(eigendecompose(h));
}
BENCHMARK(BM_Eigendecompose);

void BM_PstDecide(benchmark::State& state) {
  Graph g = figure1_graph();
  QuantumState s1 = QuantumState::pair(0, 3);
  QuantumState s2 = QuantumState::pair(4, 5);
  for (auto _ : state)
    benchmark::DoNotOptimize(pst_decide(g, HamiltonianKind::kLaplacian, s1, s2));
}
BENCHMARK(BM_PstDecide);

void BM_ScanGraph(benchmark::State& state) {
  Graph g = figure1_graph();
  ScanConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(scan_graph(g, cfg));
}
BENCHMARK(BM_ScanGraph);

void BM_EnumerateConnected(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_connected(n));
}
BENCHMARK(BM_EnumerateConnected)->Arg(5)->Arg(6)->Arg(7);

void BM_SurveyG5(benchmark::State& state) {
  std::vector<Graph> corpus = enumerate_connected(5);
  ScanConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(survey(corpus, cfg));
}
BENCHMARK(BM_SurveyG5);

void BM_Fidelity(benchmark::State& state) {
  Graph g = bench_graph();
  EigenDecomposition eig = eigendecompose(hamiltonian(g, HamiltonianKind::kLaplacian));
  std::vector<long long> a = state_vector(QuantumState::pair(0, 1), g.size());
  std::vector<long long> b = state_vector(QuantumState::pair(6, 7), g.size());
  std::vector<double> s1(a.begin(), a.end()), s2(b.begin(), b.end());
  double t = 0.0;
  for (auto _ : state) {
    t += 0.01;
    benchmark::DoNotOptimize(fidelity(eig, s1, s2, t));
  }
}
BENCHMARK(BM_Fidelity);

}  // namespace

BENCHMARK_MAIN();
