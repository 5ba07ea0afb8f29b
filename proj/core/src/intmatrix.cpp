#include "pairwalk/intmatrix.hpp"

#include <gmpxx.h>

#include <stdexcept>

#include "mpz_compat.hpp"

namespace pairwalk {

std::string to_string(HamiltonianKind kind) {
  switch (kind) {
    case HamiltonianKind::kLaplacian:
      return "laplacian";
    case HamiltonianKind::kSignlessLaplacian:
      return "signless";
    case HamiltonianKind::kAdjacency:
      return "adjacency";
  }
  throw std::invalid_argument("unknown HamiltonianKind");
}

std::optional<HamiltonianKind> hamiltonian_from_string(std::string_view name) {
  if (name == "laplacian") return HamiltonianKind::kLaplacian;
  if (name == "signless") return HamiltonianKind::kSignlessLaplacian;
  if (name == "adjacency") return HamiltonianKind::kAdjacency;
  return std::nullopt;
}

IntMatrix hamiltonian(const Graph& g, HamiltonianKind kind) {
  const int n = g.size();
  IntMatrix m(n);
  for (auto [u, v] : g.edges()) {
    long long off = (kind == HamiltonianKind::kLaplacian) ? -1 : 1;
    m.at(u, v) = off;
    m.at(v, u) = off;
  }
  if (kind != HamiltonianKind::kAdjacency) {
    for (int v = 0; v < n; ++v) m.at(v, v) = g.degree(v);
  }
  return m;
}

IntPolynomial char_poly(const IntMatrix& m) {
  const int n = m.n;
  if (n <= 0) throw std::invalid_argument("char_poly: empty matrix");
  // Faddeev-LeVerrier: N_1 = M, c_{n-1} = -tr(N_1); then
  // N_k = M (N_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(N_k)/k.
  std::vector<mpz_class> work(std::size_t(n) * n), next(std::size_t(n) * n);
  std::vector<mpz_class> coeffs(std::size_t(n) + 1);
  coeffs[n] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) work[std::size_t(i) * n + j] = to_mpz(m.at(i, j));
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      for (int i = 0; i < n; ++i) work[std::size_t(i) * n + i] += coeffs[n - k + 1];
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          mpz_class acc = 0;
          for (int l = 0; l < n; ++l) acc += to_mpz(m.at(i, l)) * work[std::size_t(l) * n + j];
          next[std::size_t(i) * n + j] = acc;
        }
      work.swap(next);
    }
    mpz_class trace = 0;
    for (int i = 0; i < n; ++i) trace += work[std::size_t(i) * n + i];
    mpz_class c = -trace / k;  // exact by construction
    coeffs[n - k] = c;
  }
  return IntPolynomial::from_coeffs(std::move(coeffs));
}

}  // namespace pairwalk
