#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pairwalk/graph.hpp"
#include "pairwalk/polynomial.hpp"

namespace pairwalk {

// The three Hamiltonians considered: Laplacian D - A, signless Laplacian
// D + A, and plain adjacency A.
enum class HamiltonianKind { kLaplacian, kSignlessLaplacian, kAdjacency };

std::string to_string(HamiltonianKind kind);
// Accepts "laplacian", "signless", and "adjacency"; nullopt otherwise.
std::optional<HamiltonianKind> hamiltonian_from_string(std::string_view name);

inline constexpr HamiltonianKind kAllHamiltonians[] = {
    HamiltonianKind::kLaplacian,
    HamiltonianKind::kSignlessLaplacian,
    HamiltonianKind::kAdjacency,
};

// Dense symmetric integer matrix, row major. Small orders only (graph
// Hamiltonians), so entries comfortably fit 64 bits.
struct IntMatrix {
  int n = 0;
  std::vector<long long> a;

  explicit IntMatrix(int order) : n(order), a(std::size_t(order) * order, 0) {}
  long long& at(int i, int j) { return a[std::size_t(i) * n + j]; }
  long long at(int i, int j) const { return a[std::size_t(i) * n + j]; }
};

IntMatrix hamiltonian(const Graph& g, HamiltonianKind kind);

// Characteristic polynomial det(xI - M), computed exactly by the
// Faddeev-LeVerrier recurrence (the divisions it performs are exact).
// Always monic of degree n.
IntPolynomial char_poly(const IntMatrix& m);

}  // namespace pairwalk
