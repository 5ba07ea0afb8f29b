#pragma once

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <utility>
#include <vector>

#include "pairwalk/graph.hpp"
#include "pairwalk/intmatrix.hpp"

namespace pairwalk {

// Dense real/complex matrices, row major. Only used for the floating-point
// side of the pipeline, so plain doubles are fine.
struct RealMatrix {
  int n = 0;
  std::vector<double> a;

  explicit RealMatrix(int order) : n(order), a(std::size_t(order) * order, 0.0) {}
  double& at(int i, int j) { return a[std::size_t(i) * n + j]; }
  double at(int i, int j) const { return a[std::size_t(i) * n + j]; }
};

struct ComplexMatrix {
  int n = 0;
  std::vector<std::complex<double>> a;

  explicit ComplexMatrix(int order) : n(order), a(std::size_t(order) * order) {}
  std::complex<double>& at(int i, int j) { return a[std::size_t(i) * n + j]; }
  std::complex<double> at(int i, int j) const { return a[std::size_t(i) * n + j]; }
};

// Spectral decomposition H = sum_r theta_r E_r with one projector per
// eigenvalue group: eigenvalues ascending and pairwise more than the grouping
// tolerance apart, each E_r the orthogonal projection onto its eigenspace.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  std::vector<RealMatrix> projectors;
};

// Cyclic-Jacobi eigendecomposition (off-diagonal norm driven below 1e-12),
// eigenvalues within group_tol of their neighbor merged into one group. The
// group count is cross-checked against the number of distinct roots of the
// exact characteristic polynomial; a mismatch throws consistency_error
// rather than silently proceeding with a wrong split.
EigenDecomposition eigendecompose(const IntMatrix& h, double group_tol = 1e-9);

// U(t) = sum_r e^{i t theta_r} E_r. Unitary and symmetric.
ComplexMatrix transition(const EigenDecomposition& d, double t);
ComplexMatrix transition(const IntMatrix& h, double t);

// |<s2_hat, U(t) s1_hat>|^2 with both states normalized to unit length.
// Throws std::invalid_argument for zero states or length mismatches.
double fidelity(const EigenDecomposition& d, const std::vector<double>& s1,
                const std::vector<double>& s2, double t);
double fidelity(const IntMatrix& h, const std::vector<double>& s1,
                const std::vector<double>& s2, double t);

// Uniform grid over [0, t_max] including both endpoints (steps points).
// Requires steps >= 2 and t_max > 0.
std::vector<std::pair<double, double>> fidelity_curve(const IntMatrix& h,
                                                      const std::vector<double>& s1,
                                                      const std::vector<double>& s2,
                                                      double t_max, int steps);

// CSV with header "t,fidelity", one row per grid point, 17 significant
// digits (doubles round-trip exactly).
void write_curve_csv(std::ostream& out, const std::vector<std::pair<double, double>>& curve);

// Shared per-(graph, kind) decomposition store for survey runs; population
// is internally synchronized, the returned decompositions are immutable.
class SpectralCache {
 public:
  std::shared_ptr<const EigenDecomposition> get(const Graph& g, HamiltonianKind kind);

 private:
  std::mutex mu_;
  std::map<std::pair<std::string, int>, std::shared_ptr<const EigenDecomposition>> store_;
};

}  // namespace pairwalk
