#include "pairwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "pairwalk/algebraic.hpp"
#include "pairwalk/errors.hpp"
#include "pairwalk/graph6.hpp"
#include "pairwalk/polynomial.hpp"

namespace pairwalk {

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) sum += a[std::size_t(i) * n + j] * a[std::size_t(i) * n + j];
  return std::sqrt(sum);
}

// One Jacobi rotation in the (p, q) plane: A <- G^T A G, V <- V G.
void rotate(std::vector<double>& a, std::vector<double>& v, int n, int p, int q) {
  const double apq = a[std::size_t(p) * n + q];
  if (apq == 0.0) return;
  const double tau = (a[std::size_t(q) * n + q] - a[std::size_t(p) * n + p]) / (2.0 * apq);
  const double t = (tau >= 0 ? 1.0 : -1.0) / (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  for (int k = 0; k < n; ++k) {  // rows p, q
    const double apk = a[std::size_t(p) * n + k], aqk = a[std::size_t(q) * n + k];
    a[std::size_t(p) * n + k] = c * apk - s * aqk;
    a[std::size_t(q) * n + k] = s * apk + c * aqk;
  }
  for (int k = 0; k < n; ++k) {  // columns p, q
    const double akp = a[std::size_t(k) * n + p], akq = a[std::size_t(k) * n + q];
    a[std::size_t(k) * n + p] = c * akp - s * akq;
    a[std::size_t(k) * n + q] = s * akp + c * akq;
  }
  for (int k = 0; k < n; ++k) {
    const double vkp = v[std::size_t(k) * n + p], vkq = v[std::size_t(k) * n + q];
    v[std::size_t(k) * n + p] = c * vkp - s * vkq;
    v[std::size_t(k) * n + q] = s * vkp + c * vkq;
  }
}

double norm2(const std::vector<double>& s) {
  double sum = 0.0;
  for (double x : s) sum += x * x;
  return std::sqrt(sum);
}

// Per-group projection coefficients <s2_hat, E_r s1_hat>; the amplitude at
// time t is then sum_r e^{i t theta_r} c_r.
std::vector<double> projection_coefficients(const EigenDecomposition& d,
                                            const std::vector<double>& s1,
                                            const std::vector<double>& s2) {
  const int n = d.projectors.empty() ? 0 : d.projectors.front().n;
  if (static_cast<int>(s1.size()) != n || static_cast<int>(s2.size()) != n)
    throw std::invalid_argument("fidelity: state length mismatch");
  const double n1 = norm2(s1), n2 = norm2(s2);
  if (n1 == 0.0 || n2 == 0.0) throw std::invalid_argument("fidelity: zero state");
  std::vector<double> coeffs;
  coeffs.reserve(d.projectors.size());
  for (const RealMatrix& e : d.projectors) {
    double c = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) c += s2[i] * e.at(i, j) * s1[j];
    coeffs.push_back(c / (n1 * n2));
  }
  return coeffs;
}

double fidelity_at(const EigenDecomposition& d, const std::vector<double>& coeffs, double t) {
  std::complex<double> amp = 0.0;
  for (std::size_t r = 0; r < coeffs.size(); ++r)
    amp += std::polar(coeffs[r], t * d.eigenvalues[r]);
  return std::min(1.0, std::norm(amp));
}

}  // namespace

EigenDecomposition eigendecompose(const IntMatrix& h, double group_tol) {
  const int n = h.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (h.at(i, j) != h.at(j, i))
        throw std::invalid_argument("eigendecompose: matrix not symmetric");

  std::vector<double> a(std::size_t(n) * n), v(std::size_t(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    v[std::size_t(i) * n + i] = 1.0;
    for (int j = 0; j < n; ++j) a[std::size_t(i) * n + j] = double(h.at(i, j));
  }
  int sweeps = 0;
  while (off_diagonal_norm(a, n) >= 1e-12) {
    if (++sweeps > 100) throw consistency_error("eigendecompose: Jacobi did not converge");
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) rotate(a, v, n, p, q);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return a[std::size_t(x) * n + x] < a[std::size_t(y) * n + y];
  });

  EigenDecomposition d;
  std::size_t group_start = 0;
  std::vector<double> lambdas(n);
  for (int i = 0; i < n; ++i) lambdas[i] = a[std::size_t(order[i]) * n + order[i]];
  for (std::size_t i = 0; i < std::size_t(n); ++i) {
    const bool last_of_group = i + 1 == std::size_t(n) || lambdas[i + 1] - lambdas[i] > group_tol;
    if (!last_of_group) continue;
    RealMatrix e(n);
    double mean = 0.0;
    for (std::size_t m = group_start; m <= i; ++m) {
      mean += lambdas[m];
      const int col = order[m];
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          e.at(r, c) += v[std::size_t(r) * n + col] * v[std::size_t(c) * n + col];
    }
    d.eigenvalues.push_back(mean / double(i - group_start + 1));
    d.projectors.push_back(std::move(e));
    group_start = i + 1;
  }

  // Exact cross-check: the number of groups must match the number of
  // distinct roots of the characteristic polynomial.
  std::size_t exact_count = factor_linear_quadratic(char_poly(h)).distinct_roots().size();
  if (exact_count != d.eigenvalues.size())
    throw consistency_error("eigendecompose: eigenvalue grouping disagrees with exact count");
  return d;
}

ComplexMatrix transition(const EigenDecomposition& d, double t) {
  const int n = d.projectors.empty() ? 0 : d.projectors.front().n;
  ComplexMatrix u(n);
  for (std::size_t r = 0; r < d.projectors.size(); ++r) {
    const std::complex<double> phase = std::polar(1.0, t * d.eigenvalues[r]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) u.at(i, j) += phase * d.projectors[r].at(i, j);
  }
  return u;
}

ComplexMatrix transition(const IntMatrix& h, double t) { return transition(eigendecompose(h), t); }

double fidelity(const EigenDecomposition& d, const std::vector<double>& s1,
                const std::vector<double>& s2, double t) {
  return fidelity_at(d, projection_coefficients(d, s1, s2), t);
}

double fidelity(const IntMatrix& h, const std::vector<double>& s1, const std::vector<double>& s2,
                double t) {
  return fidelity(eigendecompose(h), s1, s2, t);
}

std::vector<std::pair<double, double>> fidelity_curve(const IntMatrix& h,
                                                      const std::vector<double>& s1,
                                                      const std::vector<double>& s2, double t_max,
                                                      int steps) {
  if (steps < 2) throw std::invalid_argument("fidelity_curve: steps must be >= 2");
  if (!(t_max > 0)) throw std::invalid_argument("fidelity_curve: t_max must be > 0");
  EigenDecomposition d = eigendecompose(h);
  std::vector<double> coeffs = projection_coefficients(d, s1, s2);
  std::vector<std::pair<double, double>> curve;
  curve.reserve(std::size_t(steps));
  for (int i = 0; i < steps; ++i) {
    const double t = t_max * double(i) / double(steps - 1);
    curve.emplace_back(t, fidelity_at(d, coeffs, t));
  }
  return curve;
}

void write_curve_csv(std::ostream& out, const std::vector<std::pair<double, double>>& curve) {
  out << "t,fidelity\n";
  char buf[96];
  for (const auto& [t, f] : curve) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", t, f);
    out << buf;
  }
}

std::shared_ptr<const EigenDecomposition> SpectralCache::get(const Graph& g,
                                                             HamiltonianKind kind) {
  const std::pair<std::string, int> key{graph6_encode(g), static_cast<int>(kind)};
  std::lock_guard<std::mutex> lock(mu_);
  auto it = store_.find(key);
  if (it == store_.end()) {
    auto d = std::make_shared<const EigenDecomposition>(eigendecompose(hamiltonian(g, kind)));
    it = store_.emplace(key, std::move(d)).first;
  }
  return it->second;
}

}  // namespace pairwalk
