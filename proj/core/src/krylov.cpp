#include "pairwalk/krylov.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>

#include "mpz_compat.hpp"

namespace pairwalk {

IntPolynomial krylov_min_poly(const IntMatrix& m, const std::vector<long long>& s) {
  const int n = m.n;
  if (static_cast<int>(s.size()) != n)
    throw std::invalid_argument("krylov_min_poly: vector length mismatch");
  if (std::all_of(s.begin(), s.end(), [](long long x) { return x == 0; }))
    throw std::invalid_argument("krylov_min_poly: zero vector");

  // Original Krylov iterate, kept exactly; entries stay modest for the small
  // matrices this library handles, but mpz avoids any overflow question.
  std::vector<mpz_class> iterate;
  iterate.reserve(s.size());
  for (long long x : s) iterate.push_back(to_mpz(x));

  struct Row {
    std::vector<mpq_class> vec;  // reduced vector, in echelon position
    std::vector<mpq_class> rep;  // vec as a combination of v_0 .. v_d
    int pivot;
  };
  std::vector<Row> basis;

  for (int d = 0; d <= n; ++d) {
    std::vector<mpq_class> cur(iterate.begin(), iterate.end());
    std::vector<mpq_class> rep(std::size_t(d) + 1);
    rep[d] = 1;
    for (const Row& row : basis) {
      const mpq_class& factor = cur[row.pivot];
      if (factor == 0) continue;
      mpq_class scale = factor / row.vec[row.pivot];
      for (int i = 0; i < n; ++i) cur[i] -= scale * row.vec[i];
      for (std::size_t j = 0; j < row.rep.size(); ++j) rep[j] -= scale * row.rep[j];
    }
    int pivot = -1;
    for (int i = 0; i < n; ++i) {
      if (cur[i] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) {
      // sum_{j<=d} rep[j] v_j = 0 with rep[d] = 1, so sum rep[j] x^j is the
      // monic annihilator of s of least degree.
      mpz_class denom_lcm = 1;
      for (const mpq_class& c : rep)
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.get_den().get_mpz_t());
      std::vector<mpz_class> coeffs;
      coeffs.reserve(rep.size());
      for (const mpq_class& c : rep) {
        mpq_class scaled = c * denom_lcm;
        coeffs.push_back(scaled.get_num());
      }
      IntPolynomial result = IntPolynomial::from_coeffs(std::move(coeffs));
      if (!result.is_monic())
        throw std::logic_error("krylov_min_poly: non-monic minimal polynomial");
      return result;
    }
    basis.push_back(Row{std::move(cur), std::move(rep), pivot});
    std::vector<mpz_class> next(n, 0);
    for (int i = 0; i < n; ++i) {
      mpz_class acc = 0;
      for (int j = 0; j < n; ++j) acc += to_mpz(m.at(i, j)) * iterate[j];
      next[i] = acc;
    }
    iterate.swap(next);
  }
  throw std::logic_error("krylov_min_poly: no dependency found");  // unreachable
}

IntPolynomial matrix_min_poly(const IntMatrix& m) {
  const int n = m.n;
  if (n <= 0) throw std::invalid_argument("matrix_min_poly: empty matrix");
  IntPolynomial acc = IntPolynomial::constant(1);
  std::vector<long long> e(n, 0);
  for (int i = 0; i < n; ++i) {
    e[i] = 1;
    acc = poly_lcm(acc, krylov_min_poly(m, e));
    e[i] = 0;
    if (acc.degree() == n) break;  // cannot grow further
  }
  return acc;
}

}  // namespace pairwalk
