#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace pairwalk {

// Univariate integer polynomial, coefficients stored low-degree first.
// Nonzero values are kept in a normal form: primitive (content 1) with a
// positive leading coefficient. That is the right equivalence for minimal
// and characteristic polynomial work, where only the root set matters up to
// a nonzero rational scale. The zero polynomial is the empty vector.
//
// All arithmetic is exact (GMP). Degrees in this library stay small (the
// matrices have order at most 12), so no attempt is made at asymptotic
// cleverness.
class IntPolynomial {
 public:
  IntPolynomial() = default;  // zero polynomial

  // Normalizes: strips leading zeros, divides by the content, flips signs so
  // the leading coefficient is positive. Note the sign flip replaces p by -p
  // when the leading coefficient is negative; root sets are unchanged.
  static IntPolynomial from_coeffs(std::vector<mpz_class> low_first);
  static IntPolynomial constant(long long value);
  static IntPolynomial x_minus(const mpz_class& root);  // x - root
  // x^2 - sum*x + product
  static IntPolynomial monic_quadratic(const mpz_class& sum, const mpz_class& product);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const mpz_class& leading() const { return coeffs_.back(); }
  mpz_class coeff(int k) const;  // 0 outside the stored range
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  mpq_class value_at(const mpq_class& x) const;  // exact Horner
  int sign_at(const mpq_class& x) const;         // -1, 0, +1
  double value_at_double(double x) const;

  IntPolynomial derivative() const;

  // Human-readable form, e.g. "x^3 - 2*x + 1"; "0" for the zero polynomial.
  std::string str() const;

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<mpz_class> coeffs_;
};

// Quotient dividend/divisor when the division over Q is exact (remainder
// zero), normalized; nullopt otherwise. Exactness is judged up to the usual
// normal form, so for primitive inputs this is plain polynomial divisibility.
std::optional<IntPolynomial> exact_divide(const IntPolynomial& dividend,
                                          const IntPolynomial& divisor);

// Greatest common divisor in the normal form above (primitive, positive
// leading coefficient). poly_gcd(0, p) is the normal form of p.
IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b);
IntPolynomial poly_lcm(const IntPolynomial& a, const IntPolynomial& b);

// p with repeated factors collapsed: p / gcd(p, p').
IntPolynomial squarefree_part(const IntPolynomial& p);

// All distinct real roots in increasing order, isolated by Sturm sequences
// and bisected until the enclosing interval is narrower than eps; the
// returned double is the interval midpoint (or the exact root when a
// bisection point lands on one). Multiplicities are ignored.
std::vector<double> real_roots(const IntPolynomial& p, double eps = 1e-12);

}  // namespace pairwalk
