#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pairwalk/polynomial.hpp"

namespace pairwalk {

enum class AlgebraicKind { kInteger, kQuadratic, kOpaque };

// A real algebraic number in one of three shapes:
//   kInteger    a plain integer v;
//   kQuadratic  (p + q*sqrt(delta)) / 2 with delta > 1 squarefree, q != 0,
//               and p^2 - q^2*delta divisible by 4 (so the value is an
//               algebraic integer) -- this representation is unique;
//   kOpaque     a root of a polynomial of degree >= 3 carried as the witness
//               polynomial plus a double approximation. Opaque roots never
//               participate in periodic spectra, so no exact arithmetic is
//               defined on them.
// Comparisons between integer/quadratic values are exact (nested squaring);
// comparisons involving opaque values fall back to the double approximation,
// which is reliable at the root separations that matrices of order <= 12
// produce. Component magnitudes stay tiny for such matrices, hence the
// 64-bit fields.
class AlgebraicNumber {
 public:
  static AlgebraicNumber integer(long long v);
  // Validates delta squarefree > 1, q != 0, and the mod-4 condition above.
  static AlgebraicNumber quadratic(long long p, long long q, long long delta);
  static AlgebraicNumber opaque(std::shared_ptr<const IntPolynomial> witness, double approx);

  AlgebraicKind kind() const { return kind_; }
  bool is_integer() const { return kind_ == AlgebraicKind::kInteger; }

  long long int_value() const;  // kInteger only
  long long quad_p() const;     // kQuadratic only
  long long quad_q() const;     // kQuadratic only
  long long quad_delta() const; // kQuadratic only
  const IntPolynomial& witness() const;  // kOpaque only

  double approx() const;
  // "2", "(4+2*sqrt(2))/2" (coefficient omitted when |q| = 1), or
  // "root(x^3 - 2*x - 2, ~1.76929)".
  std::string exact_str() const;

  // Three-way comparison: -1, 0, +1. Exact unless an opaque value is
  // involved.
  friend int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend bool operator<(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return compare(a, b) < 0;
  }
  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);

 private:
  AlgebraicNumber() = default;
  AlgebraicKind kind_ = AlgebraicKind::kInteger;
  long long p_ = 0;      // integer value, or quadratic p
  long long q_ = 0;      // quadratic q
  long long delta_ = 1;  // quadratic delta
  std::shared_ptr<const IntPolynomial> witness_;
  double approx_ = 0.0;
};

// a - b written as rational + multiple*sqrt(delta); delta = 1 with multiple
// 0 when the difference is rational. nullopt when a and b live in distinct
// quadratic fields (incompatible deltas). Opaque operands are rejected with
// std::invalid_argument.
struct FieldDecomposition {
  mpq_class rational;
  mpq_class multiple;
  long long delta = 1;
};
std::optional<FieldDecomposition> algebraic_difference(const AlgebraicNumber& a,
                                                       const AlgebraicNumber& b);

// Factorization of an integer polynomial into linear factors, irreducible
// monic quadratic factors, and one final unfactored remainder ("opaque",
// degree >= 3 whenever the input is monic). Multiplicities are tracked so
// the product of factor^multiplicity reassembles the input exactly; the
// factors are pairwise coprime. Each factor lists its distinct real roots
// in increasing order (an opaque remainder lists the real roots of its
// squarefree part).
struct SpectrumFactor {
  IntPolynomial factor;
  int multiplicity = 1;
  std::vector<AlgebraicNumber> roots;
};
struct FactoredSpectrum {
  std::vector<SpectrumFactor> factors;
  // All distinct real roots across factors, ascending.
  std::vector<AlgebraicNumber> distinct_roots() const;
};

// Linear factors are found from certified integer roots (Sturm isolation,
// rounding, exact evaluation); quadratics are proposed by pairing numeric
// roots whose sum and product are near-integers and certified by exact
// division. Throws std::invalid_argument for the zero polynomial.
FactoredSpectrum factor_linear_quadratic(const IntPolynomial& p);

// Exact walk time num*sqrt(delta)*pi/den with gcd(num,den) = 1 and delta
// squarefree (delta = 1 for rational multiples of pi). str() renders e.g.
// "pi/2", "sqrt(2)*pi/2", "2*sqrt(5)*pi/5".
struct ExactTime {
  long long num = 1;
  long long den = 1;
  long long delta = 1;

  double approx() const;
  std::string str() const;
  friend bool operator==(const ExactTime&, const ExactTime&) = default;
};
// Reduces num/den and validates positivity plus squarefree delta.
ExactTime make_exact_time(long long num, long long den, long long delta);

// Integer square-part helpers: d > 0 splits uniquely as m^2 * delta with
// delta squarefree.
bool is_squarefree(long long d);
std::pair<long long, long long> split_square_part(long long d);  // (m, delta)

}  // namespace pairwalk
