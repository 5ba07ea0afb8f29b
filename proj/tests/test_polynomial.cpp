#include "pairwalk/polynomial.hpp"

#include <cmath>

#include "doctest.h"

using namespace pairwalk;

namespace {

IntPolynomial poly(std::initializer_list<long long> low_first) {
  std::vector<mpz_class> c;
  for (long long v : low_first) c.emplace_back(static_cast<long>(v));
  return IntPolynomial::from_coeffs(std::move(c));
}

}  // namespace

TEST_CASE("normal form: primitive, positive leading, trailing zeros stripped") {
  CHECK(poly({2, 4, 6}) == poly({1, 2, 3}));
  CHECK(poly({0, 0, 0}).is_zero());
  CHECK(poly({}).is_zero());
  CHECK(poly({0, 1, 0, 0}) == poly({0, 1}));
  // Negative leading coefficient flips the whole polynomial.
  CHECK(poly({1, -1}) == IntPolynomial::x_minus(1));
  CHECK(IntPolynomial::constant(5) == IntPolynomial::constant(1));
  CHECK(IntPolynomial::constant(0).is_zero());

  CHECK(poly({-2, 0, 1}).degree() == 2);
  CHECK(poly({-2, 0, 1}).is_monic());
  CHECK(poly({-3, 2}).leading() == 2);
  CHECK(poly({-3, 2}).coeff(0) == -3);
  CHECK(poly({-3, 2}).coeff(7) == 0);
  CHECK(poly({-3, 2}).coeff(-1) == 0);
  CHECK(IntPolynomial{}.degree() == -1);
}

TEST_CASE("evaluation") {
  IntPolynomial p = poly({-2, 0, 1});  // x^2 - 2
  CHECK(p.value_at(mpq_class(3, 2)) == mpq_class(1, 4));
  CHECK(p.sign_at(0) == -1);
  CHECK(p.sign_at(2) == 1);
  CHECK(p.sign_at(mpq_class(-3)) == 1);
  CHECK(poly({-1, 1}).sign_at(1) == 0);
  CHECK(p.value_at_double(1.5) == doctest::Approx(0.25));
}

TEST_CASE("derivative and printing") {
  CHECK(poly({-2, 0, 1}).derivative() == poly({0, 2}));  // normalized to x
  CHECK(poly({1, -2, 0, 1}).str() == "x^3 - 2*x + 1");
  CHECK(poly({-2, 0, 1}).str() == "x^2 - 2");
  CHECK(poly({0, 1}).str() == "x");
  CHECK(poly({-3, 2}).str() == "2*x - 3");
  CHECK(IntPolynomial::constant(1).str() == "1");
  CHECK(IntPolynomial{}.str() == "0");
  CHECK(poly({0, -1, 1}).str() == "x^2 - x");
}

TEST_CASE("multiplication") {
  CHECK(IntPolynomial::x_minus(1) * IntPolynomial::x_minus(-1) == poly({-1, 0, 1}));
  CHECK((poly({1, 1}) * IntPolynomial{}).is_zero());
  IntPolynomial q = IntPolynomial::monic_quadratic(4, 2);  // x^2 - 4x + 2
  CHECK(q == poly({2, -4, 1}));
}

TEST_CASE("exact division") {
  IntPolynomial difference_of_squares = poly({-1, 0, 1});
  auto q = exact_divide(difference_of_squares, IntPolynomial::x_minus(1));
  REQUIRE(q.has_value());
  CHECK(*q == poly({1, 1}));
  CHECK(!exact_divide(poly({1, 0, 1}), IntPolynomial::x_minus(1)).has_value());
  CHECK(!exact_divide(IntPolynomial::x_minus(1), difference_of_squares).has_value());
  CHECK(exact_divide(IntPolynomial{}, IntPolynomial::x_minus(2))->is_zero());
  CHECK_THROWS_AS(exact_divide(poly({1, 1}), IntPolynomial{}), std::invalid_argument);
  // Dividing a polynomial by itself yields 1.
  IntPolynomial p = poly({3, 1, 4, 1, 5});
  CHECK(*exact_divide(p, p) == IntPolynomial::constant(1));
}

TEST_CASE("gcd and lcm") {
  IntPolynomial a = IntPolynomial::x_minus(1) * poly({-2, 0, 1});
  IntPolynomial b = IntPolynomial::x_minus(1) * IntPolynomial::x_minus(3);
  CHECK(poly_gcd(a, b) == IntPolynomial::x_minus(1));
  CHECK(poly_gcd(a, IntPolynomial{}) == a);
  CHECK(poly_gcd(IntPolynomial{}, b) == b);
  CHECK(poly_gcd(poly({1, 1}), poly({-2, 0, 1})) == IntPolynomial::constant(1));

  IntPolynomial p12 = IntPolynomial::x_minus(1) * IntPolynomial::x_minus(2);
  IntPolynomial p23 = IntPolynomial::x_minus(2) * IntPolynomial::x_minus(3);
  IntPolynomial p123 =
      IntPolynomial::x_minus(1) * IntPolynomial::x_minus(2) * IntPolynomial::x_minus(3);
  CHECK(poly_lcm(p12, p23) == p123);
  CHECK(poly_lcm(p12, IntPolynomial::constant(1)) == p12);

  // gcd of anything with a scaled copy is the normal form itself.
  CHECK(poly_gcd(poly({2, -8, 2}), poly({1, -4, 1})) == poly({1, -4, 1}));
}

TEST_CASE("squarefree part") {
  IntPolynomial sq = IntPolynomial::x_minus(1) * IntPolynomial::x_minus(1) *
                     IntPolynomial::x_minus(-2);
  CHECK(squarefree_part(sq) == IntPolynomial::x_minus(1) * IntPolynomial::x_minus(-2));
  IntPolynomial already = poly({-2, 0, 1});
  CHECK(squarefree_part(already) == already);
  CHECK(squarefree_part(IntPolynomial::constant(7)) == IntPolynomial::constant(1));
}

TEST_CASE("real roots: quadratics and cubics") {
  auto r = real_roots(poly({-2, 0, 1}));  // x^2 - 2
  REQUIRE(r.size() == 2);
  CHECK(std::fabs(r[0] + std::sqrt(2.0)) < 1e-11);
  CHECK(std::fabs(r[1] - std::sqrt(2.0)) < 1e-11);

  r = real_roots(poly({0, -2, 0, 1}));  // x^3 - 2x = x(x^2-2)
  REQUIRE(r.size() == 3);
  CHECK(std::fabs(r[0] + std::sqrt(2.0)) < 1e-11);
  CHECK(std::fabs(r[1]) < 1e-11);
  CHECK(std::fabs(r[2] - std::sqrt(2.0)) < 1e-11);

  CHECK(real_roots(poly({1, 0, 1})).empty());  // x^2 + 1
  r = real_roots(poly({-2, 0, 0, 1}));         // x^3 - 2
  REQUIRE(r.size() == 1);
  CHECK(std::fabs(r[0] - std::cbrt(2.0)) < 1e-11);
}

TEST_CASE("real roots: repeated factors and integer ladders") {
  IntPolynomial sq = IntPolynomial::x_minus(1) * IntPolynomial::x_minus(1);
  auto r = real_roots(sq);
  REQUIRE(r.size() == 1);
  CHECK(std::fabs(r[0] - 1.0) < 1e-11);

  IntPolynomial ladder = IntPolynomial::constant(1);
  for (int k = 1; k <= 10; ++k) ladder = ladder * IntPolynomial::x_minus(k);
  r = real_roots(ladder);
  REQUIRE(r.size() == 10);
  for (int k = 1; k <= 10; ++k) CHECK(std::fabs(r[k - 1] - k) < 1e-11);
}

TEST_CASE("real roots: separates very close roots") {
  // Roots 1 and 1 + 2^-20: (x-1)((1<<20)x - (1<<20) - 1).
  long long big = 1 << 20;
  IntPolynomial close = IntPolynomial::x_minus(1) * poly({-(big + 1), big});
  auto r = real_roots(close);
  REQUIRE(r.size() == 2);
  CHECK(std::fabs(r[0] - 1.0) < 1e-11);
  CHECK(std::fabs(r[1] - (1.0 + 1.0 / double(big))) < 1e-11);
}

TEST_CASE("real roots: larger mixed product") {
  // (x^2-3)(x^2-7)(x-2): five distinct real roots.
  IntPolynomial p = poly({-3, 0, 1}) * poly({-7, 0, 1}) * IntPolynomial::x_minus(2);
  auto r = real_roots(p);
  REQUIRE(r.size() == 5);
  const double expected[] = {-std::sqrt(7.0), -std::sqrt(3.0), std::sqrt(3.0), 2.0,
                             std::sqrt(7.0)};
  for (int i = 0; i < 5; ++i) CHECK(std::fabs(r[i] - expected[i]) < 1e-11);

  CHECK_THROWS_AS(real_roots(IntPolynomial{}), std::invalid_argument);
  CHECK_THROWS_AS(real_roots(p, -1.0), std::invalid_argument);
  CHECK(real_roots(IntPolynomial::constant(3)).empty());
}
