#pragma once

#include <vector>

#include "pairwalk/intmatrix.hpp"
#include "pairwalk/polynomial.hpp"

namespace pairwalk {

// Minimal polynomial of the vector s relative to M: the monic generator of
// the ideal { p : p(M) s = 0 }, found by exact Gaussian elimination over the
// Krylov sequence s, Ms, M^2 s, ... For an integer matrix the result has
// integer coefficients and is monic; for symmetric M it is squarefree and
// its roots are exactly the eigenvalues whose eigenprojection does not
// annihilate s (the eigenvalue support of s). Throws std::invalid_argument
// for the zero vector.
IntPolynomial krylov_min_poly(const IntMatrix& m, const std::vector<long long>& s);

// Minimal polynomial of the matrix itself: lcm of the vector minimal
// polynomials over the standard basis. For symmetric M its degree equals the
// number of distinct eigenvalues.
IntPolynomial matrix_min_poly(const IntMatrix& m);

}  // namespace pairwalk
