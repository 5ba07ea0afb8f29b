#pragma once

#include <gmpxx.h>

namespace pairwalk {

// The system gmpxx.h predates the long long constructors, so conversions
// from long long are ambiguous.  Route them through long, which has the
// same range on the LP64 targets this library supports.
inline mpz_class to_mpz(long long v) {
  static_assert(sizeof(long) == sizeof(long long), "LP64 layout assumed");
  return mpz_class(static_cast<long>(v));
}

inline mpq_class to_mpq(long long num, long long den = 1) {
  mpq_class q(to_mpz(num), to_mpz(den));
  q.canonicalize();
  return q;
}

}  // namespace pairwalk
