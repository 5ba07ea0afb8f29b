#include "pairwalk/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "mpz_compat.hpp"

namespace pairwalk {

namespace {

void strip_high_zeros(std::vector<mpz_class>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Divide every coefficient by the positive content, preserving signs. Used
// for Sturm chain elements, where the sign pattern matters and the full
// from_coeffs normal form (which may flip signs) would be wrong.
void make_primitive_signed(std::vector<mpz_class>& c) {
  strip_high_zeros(c);
  if (c.empty()) return;
  mpz_class content = 0;
  for (const mpz_class& x : c) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
  for (mpz_class& x : c) x /= content;
}

// Remainder of a/b over Q, returned with denominators cleared and the sign
// pattern intact (positive scaling only).
std::vector<mpz_class> signed_remainder(const std::vector<mpz_class>& a,
                                        const std::vector<mpz_class>& b) {
  std::vector<mpq_class> rem(a.begin(), a.end());
  const int db = static_cast<int>(b.size()) - 1;
  const mpz_class& lead = b.back();
  for (int k = static_cast<int>(rem.size()) - 1 - db; k >= 0; --k) {
    mpq_class factor = rem[k + db] / lead;
    if (factor == 0) continue;
    for (int i = 0; i <= db; ++i) rem[k + i] -= factor * b[i];
  }
  rem.resize(db);
  mpz_class denom_lcm = 1;
  for (const mpq_class& x : rem)
    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<mpz_class> out;
  out.reserve(rem.size());
  for (const mpq_class& x : rem) {
    mpq_class scaled = x * denom_lcm;
    out.push_back(scaled.get_num());
  }
  make_primitive_signed(out);
  return out;
}

int sign_of(const mpq_class& x) { return mpq_sgn(x.get_mpq_t()); }

mpq_class eval_at(const std::vector<mpz_class>& c, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

IntPolynomial IntPolynomial::from_coeffs(std::vector<mpz_class> low_first) {
  strip_high_zeros(low_first);
  IntPolynomial p;
  if (low_first.empty()) return p;
  mpz_class content = 0;
  for (const mpz_class& c : low_first)
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (low_first.back() < 0) content = -content;
  p.coeffs_.reserve(low_first.size());
  for (const mpz_class& c : low_first) p.coeffs_.push_back(mpz_class(c / content));
  return p;
}

IntPolynomial IntPolynomial::constant(long long value) {
  return from_coeffs({to_mpz(value)});
}

IntPolynomial IntPolynomial::x_minus(const mpz_class& root) {
  return from_coeffs({-root, 1});
}

IntPolynomial IntPolynomial::monic_quadratic(const mpz_class& sum, const mpz_class& product) {
  return from_coeffs({product, -sum, 1});
}

mpz_class IntPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

mpq_class IntPolynomial::value_at(const mpq_class& x) const {
  return eval_at(coeffs_, x);
}

int IntPolynomial::sign_at(const mpq_class& x) const {
  return sign_of(value_at(x));
}

double IntPolynomial::value_at_double(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<mpz_class> d;
  for (int i = 1; i < static_cast<int>(coeffs_.size()); ++i) d.push_back(i * coeffs_[i]);
  return from_coeffs(std::move(d));
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const mpz_class& c = coeffs_[k];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    bool show_coeff = (mag != 1) || (k == 0);
    if (show_coeff) out += mag.get_str();
    if (k > 0) {
      if (show_coeff) out += "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> prod(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial::from_coeffs(std::move(prod));
}

std::optional<IntPolynomial> exact_divide(const IntPolynomial& dividend,
                                          const IntPolynomial& divisor) {
  if (divisor.is_zero()) throw std::invalid_argument("exact_divide: division by zero polynomial");
  if (dividend.is_zero()) return IntPolynomial{};
  const int da = dividend.degree();
  const int db = divisor.degree();
  if (da < db) return std::nullopt;
  std::vector<mpq_class> rem(dividend.coeffs().begin(), dividend.coeffs().end());
  std::vector<mpq_class> quot(da - db + 1);
  const mpz_class& lead = divisor.leading();
  for (int k = da - db; k >= 0; --k) {
    mpq_class factor = rem[k + db] / lead;
    quot[k] = factor;
    if (factor == 0) continue;
    for (int i = 0; i <= db; ++i) rem[k + i] -= factor * divisor.coeffs()[i];
  }
  for (int i = 0; i < db; ++i)
    if (rem[i] != 0) return std::nullopt;
  mpz_class denom_lcm = 1;
  for (const mpq_class& q : quot)
    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<mpz_class> scaled;
  scaled.reserve(quot.size());
  for (const mpq_class& q : quot) {
    mpq_class s = q * denom_lcm;
    scaled.push_back(s.get_num());
  }
  return IntPolynomial::from_coeffs(std::move(scaled));
}

IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
  while (!b.is_zero()) {
    if (a.degree() < b.degree()) {
      std::swap(a, b);
      continue;
    }
    std::vector<mpz_class> r = signed_remainder(a.coeffs(), b.coeffs());
    a = std::move(b);
    b = IntPolynomial::from_coeffs(std::move(r));
  }
  return a;
}

IntPolynomial poly_lcm(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  IntPolynomial g = poly_gcd(a, b);
  auto q = exact_divide(a, g);
  return *q * b;
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.is_zero()) return {};
  if (p.degree() == 0) return IntPolynomial::constant(1);
  IntPolynomial g = poly_gcd(p, p.derivative());
  return *exact_divide(p, g);
}

namespace {

// Sturm chain of a squarefree polynomial; elements are primitive with the
// sign pattern of the true remainder sequence.
std::vector<std::vector<mpz_class>> sturm_chain(const IntPolynomial& q) {
  std::vector<std::vector<mpz_class>> chain;
  chain.push_back(q.coeffs());
  chain.push_back(q.derivative().coeffs());
  while (chain.back().size() > 1) {
    std::vector<mpz_class> r = signed_remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (mpz_class& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_variations(const std::vector<std::vector<mpz_class>>& chain, const mpq_class& x) {
  int variations = 0;
  int prev = 0;
  for (const auto& elem : chain) {
    int s = sign_of(eval_at(elem, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

}  // namespace

std::vector<double> real_roots(const IntPolynomial& p, double eps) {
  if (p.is_zero()) throw std::invalid_argument("real_roots: zero polynomial");
  if (!(eps > 0)) throw std::invalid_argument("real_roots: eps must be positive");
  IntPolynomial q = squarefree_part(p);
  if (q.degree() <= 0) return {};

  auto chain = sturm_chain(q);
  auto count_in = [&chain](const mpq_class& lo, const mpq_class& hi) {
    return sign_variations(chain, lo) - sign_variations(chain, hi);
  };

  // Cauchy bound: every root has |theta| < 1 + max|a_i| / a_n.
  mpq_class bound = 1;
  for (int i = 0; i < q.degree(); ++i) {
    mpq_class ratio(abs(q.coeff(i)), q.leading());
    ratio.canonicalize();
    if (ratio > bound) bound = ratio;
  }
  bound += 1;

  std::vector<double> roots;

  // Refine an interval known to hold exactly one root; endpoints are never
  // roots, so the signs of q there differ.
  auto refine = [&](mpq_class lo, mpq_class hi) {
    int sign_lo = q.sign_at(lo);
    while (mpq_class(hi - lo).get_d() > eps) {
      mpq_class mid = (lo + hi) / 2;
      int s = q.sign_at(mid);
      if (s == 0) {
        roots.push_back(mid.get_d());
        return;
      }
      if (s == sign_lo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    roots.push_back(mpq_class((lo + hi) / 2).get_d());
  };

  struct Interval {
    mpq_class lo, hi;
    int count;
  };
  std::vector<Interval> work;
  int total = count_in(-bound, bound);
  if (total > 0) work.push_back({-bound, bound, total});

  while (!work.empty()) {
    Interval iv = std::move(work.back());
    work.pop_back();
    if (iv.count == 1) {
      refine(iv.lo, iv.hi);
      continue;
    }
    // Split at a point that is not a root of q: among degree+1 evenly spaced
    // interior candidates at most degree can be roots.
    mpq_class split;
    bool found = false;
    for (int j = 1; j <= q.degree() + 1 && !found; ++j) {
      split = iv.lo + mpq_class(iv.hi - iv.lo) * j / (q.degree() + 2);
      if (q.sign_at(split) != 0) found = true;
    }
    int left = count_in(iv.lo, split);
    if (left > 0) work.push_back({iv.lo, split, left});
    if (iv.count - left > 0) work.push_back({split, iv.hi, iv.count - left});
  }

  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace pairwalk
