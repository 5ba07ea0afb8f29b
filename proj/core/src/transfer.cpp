#include "pairwalk/transfer.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "pairwalk/errors.hpp"
#include "pairwalk/krylov.hpp"
#include "pairwalk/spectral.hpp"

namespace pairwalk {

std::string to_string(StateForm form) {
  switch (form) {
    case StateForm::kPair:
      return "pair";
    case StateForm::kPlus:
      return "plus";
    case StateForm::kVertex:
      return "vertex";
  }
  throw std::logic_error("unreachable");
}

std::optional<StateForm> state_form_from_string(std::string_view name) {
  if (name == "pair") return StateForm::kPair;
  if (name == "plus") return StateForm::kPlus;
  if (name == "vertex") return StateForm::kVertex;
  return std::nullopt;
}

namespace {

QuantumState make_two_vertex(StateForm form, int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("state vertices must be non-negative");
  if (a == b) throw std::invalid_argument("pair and plus states need two distinct vertices");
  if (a > b) std::swap(a, b);
  return QuantumState{form, a, b};
}

}  // namespace

QuantumState QuantumState::pair(int a, int b) { return make_two_vertex(StateForm::kPair, a, b); }

QuantumState QuantumState::plus(int a, int b) { return make_two_vertex(StateForm::kPlus, a, b); }

QuantumState QuantumState::vertex(int a) {
  if (a < 0) throw std::invalid_argument("state vertices must be non-negative");
  return QuantumState{StateForm::kVertex, a, -1};
}

bool operator<(const QuantumState& x, const QuantumState& y) {
  if (x.form != y.form) return static_cast<int>(x.form) < static_cast<int>(y.form);
  if (x.a != y.a) return x.a < y.a;
  return x.b < y.b;
}

std::vector<long long> state_vector(const QuantumState& s, int n) {
  auto in_range = [n](int v) { return v >= 0 && v < n; };
  if (!in_range(s.a) || (s.form != StateForm::kVertex && (!in_range(s.b) || s.a == s.b)))
    throw std::invalid_argument("state vertices out of range for the graph");
  std::vector<long long> v(static_cast<std::size_t>(n), 0);
  switch (s.form) {
    case StateForm::kPair:
      v[s.a] = 1;
      v[s.b] = -1;
      break;
    case StateForm::kPlus:
      v[s.a] = 1;
      v[s.b] = 1;
      break;
    case StateForm::kVertex:
      v[s.a] = 1;
      break;
  }
  return v;
}

IntPolynomial support_min_poly(const Graph& g, HamiltonianKind kind, const QuantumState& s) {
  return krylov_min_poly(hamiltonian(g, kind), state_vector(s, g.size()));
}

std::vector<AlgebraicNumber> support(const Graph& g, HamiltonianKind kind, const QuantumState& s) {
  return factor_linear_quadratic(support_min_poly(g, kind, s)).distinct_roots();
}

CospectralityCertificate strong_cospectrality(const Graph& g, HamiltonianKind kind,
                                              const QuantumState& s1, const QuantumState& s2) {
  const int n = g.size();
  std::vector<long long> v1 = state_vector(s1, n);
  std::vector<long long> v2 = state_vector(s2, n);
  std::vector<long long> diff(v1.size()), sum(v1.size());
  bool diff_zero = true;
  bool sum_zero = true;
  for (std::size_t i = 0; i < v1.size(); ++i) {
    diff[i] = v1[i] - v2[i];
    sum[i] = v1[i] + v2[i];
    diff_zero = diff_zero && diff[i] == 0;
    sum_zero = sum_zero && sum[i] == 0;
  }
  if (diff_zero || sum_zero)
    throw std::invalid_argument("strong cospectrality is undefined when s2 = +-s1");

  IntMatrix h = hamiltonian(g, kind);
  IntPolynomial m1 = krylov_min_poly(h, v1);
  IntPolynomial m2 = krylov_min_poly(h, v2);
  // E_r s1 = +E_r s2 exactly at the support roots missing from s1 - s2, and
  // E_r s1 = -E_r s2 at those missing from s1 + s2.
  IntPolynomial plus_poly = *exact_divide(m1, poly_gcd(m1, krylov_min_poly(h, diff)));
  IntPolynomial minus_poly = *exact_divide(m1, poly_gcd(m1, krylov_min_poly(h, sum)));

  CospectralityCertificate cert;
  cert.lambda_plus = factor_linear_quadratic(plus_poly).distinct_roots();
  cert.lambda_minus = factor_linear_quadratic(minus_poly).distinct_roots();
  cert.strongly_cospectral =
      m1 == m2 && plus_poly.degree() + minus_poly.degree() == m1.degree();
  return cert;
}

bool is_fixed(const Graph& g, HamiltonianKind kind, const QuantumState& s) {
  if (s.form != StateForm::kPair)
    throw std::invalid_argument("the fixed-state test applies to pair states");
  bool fixed = support_min_poly(g, kind, s).degree() == 1;
  if (fixed != twins(g, s.a, s.b))
    throw consistency_error("fixed pair state disagrees with the twin criterion");
  return fixed;
}

namespace {

struct RatioData {
  long long delta = 1;                 // shared quadratic field (1 = rational)
  long long g = 1;                     // gcd of the nonzero multipliers
  std::vector<long long> multipliers;  // (theta_max - theta_r) / sqrt(delta), aligned with roots
};

// Decides whether all pairwise eigenvalue differences are integer multiples
// of one square root: either every root is an integer, or every root is
// (p + q*sqrt(delta))/2 over a single field with one shared p (a plain
// integer v joins as q = 0 exactly when 2v = p). Opaque roots never qualify:
// a conjugate argument shows their presence already breaks the condition.
std::optional<RatioData> ratio_condition(const std::vector<AlgebraicNumber>& roots) {
  RatioData data;
  bool all_integer = true;
  for (const AlgebraicNumber& r : roots) {
    if (r.kind() == AlgebraicKind::kOpaque) return std::nullopt;
    if (r.kind() == AlgebraicKind::kQuadratic) {
      all_integer = false;
      if (data.delta == 1) {
        data.delta = r.quad_delta();
      } else if (data.delta != r.quad_delta()) {
        return std::nullopt;
      }
    }
  }

  if (all_integer) {
    long long top = roots.back().int_value();
    for (const AlgebraicNumber& r : roots) data.multipliers.push_back(top - r.int_value());
  } else {
    // Common half-integer part p; every difference is then a multiple of
    // sqrt(delta) because q parities agree across one algebraic-integer
    // field.
    long long p = 0;
    bool have_p = false;
    for (const AlgebraicNumber& r : roots) {
      long long rp = r.is_integer() ? 2 * r.int_value() : r.quad_p();
      if (!have_p) {
        p = rp;
        have_p = true;
      } else if (p != rp) {
        return std::nullopt;
      }
    }
    long long q_top = roots.back().is_integer() ? 0 : roots.back().quad_q();
    for (const AlgebraicNumber& r : roots) {
      long long q = r.is_integer() ? 0 : r.quad_q();
      if ((q_top - q) % 2 != 0)
        throw std::logic_error("quadratic support roots with mismatched parity");
      data.multipliers.push_back((q_top - q) / 2);
    }
  }

  data.g = 0;
  for (long long m : data.multipliers) data.g = std::gcd(data.g, std::llabs(m));
  if (data.g == 0) throw std::logic_error("ratio condition on fewer than two distinct roots");
  return data;
}

bool contains(const std::vector<AlgebraicNumber>& v, const AlgebraicNumber& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

Periodicity periodicity(const Graph& g, HamiltonianKind kind, const QuantumState& s) {
  std::vector<AlgebraicNumber> roots = support(g, kind, s);
  if (roots.size() == 1) return {PeriodicityClass::kFixed, std::nullopt};
  std::optional<RatioData> ratio = ratio_condition(roots);
  if (!ratio) return {PeriodicityClass::kNonPeriodic, std::nullopt};
  // Minimum period 2*pi / (g*sqrt(delta)).
  return {PeriodicityClass::kPeriodic,
          make_exact_time(2, ratio->g * ratio->delta, ratio->delta)};
}

std::optional<PstDecision> pst_decide(const Graph& g, HamiltonianKind kind,
                                      const QuantumState& s1, const QuantumState& s2) {
  CospectralityCertificate cert = strong_cospectrality(g, kind, s1, s2);
  if (!cert.strongly_cospectral) return std::nullopt;

  std::vector<AlgebraicNumber> roots = support(g, kind, s1);
  if (roots.size() == 1) return std::nullopt;  // fixed states do not transfer
  std::optional<RatioData> ratio = ratio_condition(roots);
  if (!ratio) return std::nullopt;

  // Normalize the target's sign so the largest support eigenvalue sits on
  // the plus side; the certificate keeps the orientation as given.
  const std::vector<AlgebraicNumber>* plus_side = &cert.lambda_plus;
  const std::vector<AlgebraicNumber>* minus_side = &cert.lambda_minus;
  bool flipped = false;
  if (contains(cert.lambda_minus, roots.back())) {
    std::swap(plus_side, minus_side);
    flipped = true;
  }

  // Transfer happens iff the multiplier quotients are even exactly on the
  // plus side and odd exactly on the minus side.
  for (std::size_t i = 0; i < roots.size(); ++i) {
    bool even = (ratio->multipliers[i] / ratio->g) % 2 == 0;
    if (even != contains(*plus_side, roots[i])) return std::nullopt;
    if (even == contains(*minus_side, roots[i])) return std::nullopt;
  }

  ExactTime tau = make_exact_time(1, ratio->g * ratio->delta, ratio->delta);

  // Certify the verdict numerically before reporting it.
  std::vector<long long> v1 = state_vector(s1, g.size());
  std::vector<long long> v2 = state_vector(s2, g.size());
  std::vector<double> d1(v1.begin(), v1.end());
  std::vector<double> d2(v2.begin(), v2.end());
  if (fidelity(hamiltonian(g, kind), d1, d2, tau.approx()) < 1.0 - 1e-8)
    throw consistency_error("exact transfer verdict failed its numeric fidelity check");

  return PstDecision{tau, std::move(cert), flipped};
}

std::optional<PartnerResult> find_partner(const Graph& g, HamiltonianKind kind,
                                          const QuantumState& s, const StateFilter& filter) {
  const int n = g.size();
  IntMatrix h = hamiltonian(g, kind);
  IntPolynomial ms = krylov_min_poly(h, state_vector(s, n));

  std::optional<PartnerResult> found;
  auto consider = [&](const QuantumState& candidate) {
    if (candidate == s) return;
    if (filter && !filter(candidate)) return;
    // Cheap necessary condition: transfer partners share their support.
    if (!(krylov_min_poly(h, state_vector(candidate, n)) == ms)) return;
    std::optional<PstDecision> decision = pst_decide(g, kind, s, candidate);
    if (!decision) return;
    if (found) throw consistency_error("transfer monogamy violated: two partners found");
    found = PartnerResult{candidate, *std::move(decision)};
  };

  if (s.form == StateForm::kVertex) {
    for (int a = 0; a < n; ++a) consider(QuantumState::vertex(a));
  } else {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        consider(s.form == StateForm::kPair ? QuantumState::pair(a, b)
                                            : QuantumState::plus(a, b));
  }
  return found;
}

PstReport transitivity_compose(const PstReport& r1, const PstReport& r2) {
  for (const QuantumState* s : {&r1.source, &r1.target, &r2.source, &r2.target})
    if (s->form != StateForm::kPair)
      throw std::invalid_argument("transfer composition is a pair-state operation");
  if (!(r1.time == r2.time))
    throw std::invalid_argument("transfer composition needs a common transfer time");

  auto shared = [](const QuantumState& x, const QuantumState& y) {
    int count = 0;
    if (x.a == y.a || x.a == y.b) ++count;
    if (x.b == y.a || x.b == y.b) ++count;
    return count;
  };
  auto compose = [&](const QuantumState& x, const QuantumState& y) {
    if (shared(x, y) != 1)
      throw std::invalid_argument("transfer composition needs exactly one shared vertex per side");
    int u = (x.a == y.a || x.a == y.b) ? x.b : x.a;
    int v = (y.a == x.a || y.a == x.b) ? y.b : y.a;
    return QuantumState::pair(u, v);
  };

  PstReport out{compose(r1.source, r2.source), compose(r1.target, r2.target), r1.time};
  // A coincident prediction (the composed state returns to itself) is
  // periodicity, not transfer.
  if (out.source == out.target)
    throw std::invalid_argument("transfer composition degenerated to a single state");
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kFixed:
      return "fixed";
    case Verdict::kPst:
      return "pst";
    case Verdict::kPeriodicOnly:
      return "periodic";
    case Verdict::kNonPeriodic:
      return "nonperiodic";
  }
  throw std::logic_error("unreachable");
}

TransferReport analyze_state(const Graph& g, HamiltonianKind kind, const QuantumState& s,
                             const StateFilter& partner_filter) {
  TransferReport report;
  report.state = s;
  report.support = support(g, kind, s);

  if (report.support.size() == 1) {
    if (s.form == StateForm::kPair) is_fixed(g, kind, s);  // twin cross-check
    report.verdict = Verdict::kFixed;
    return report;
  }

  if (std::optional<PartnerResult> hit = find_partner(g, kind, s, partner_filter)) {
    const ExactTime& tau = hit->decision.time;
    report.verdict = Verdict::kPst;
    report.partner = hit->partner;
    report.time = tau;
    report.period = make_exact_time(2 * tau.num, tau.den, tau.delta);
    report.certificate = hit->decision.certificate;
    report.sign_flipped = hit->decision.sign_flipped;
    return report;
  }

  std::optional<RatioData> ratio = ratio_condition(report.support);
  if (ratio) {
    report.verdict = Verdict::kPeriodicOnly;
    report.period = make_exact_time(2, ratio->g * ratio->delta, ratio->delta);
  } else {
    report.verdict = Verdict::kNonPeriodic;
  }
  return report;
}

}  // namespace pairwalk
