#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pairwalk/algebraic.hpp"
#include "pairwalk/graph.hpp"
#include "pairwalk/intmatrix.hpp"
#include "pairwalk/polynomial.hpp"

namespace pairwalk {

enum class StateForm { kPair, kPlus, kVertex };

std::string to_string(StateForm form);
// Accepts "pair", "plus", "vertex"; nullopt otherwise.
std::optional<StateForm> state_form_from_string(std::string_view name);

// A walk state: e_a - e_b (pair), e_a + e_b (plus), or e_a (vertex). Pair
// and plus states are stored with a < b; (b, a) names the same pair state up
// to a global sign, which no verdict here depends on.
struct QuantumState {
  StateForm form = StateForm::kVertex;
  int a = 0;
  int b = -1;  // unused for vertex form

  static QuantumState pair(int a, int b);
  static QuantumState plus(int a, int b);
  static QuantumState vertex(int a);

  bool operator==(const QuantumState&) const = default;
};

// (form, a, b) lexicographic — the deterministic scan order.
bool operator<(const QuantumState& x, const QuantumState& y);

// Integer realization of the state on n vertices; validates vertex range.
std::vector<long long> state_vector(const QuantumState& s, int n);

// Monic squarefree minimal polynomial of the state's vector under the
// chosen Hamiltonian; its roots are the eigenvalue support.
IntPolynomial support_min_poly(const Graph& g, HamiltonianKind kind, const QuantumState& s);

// Exact eigenvalue support, ascending. Opaque roots possible (degree >= 3
// irreducible factors).
std::vector<AlgebraicNumber> support(const Graph& g, HamiltonianKind kind, const QuantumState& s);

struct CospectralityCertificate {
  std::vector<AlgebraicNumber> lambda_plus;   // E_r s1 = +E_r s2 != 0
  std::vector<AlgebraicNumber> lambda_minus;  // E_r s1 = -E_r s2 != 0
  bool strongly_cospectral = false;
};

// Exact and eigenvector-free: a support root theta lies in lambda_plus iff
// theta drops out of support(s1 - s2), in lambda_minus iff it drops out of
// support(s1 + s2); the two sides are automatically disjoint, and strong
// cospectrality holds iff they partition the (shared) support. Throws
// std::invalid_argument when s1 = +-s2 as vectors.
CospectralityCertificate strong_cospectrality(const Graph& g, HamiltonianKind kind,
                                              const QuantumState& s1, const QuantumState& s2);

// Singleton eigenvalue support: the walk never moves the state (beyond a
// global phase). Pair form only; the result is cross-checked against the
// twin condition on {a, b}, and a disagreement raises consistency_error.
bool is_fixed(const Graph& g, HamiltonianKind kind, const QuantumState& s);

enum class PeriodicityClass { kFixed, kPeriodic, kNonPeriodic };

struct Periodicity {
  PeriodicityClass kind = PeriodicityClass::kNonPeriodic;
  std::optional<ExactTime> period;  // minimum period, present iff kPeriodic
};

// Ratio-condition classification over the exact support. Singleton support
// is Fixed. Otherwise periodic iff every root is an integer (common field
// delta = 1) or all roots are quadratic integers (p + q sqrt(delta))/2 over
// one field with a common p (plain integers v joining as 2v = p); the
// minimum period is then 2 pi/(g sqrt(delta)) with g the gcd of the integer
// multipliers. Opaque roots or mismatched fields give NonPeriodic.
Periodicity periodicity(const Graph& g, HamiltonianKind kind, const QuantumState& s);

struct PstDecision {
  ExactTime time;
  CospectralityCertificate certificate;
  // True when s2 had to be read with a global minus sign (lambda sets
  // swapped) so the largest support eigenvalue lands in lambda_plus.
  bool sign_flipped = false;
};

// Exact perfect state transfer decision: strong cospectrality, then the
// ratio condition, then the parity split — quotients (theta_0 - theta_r) /
// (g sqrt(delta)) must be even exactly on lambda_plus and odd exactly on
// lambda_minus. On success the transfer time pi/(g sqrt(delta)) is
// certified numerically (fidelity >= 1 - 1e-8; consistency_error if the
// certification fails). Throws std::invalid_argument when s1 = +-s2.
std::optional<PstDecision> pst_decide(const Graph& g, HamiltonianKind kind,
                                      const QuantumState& s1, const QuantumState& s2);

using StateFilter = std::function<bool(const QuantumState&)>;

struct PartnerResult {
  QuantumState partner;
  PstDecision decision;
};

// Scans every same-form candidate state (optionally restricted by filter),
// prefilters by minimal-polynomial equality, then decides by pst_decide.
// Transfer is monogamous, so two hits raise consistency_error.
std::optional<PartnerResult> find_partner(const Graph& g, HamiltonianKind kind,
                                          const QuantumState& s, const StateFilter& filter = {});

struct PstReport {
  QuantumState source;
  QuantumState target;
  ExactTime time;
};

// Composes two pair-state transfers at one common time whose sources share
// exactly one vertex and whose targets share exactly one vertex: the
// symmetric differences transfer to each other at the same time. Rejects
// mismatched times, non-pair forms, and degenerate sharing (0 or 2 common
// vertices on either side) with std::invalid_argument.
PstReport transitivity_compose(const PstReport& r1, const PstReport& r2);

enum class Verdict { kFixed, kPst, kPeriodicOnly, kNonPeriodic };

std::string to_string(Verdict v);

struct TransferReport {
  QuantumState state;
  std::vector<AlgebraicNumber> support;
  Verdict verdict = Verdict::kNonPeriodic;
  std::optional<QuantumState> partner;                  // PST only
  std::optional<ExactTime> time;                        // PST only
  std::optional<ExactTime> period;                      // PST (2x time) or PeriodicOnly
  std::optional<CospectralityCertificate> certificate;  // PST only
  bool sign_flipped = false;
};

// Full pipeline for one state: support, fixed check, partner search, then
// periodicity. partner_filter restricts the candidate partner states.
TransferReport analyze_state(const Graph& g, HamiltonianKind kind, const QuantumState& s,
                             const StateFilter& partner_filter = {});

}  // namespace pairwalk
