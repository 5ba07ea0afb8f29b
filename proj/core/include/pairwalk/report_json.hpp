#pragma once

#include <string>

#include "pairwalk/graph.hpp"
#include "pairwalk/intmatrix.hpp"
#include "pairwalk/transfer.hpp"

namespace pairwalk {

// One-line JSON rendering of an analysis result. Always present: graph
// (graph6), hamiltonian, state, support (exact string + double approx per
// root), verdict. Present when applicable: partner, time, period,
// certificate (lambda_plus / lambda_minus as exact strings), sign_flipped.
std::string report_to_json(const Graph& g, HamiltonianKind kind, const TransferReport& report);

}  // namespace pairwalk
