#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pairwalk/graph.hpp"
#include "pairwalk/intmatrix.hpp"
#include "pairwalk/transfer.hpp"

namespace pairwalk {

// Which states take part in a census scan. The census counting rule ("at
// least one of the two states is an edge") is kEdgeAny: sources are edge
// states, partners are unrestricted. kEdgeBoth additionally requires the
// transfer partner to be an edge state; kAllPairs scans every state of the
// chosen form. Vertex-form scans always cover every vertex.
enum class Convention { kEdgeAny, kEdgeBoth, kAllPairs };

std::string to_string(Convention c);
std::optional<Convention> convention_from_string(std::string_view name);

struct ScanConfig {
  HamiltonianKind hamiltonian = HamiltonianKind::kLaplacian;
  StateForm form = StateForm::kPair;
  Convention convention = Convention::kEdgeAny;
  // Fixed states are trivially periodic; census periodic counts include them
  // unless this is cleared.
  bool include_fixed_in_periodic = true;
  // Re-check each periodic verdict numerically at its computed period.
  bool verify_periodic_numerically = false;
  double fidelity_tolerance = 1e-8;
  int jobs = 1;
};

// Scan result for one graph: reports for every scanned state whose verdict
// is fixed, periodic, or pst, in source-state order, with each unordered PST
// pair reported once.
struct GraphScan {
  Graph graph{1};
  std::vector<TransferReport> findings;
  bool has_pst = false;
  bool has_periodic = false;
};

GraphScan scan_graph(const Graph& g, const ScanConfig& cfg);

struct SurveyRow {
  int n = 0;  // 0 when the corpus mixes graph orders
  long long total_graphs = 0;
  long long graphs_with_pst = 0;
  long long graphs_with_periodic_state = 0;
};

std::string survey_csv_header();
std::string survey_csv_row(const SurveyRow& row);

struct SurveyResult {
  SurveyRow row;
  std::vector<GraphScan> scans;  // corpus order
};

// Parallel map of scan_graph over the corpus using cfg.jobs workers; results
// keep corpus order, so the output never depends on the worker count.
SurveyResult survey(const std::vector<Graph>& corpus, const ScanConfig& cfg);

// One survey row per vertex count from 2 to max_n over all trees.
std::vector<SurveyRow> tree_scan(int max_n, const ScanConfig& cfg);

}  // namespace pairwalk
