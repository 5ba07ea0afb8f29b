#include "pairwalk/survey.hpp"

#include <atomic>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pairwalk/enumerate.hpp"
#include "pairwalk/errors.hpp"
#include "pairwalk/spectral.hpp"

namespace pairwalk {

std::string to_string(Convention c) {
  switch (c) {
    case Convention::kEdgeAny:
      return "edge-any";
    case Convention::kEdgeBoth:
      return "edge-both";
    case Convention::kAllPairs:
      return "all-pairs";
  }
  throw std::logic_error("unknown convention");
}

std::optional<Convention> convention_from_string(std::string_view name) {
  if (name == "edge-any" || name == "edge_any") return Convention::kEdgeAny;
  if (name == "edge-both" || name == "edge_both") return Convention::kEdgeBoth;
  if (name == "all-pairs" || name == "all_pairs") return Convention::kAllPairs;
  return std::nullopt;
}

namespace {

std::vector<QuantumState> form_states(int n, StateForm form) {
  std::vector<QuantumState> out;
  if (form == StateForm::kVertex) {
    for (int a = 0; a < n; ++a) out.push_back(QuantumState::vertex(a));
    return out;
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      out.push_back(form == StateForm::kPair ? QuantumState::pair(a, b)
                                             : QuantumState::plus(a, b));
  return out;
}

}  // namespace

GraphScan scan_graph(const Graph& g, const ScanConfig& cfg) {
  GraphScan scan;
  scan.graph = g;

  bool two_vertex_form = cfg.form != StateForm::kVertex;
  bool restrict_sources = two_vertex_form && cfg.convention != Convention::kAllPairs;
  StateFilter partner_filter;
  if (two_vertex_form && cfg.convention == Convention::kEdgeBoth)
    partner_filter = [&g](const QuantumState& s) { return g.has_edge(s.a, s.b); };

  for (const QuantumState& s : form_states(g.size(), cfg.form)) {
    if (restrict_sources && !g.has_edge(s.a, s.b)) continue;
    TransferReport report = analyze_state(g, cfg.hamiltonian, s, partner_filter);
    switch (report.verdict) {
      case Verdict::kNonPeriodic:
        continue;
      case Verdict::kFixed:
        if (cfg.include_fixed_in_periodic) scan.has_periodic = true;
        break;
      case Verdict::kPeriodicOnly:
        scan.has_periodic = true;
        if (cfg.verify_periodic_numerically) {
          std::vector<long long> v = state_vector(s, g.size());
          std::vector<double> dv(v.begin(), v.end());
          double f = fidelity(hamiltonian(g, cfg.hamiltonian), dv, dv, report.period->approx());
          if (f < 1.0 - cfg.fidelity_tolerance)
            throw consistency_error("periodic verdict failed its numeric fidelity check");
        }
        break;
      case Verdict::kPst: {
        scan.has_pst = true;
        scan.has_periodic = true;
        // Keep one report per unordered pair: drop this orientation when the
        // partner is itself a scanned source that precedes it.
        const QuantumState& p = *report.partner;
        bool partner_scanned = !restrict_sources || g.has_edge(p.a, p.b);
        if (partner_scanned && p < s) continue;
        break;
      }
    }
    scan.findings.push_back(std::move(report));
  }
  return scan;
}

std::string survey_csv_header() {
  return "n,total_graphs,graphs_with_pst,graphs_with_periodic_state";
}

std::string survey_csv_row(const SurveyRow& row) {
  std::ostringstream out;
  out << row.n << ',' << row.total_graphs << ',' << row.graphs_with_pst << ','
      << row.graphs_with_periodic_state;
  return out.str();
}

SurveyResult survey(const std::vector<Graph>& corpus, const ScanConfig& cfg) {
  SurveyResult result;
  result.scans.resize(corpus.size());

  std::size_t jobs = std::max(1, cfg.jobs);
  jobs = std::min(jobs, corpus.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i) result.scans[i] = scan_graph(corpus[i], cfg);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= corpus.size()) return;
        try {
          result.scans[i] = scan_graph(corpus[i], cfg);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < jobs; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  SurveyRow& row = result.row;
  row.total_graphs = static_cast<long long>(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    int n = corpus[i].size();
    if (i == 0) row.n = n;
    if (row.n != n) row.n = 0;
    if (result.scans[i].has_pst) ++row.graphs_with_pst;
    if (result.scans[i].has_periodic) ++row.graphs_with_periodic_state;
  }
  return result;
}

std::vector<SurveyRow> tree_scan(int max_n, const ScanConfig& cfg) {
  if (max_n < 2 || max_n > kMaxVertices)
    throw std::invalid_argument("tree scan supports 2 <= max_n <= 12");
  std::vector<SurveyRow> rows;
  for (int n = 2; n <= max_n; ++n) rows.push_back(survey(enumerate_trees(n), cfg).row);
  return rows;
}

}  // namespace pairwalk
