#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "pairwalk/enumerate.hpp"
#include "pairwalk/errors.hpp"
#include "pairwalk/graph.hpp"
#include "pairwalk/graph6.hpp"
#include "pairwalk/report_json.hpp"
#include "pairwalk/spectral.hpp"
#include "pairwalk/survey.hpp"
#include "pairwalk/transfer.hpp"

namespace {

using namespace pairwalk;

constexpr int kExitUsage = 1;
constexpr int kExitCorpus = 2;
constexpr int kExitInternal = 3;

Graph parse_graph_arg(const std::string& text) {
  if (text.rfind("named:", 0) == 0) return build_named(text.substr(6));
  return graph6_decode(text);
}

int parse_index(const std::string& text) {
  try {
    std::size_t used = 0;
    int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument("");
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid vertex index '" + text + "'");
  }
}

QuantumState parse_state_arg(const std::string& text, StateForm form) {
  std::size_t comma = text.find(',');
  if (form == StateForm::kVertex) {
    if (comma != std::string::npos)
      throw std::invalid_argument("vertex states take a single vertex index");
    return QuantumState::vertex(parse_index(text));
  }
  if (comma == std::string::npos)
    throw std::invalid_argument("pair and plus states take two indices, e.g. --state 0,3");
  int a = parse_index(text.substr(0, comma));
  int b = parse_index(text.substr(comma + 1));
  return form == StateForm::kPair ? QuantumState::pair(a, b) : QuantumState::plus(a, b);
}

HamiltonianKind parse_hamiltonian(const std::string& text) {
  std::optional<HamiltonianKind> kind = hamiltonian_from_string(text);
  if (!kind)
    throw std::invalid_argument("unknown hamiltonian '" + text +
                                "' (expected laplacian, signless, or adjacency)");
  return *kind;
}

StateForm parse_form(const std::string& text) {
  std::optional<StateForm> form = state_form_from_string(text);
  if (!form)
    throw std::invalid_argument("unknown state form '" + text +
                                "' (expected pair, plus, or vertex)");
  return *form;
}

Convention parse_convention(const std::string& text) {
  std::optional<Convention> convention = convention_from_string(text);
  if (!convention)
    throw std::invalid_argument("unknown convention '" + text +
                                "' (expected edge-any, edge-both, or all-pairs)");
  return *convention;
}

bool canonical_combo(HamiltonianKind kind, StateForm form) {
  return (kind == HamiltonianKind::kLaplacian && form == StateForm::kPair) ||
         (kind == HamiltonianKind::kSignlessLaplacian && form == StateForm::kPlus) ||
         (kind == HamiltonianKind::kAdjacency && form == StateForm::kVertex);
}

void require_combo_allowed(HamiltonianKind kind, StateForm form, bool experimental) {
  if (canonical_combo(kind, form) || experimental) return;
  throw std::invalid_argument(to_string(kind) + " with " + to_string(form) +
                              " states is a non-canonical combination; pass --experimental");
}

std::vector<QuantumState> all_form_states(int n, StateForm form) {
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

struct AnalyzeArgs {
  std::string graph;
  std::string hamiltonian = "laplacian";
  std::string form = "pair";
  std::string state;
  bool experimental = false;
};

int run_analyze(const AnalyzeArgs& args) {
  Graph g = parse_graph_arg(args.graph);
  HamiltonianKind kind = parse_hamiltonian(args.hamiltonian);
  StateForm form = parse_form(args.form);
  require_combo_allowed(kind, form, args.experimental);

  std::vector<QuantumState> states;
  if (args.state.empty())
    states = all_form_states(g.size(), form);
  else
    states.push_back(parse_state_arg(args.state, form));

  for (const QuantumState& s : states)
    std::cout << report_to_json(g, kind, analyze_state(g, kind, s)) << "\n";
  return 0;
}

struct ScanArgs {
  int n = 0;
  std::string input;
  std::string hamiltonian = "laplacian";
  std::string form = "pair";
  std::string convention = "edge-any";
  std::string findings;
  int jobs = 1;
  bool experimental = false;
};

int run_scan(const ScanArgs& args) {
  ScanConfig cfg;
  cfg.hamiltonian = parse_hamiltonian(args.hamiltonian);
  cfg.form = parse_form(args.form);
  cfg.convention = parse_convention(args.convention);
  cfg.jobs = args.jobs;
  require_combo_allowed(cfg.hamiltonian, cfg.form, args.experimental);

  std::vector<Graph> corpus;
  bool parse_failures = false;
  if (!args.input.empty()) {
    std::ifstream in(args.input);
    if (!in) {
      std::cerr << "cannot open corpus file " << args.input << "\n";
      return kExitCorpus;
    }
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      try {
        corpus.push_back(graph6_decode(line));
      } catch (const graph6_error& e) {
        std::cerr << args.input << ":" << lineno << ": " << e.what() << "\n";
        parse_failures = true;
      }
    }
  } else {
    if (args.n < 1 || args.n > 9)
      throw std::invalid_argument(
          "built-in enumeration covers --n 1..9; pass --input for larger corpora");
    corpus = enumerate_connected(args.n);
  }

  SurveyResult result = survey(corpus, cfg);
  std::cout << survey_csv_header() << "\n" << survey_csv_row(result.row) << "\n";

  if (!args.findings.empty()) {
    std::ofstream out(args.findings);
    if (!out) {
      std::cerr << "cannot open findings file " << args.findings << "\n";
      return kExitUsage;
    }
    for (const GraphScan& scan : result.scans)
      for (const TransferReport& report : scan.findings)
        out << report_to_json(scan.graph, cfg.hamiltonian, report) << "\n";
  }
  return parse_failures ? kExitCorpus : 0;
}

struct EnumerateArgs {
  int n = 0;
  bool connected_only = false;
  std::string output;
};

int run_enumerate(const EnumerateArgs& args) {
  if (args.n < 1 || args.n > 9)
    throw std::invalid_argument("enumeration covers --n 1..9");
  std::vector<Graph> graphs =
      args.connected_only ? enumerate_connected(args.n) : enumerate_all_graphs(args.n);
  std::ofstream file;
  if (!args.output.empty()) {
    file.open(args.output);
    if (!file) {
      std::cerr << "cannot open output file " << args.output << "\n";
      return kExitUsage;
    }
  }
  std::ostream& out = args.output.empty() ? std::cout : file;
  for (const Graph& g : graphs) out << graph6_encode(g) << "\n";
  return 0;
}

struct CurveArgs {
  std::string graph;
  std::string state;
  std::string state2;
  std::string hamiltonian = "laplacian";
  std::string form = "pair";
  double tmax = 0.0;
  int steps = 0;
  std::string output;
};

int run_curve(const CurveArgs& args) {
  Graph g = parse_graph_arg(args.graph);
  HamiltonianKind kind = parse_hamiltonian(args.hamiltonian);
  StateForm form = parse_form(args.form);
  QuantumState s1 = parse_state_arg(args.state, form);
  QuantumState s2 = parse_state_arg(args.state2, form);
  if (args.tmax <= 0.0) throw std::invalid_argument("--tmax must be positive");
  if (args.steps < 2) throw std::invalid_argument("--steps must be at least 2");

  std::vector<long long> v1 = state_vector(s1, g.size());
  std::vector<long long> v2 = state_vector(s2, g.size());
  std::vector<std::pair<double, double>> curve =
      fidelity_curve(hamiltonian(g, kind), std::vector<double>(v1.begin(), v1.end()),
                     std::vector<double>(v2.begin(), v2.end()), args.tmax, args.steps);

  std::ofstream file;
  if (!args.output.empty()) {
    file.open(args.output);
    if (!file) {
      std::cerr << "cannot open output file " << args.output << "\n";
      return kExitUsage;
    }
  }
  std::ostream& out = args.output.empty() ? std::cout : file;
  write_curve_csv(out, curve);
  return 0;
}

struct TreesArgs {
  int max_n = 0;
  std::string hamiltonian = "laplacian";
  std::string form = "pair";
  std::string convention = "edge-any";
  int jobs = 1;
  bool experimental = false;
};

int run_trees(const TreesArgs& args) {
  ScanConfig cfg;
  cfg.hamiltonian = parse_hamiltonian(args.hamiltonian);
  cfg.form = parse_form(args.form);
  cfg.convention = parse_convention(args.convention);
  cfg.jobs = args.jobs;
  require_combo_allowed(cfg.hamiltonian, cfg.form, args.experimental);

  std::cout << survey_csv_header() << "\n";
  for (const SurveyRow& row : tree_scan(args.max_n, cfg)) std::cout << survey_csv_row(row) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact perfect state transfer and periodicity decisions for small graphs"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand("analyze", "Analyze states of one graph");
  analyze->add_option("--graph", analyze_args.graph, "graph6 string or named:<family>[:k...]")
      ->required();
  analyze->add_option("--hamiltonian", analyze_args.hamiltonian, "laplacian|signless|adjacency")->capture_default_str();
  analyze->add_option("--form", analyze_args.form, "pair|plus|vertex")->capture_default_str();
  analyze->add_option("--state", analyze_args.state,
                      "a,b for pair/plus states, a for vertex states (default: all states)");
  analyze->add_flag("--experimental", analyze_args.experimental,
                    "allow non-canonical hamiltonian/form combinations");

  ScanArgs scan_args;
  CLI::App* scan = app.add_subcommand("scan", "Survey a corpus and print census counts");
  scan->add_option("--n", scan_args.n, "scan all connected graphs on n vertices");
  scan->add_option("--input", scan_args.input, "graph6 corpus file (one graph per line)");
  scan->add_option("--hamiltonian", scan_args.hamiltonian, "laplacian|signless|adjacency")->capture_default_str();
  scan->add_option("--form", scan_args.form, "pair|plus|vertex")->capture_default_str();
  scan->add_option("--convention", scan_args.convention, "edge-any|edge-both|all-pairs")->capture_default_str();
  scan->add_option("--jobs", scan_args.jobs, "worker thread count")->capture_default_str()
      ->check(CLI::PositiveNumber);
  scan->add_option("--findings", scan_args.findings, "write per-state findings as JSON lines");
  scan->add_flag("--experimental", scan_args.experimental,
                 "allow non-canonical hamiltonian/form combinations");

  EnumerateArgs enumerate_args;
  CLI::App* enumerate = app.add_subcommand("enumerate", "Write graph6 lines for all graphs on n vertices");
  enumerate->add_option("--n", enumerate_args.n, "vertex count (1..9)")->required();
  enumerate->add_flag("--connected-only", enumerate_args.connected_only,
                      "restrict to connected graphs");
  enumerate->add_option("-o,--output", enumerate_args.output, "output file (default: stdout)");

  CurveArgs curve_args;
  CLI::App* curve = app.add_subcommand("curve", "Sample a fidelity curve between two states");
  curve->add_option("--graph", curve_args.graph, "graph6 string or named:<family>[:k...]")
      ->required();
  curve->add_option("--state", curve_args.state, "source state")->required();
  curve->add_option("--state2", curve_args.state2, "target state")->required();
  curve->add_option("--hamiltonian", curve_args.hamiltonian, "laplacian|signless|adjacency")->capture_default_str();
  curve->add_option("--form", curve_args.form, "pair|plus|vertex")->capture_default_str();
  curve->add_option("--tmax", curve_args.tmax, "largest time to sample")->required();
  curve->add_option("--steps", curve_args.steps, "number of grid points from 0 to tmax inclusive (>= 2)")
      ->required();
  curve->add_option("-o,--output", curve_args.output, "output file (default: stdout)");

  TreesArgs trees_args;
  CLI::App* trees = app.add_subcommand("trees", "Survey all trees up to a vertex count");
  trees->add_option("--max-n", trees_args.max_n, "largest vertex count (<= 12)")->required();
  trees->add_option("--hamiltonian", trees_args.hamiltonian, "laplacian|signless|adjacency")->capture_default_str();
  trees->add_option("--form", trees_args.form, "pair|plus|vertex")->capture_default_str();
  trees->add_option("--convention", trees_args.convention, "edge-any|edge-both|all-pairs")->capture_default_str();
  trees->add_option("--jobs", trees_args.jobs, "worker thread count")->capture_default_str()
      ->check(CLI::PositiveNumber);
  trees->add_flag("--experimental", trees_args.experimental,
                  "allow non-canonical hamiltonian/form combinations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (analyze->parsed()) return run_analyze(analyze_args);
    if (scan->parsed()) return run_scan(scan_args);
    if (enumerate->parsed()) return run_enumerate(enumerate_args);
    if (curve->parsed()) return run_curve(curve_args);
    if (trees->parsed()) return run_trees(trees_args);
    std::cerr << "no subcommand given\n";
    return kExitUsage;
  } catch (const consistency_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitInternal;
  } catch (const graph6_error& e) {
    std::cerr << e.what() << "\n";
    return kExitCorpus;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
}
