#include "pairwalk/report_json.hpp"

#include <json.hpp>

#include "pairwalk/graph6.hpp"

namespace pairwalk {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json state_json(const QuantumState& s) {
  ordered_json j;
  j["form"] = to_string(s.form);
  j["a"] = s.a;
  if (s.form != StateForm::kVertex) j["b"] = s.b;
  return j;
}

ordered_json roots_json(const std::vector<AlgebraicNumber>& roots) {
  ordered_json arr = ordered_json::array();
  for (const AlgebraicNumber& r : roots) {
    ordered_json entry;
    entry["exact"] = r.exact_str();
    entry["approx"] = r.approx();
    arr.push_back(std::move(entry));
  }
  return arr;
}

ordered_json exact_strings(const std::vector<AlgebraicNumber>& roots) {
  ordered_json arr = ordered_json::array();
  for (const AlgebraicNumber& r : roots) arr.push_back(r.exact_str());
  return arr;
}

ordered_json time_json(const ExactTime& t) {
  ordered_json j;
  j["exact"] = t.str();
  j["approx"] = t.approx();
  return j;
}

}  // namespace

std::string report_to_json(const Graph& g, HamiltonianKind kind, const TransferReport& report) {
  ordered_json j;
  j["graph"] = graph6_encode(g);
  j["hamiltonian"] = to_string(kind);
  j["state"] = state_json(report.state);
  j["support"] = roots_json(report.support);
  j["verdict"] = to_string(report.verdict);
  if (report.partner) j["partner"] = state_json(*report.partner);
  if (report.time) j["time"] = time_json(*report.time);
  if (report.period) j["period"] = time_json(*report.period);
  if (report.certificate) {
    ordered_json cert;
    cert["lambda_plus"] = exact_strings(report.certificate->lambda_plus);
    cert["lambda_minus"] = exact_strings(report.certificate->lambda_minus);
    j["certificate"] = std::move(cert);
    j["sign_flipped"] = report.sign_flipped;
  }
  return j.dump();
}

}  // namespace pairwalk
