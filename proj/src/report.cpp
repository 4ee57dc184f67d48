// Copyright 2026 The uqlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "uqlab/report.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

namespace uq {

std::string transcript_to_string(const Transcript& t) {
  std::string s;
  for (const auto& [x, y] : t) {
    if (!s.empty()) s += ' ';
    s += "(" + std::to_string(x + 1) + "," + std::to_string(y) + ")";
  }
  return s;
}

json report_to_json(const UselessnessReport& r) {
  json j;
  j["problem"] = r.problem_id;
  j["mode"] = r.mode;
  j["k"] = r.k;
  j["verdict"] = to_string(r.verdict);
  j["max_deviation"] = r.max_deviation;
  j["evidence"] = r.evidence;
  if (r.mode == "classical") {
    j["transcripts"] = r.transcripts;
  } else {
    j["trials"] = r.trials;
  }
  if (r.classical_witness) {
    const auto& w = *r.classical_witness;
    json t = json::array();
    for (const auto& [x, y] : w.transcript) t.push_back({x + 1, y});
    j["witness"] = {{"transcript", t},
                    {"part", w.part},
                    {"posterior", to_string(w.posterior)},
                    {"prior", to_string(w.prior)}};
  } else if (r.quantum_witness) {
    const auto& w = *r.quantum_witness;
    j["witness"] = {{"trial", w.trial},
                    {"outcome", w.outcome},
                    {"part", w.part},
                    {"posterior", w.posterior},
                    {"prior", w.prior}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

std::string report_csv_header() { return "problem,k,verdict,deviation,witness\n"; }

std::string report_csv_row(const UselessnessReport& r) {
  std::ostringstream out;
  out << r.problem_id << ',' << r.k << ',' << to_string(r.verdict) << ',' << std::setprecision(17)
      << r.max_deviation << ',';
  if (r.classical_witness) {
    out << '"' << transcript_to_string(r.classical_witness->transcript) << " part=" << r.classical_witness->part
        << '"';
  } else if (r.quantum_witness) {
    out << "\"trial=" << r.quantum_witness->trial << " outcome=" << r.quantum_witness->outcome
        << " part=" << r.quantum_witness->part << '"';
  }
  out << '\n';
  return out.str();
}

json audit_to_json(const RatioAudit& a) {
  json j;
  j["k"] = a.k;
  j["part"] = a.part;
  j["defined"] = a.defined;
  j["ratio"] = a.defined ? json(a.ratio) : json(nullptr);
  j["part_prior"] = a.part_prior;
  j["deviation"] = a.deviation;
  j["hypothesis_2k_classical_useless"] = a.hypothesis_holds;
  j["identity_holds"] = a.identity_holds;
  j["consistent"] = a.consistent();
  return j;
}

std::string certificate_csv(const std::vector<CertificateRow>& rows, int n) {
  std::ostringstream out;
  out << "f,p,p_classical,residual\n" << std::setprecision(17);
  for (const auto& r : rows) {
    for (int i = 0; i < n; ++i) out << (r.oracle >> i & 1u);
    out << ',' << r.p << ',' << r.p_classical << ',' << r.residual << '\n';
  }
  return out.str();
}

json default_tolerances() {
  return {{"numeric", kNumTol},
          {"conditioning", kConditioningEps},
          {"posterior_deviation", 1e-8},
          {"degree_bound", kDegreeTol},
          {"prune", kPruneTol}};
}

json make_envelope(const std::string& command, json config, json result) {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::ostringstream ts;
  ts << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
  json j;
  j["header"] = {{"timestamp", ts.str()}};
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  j["config"] = std::move(config);
  j["tolerances"] = default_tolerances();
  j["result"] = std::move(result);
  return j;
}

json payload_of(const json& envelope) {
  json copy = envelope;
  copy.erase("header");
  return copy;
}

}  // namespace uq
