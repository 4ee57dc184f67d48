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

#pragma once

#include <string>
#include <vector>

#include "uqlab/polycompile.hpp"
#include "uqlab/serialize.hpp"
#include "uqlab/useless.hpp"

namespace uq {

inline constexpr const char* kToolName = "uqlab";
inline constexpr const char* kToolVersion = "0.1.0";

/// Reports print domain points 1-based, as x = 1..N.
json report_to_json(const UselessnessReport& r);
std::string transcript_to_string(const Transcript& t);

/// CSV columns: problem,k,verdict,deviation,witness
std::string report_csv_header();
std::string report_csv_row(const UselessnessReport& r);

json audit_to_json(const RatioAudit& a);

/// CSV columns: f,p,p_classical,residual; f is the bit string f(1)..f(n).
std::string certificate_csv(const std::vector<CertificateRow>& rows, int n);

/// Wraps a result with the tool identity, config and tolerances. The
/// wall-clock timestamp lives only under "header".
json make_envelope(const std::string& command, json config, json result);
/// The envelope with "header" removed; identical runs give identical dumps.
json payload_of(const json& envelope);
json default_tolerances();

}  // namespace uq
