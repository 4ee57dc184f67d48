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

#include <cstdint>
#include <string>
#include <vector>

#include "uqlab/serialize.hpp"

namespace uq {

struct CriterionResult {
  int id = 0;
  std::string tag;
  std::string claim;
  std::string expected;
  std::string observed;
  bool pass = false;
  double seconds = 0.0;  // not part of the serialized payload
};

struct AcceptanceOptions {
  std::uint64_t seed = 7;
  /// Comma-separated tags to run; empty runs everything.
  std::string only;
};

/// Runs the end-to-end acceptance criteria in id order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

/// Deterministic summary (no timings).
json acceptance_to_json(const std::vector<CriterionResult>& results);
std::string acceptance_table(const std::vector<CriterionResult>& results);
std::vector<std::string> acceptance_tags();

}  // namespace uq
