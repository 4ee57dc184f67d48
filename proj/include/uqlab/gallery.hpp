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

#include "uqlab/qsim.hpp"

namespace uq {

/// Outcomes of the parity algorithms: query register even or odd.
inline constexpr int kOutcomeEven = 0;
inline constexpr int kOutcomeOdd = 1;

/// One query, X = {1,2}, Y = Z_2. Outcome kOutcomeEven/kOutcomeOdd reports
/// f(1) + f(2) with certainty.
QuantumAlgorithm deutsch();

/// N/2 queries for even N <= 8, resolving the pairs (1,2),(3,4),... in
/// order. The running parity lives in the low bit of the query register.
QuantumAlgorithm pairwise_parity(int n);

/// pairwise_parity on ceil(N/2) pairs. For odd N the domain gains one point
/// that every function maps to 0; pair it with pad_with_zero_point.
QuantumAlgorithm pairwise_parity_padded(int n);

/// Zero-query algorithm that always answers `label`.
QuantumAlgorithm constant_guess(int x_dim, const FiniteAbelianGroup& group, int label);

struct GalleryEntry {
  std::string name;
  int parameter = 0;
  QuantumAlgorithm algorithm;
  double claimed_success = 1.0;
};

/// Names accepted by gallery_entry: "deutsch", "pairwise-parity".
std::vector<std::string> gallery_names();
GalleryEntry gallery_entry(const std::string& name, int parameter = 0);

}  // namespace uq
