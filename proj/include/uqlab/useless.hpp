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
#include <optional>
#include <span>
#include <string>

#include "uqlab/capacity.hpp"
#include "uqlab/kernels.hpp"
#include "uqlab/problems.hpp"
#include "uqlab/qsim.hpp"

namespace uq {

enum class Verdict { useless, not_useless, vacuous };
std::string to_string(Verdict v);

/// A transcript whose posterior differs from the prior for `part`.
struct ClassicalWitness {
  Transcript transcript;
  int part = 0;
  Rational posterior;
  Rational prior;
};

/// The trial, outcome and part that realise the largest posterior shift.
struct QuantumWitness {
  int trial = 0;
  int outcome = 0;
  int part = 0;
  double posterior = 0.0;
  double prior = 0.0;
};

struct UselessnessReport {
  std::string problem_id;
  std::string mode;  // "classical" or "quantum"
  int k = 0;
  Verdict verdict = Verdict::useless;
  std::optional<ClassicalWitness> classical_witness;
  std::optional<QuantumWitness> quantum_witness;
  double max_deviation = 0.0;
  int trials = 0;
  std::uint64_t transcripts = 0;
  std::string evidence;
};

/// Exact decision of whether k classical queries are useless. Transcripts
/// are ordered lexicographically by (x_1..x_k, y_1..y_k); the witness is
/// the first violating one. Zero-probability transcripts are skipped.
UselessnessReport classical_useless(const LearningProblem& problem, int k, const Budget& budget = {},
                                    Execution exec = Execution::parallel);

/// Transcript-by-transcript brute force through posterior_classical.
/// Serial; kept as the independent check of classical_useless.
UselessnessReport classical_useless_reference(const LearningProblem& problem, int k, const Budget& budget = {});

/// Largest k for which k classical queries are useless (capped at |X|).
int max_useless_k(const LearningProblem& problem, const Budget& budget = {});

/// floor(max_useless_k / 2) + 1.
int quantum_lower_bound(const LearningProblem& problem, const Budget& budget = {});

/// max_j max_entry | sum_{f in C_j} mu(f) rho_f - mu(C_j) sum_f mu(f) rho_f |.
double lemma_check(const LearningProblem& problem, const QuantumAlgorithm& alg,
                   Execution exec = Execution::parallel);

struct FalsifyOptions {
  int queries = 1;
  int trials = 50;
  std::uint64_t seed = 7;
  /// Deviations above this count as a violation.
  double tolerance = 1e-8;
  /// Fixed algorithms used as the first trials (must have `queries` queries).
  std::vector<QuantumAlgorithm> seeded;
  Budget budget;
};

/// Samples random q-query algorithms and records the largest posterior
/// shift. Cannot prove uselessness; the evidence field says whether 2q
/// classical queries are useless, which proves it.
UselessnessReport quantum_useless_falsify(const LearningProblem& problem, const FalsifyOptions& options,
                                          Execution exec = Execution::parallel);

}  // namespace uq
