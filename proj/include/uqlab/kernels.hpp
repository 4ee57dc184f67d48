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

#include <span>
#include <vector>

#include "uqlab/qsim.hpp"

// Compute kernels. Every batched kernel has a serial and an OpenMP path;
// both use the same per-item arithmetic and the same fixed-order reduction,
// so their outputs are bitwise identical for any thread count.

namespace uq {

/// rho_f by permuting rho in place of each oracle multiplication.
ComplexMatrix evolve(const QuantumAlgorithm& alg, const OracleFunction& f);

/// rho_f by literal dense products U O rho O^dagger U^dagger.
ComplexMatrix evolve_reference(const QuantumAlgorithm& alg, const OracleFunction& f);

/// States after each query step: element 0 is rho_0, element i is the state
/// after the i-th oracle call and U_i.
std::vector<ComplexMatrix> evolve_steps(const QuantumAlgorithm& alg, const OracleFunction& f);

/// Tr(rho Pi_s) for every outcome, unclamped.
std::vector<double> outcome_probabilities(const ComplexMatrix& rho, const Povm& povm);

/// Row i holds Tr(rho_{f_i} Pi_s) over outcomes s.
Eigen::MatrixXd outcome_table(const QuantumAlgorithm& alg, std::span<const OracleFunction> functions,
                              Execution exec = Execution::parallel);

/// Element j is sum over f in part j (indexed as problem.parts()) of mu(f) rho_f.
std::vector<ComplexMatrix> weighted_part_states(const QuantumAlgorithm& alg, const LearningProblem& problem,
                                                Execution exec = Execution::parallel);

}  // namespace uq
