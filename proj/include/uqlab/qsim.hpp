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
#include <map>
#include <optional>
#include <vector>

#include "uqlab/algebra.hpp"
#include "uqlab/capacity.hpp"
#include "uqlab/execution.hpp"
#include "uqlab/problems.hpp"
#include "uqlab/serialize.hpp"

namespace uq {

/// A k-query algorithm on H = C^X (x) C^Y (x) C^Z with basis index
/// (x * |Y| + y) * |Z| + z. The oracle is applied before each unitary, so
/// unitaries().size() is the query count and the last unitary is the
/// pre-measurement rotation.
class QuantumAlgorithm {
 public:
  QuantumAlgorithm(int x_dim, FiniteAbelianGroup group, int z_dim, DensityMatrix initial_state,
                   std::vector<ComplexMatrix> unitaries, Povm povm,
                   std::optional<std::map<int, int>> outcome_labels = std::nullopt);

  int x_dim() const { return x_dim_; }
  const FiniteAbelianGroup& group() const { return group_; }
  int y_dim() const { return group_.order(); }
  int z_dim() const { return z_dim_; }
  int dim() const { return x_dim_ * group_.order() * z_dim_; }
  int queries() const { return static_cast<int>(unitaries_.size()); }

  const DensityMatrix& initial_state() const { return initial_state_; }
  const std::vector<ComplexMatrix>& unitaries() const { return unitaries_; }
  const Povm& povm() const { return povm_; }
  int outcome_count() const { return povm_.size(); }
  const std::optional<std::map<int, int>>& outcome_labels() const { return outcome_labels_; }

  QuantumAlgorithm with_labels(std::map<int, int> labels) const;

 private:
  int x_dim_;
  FiniteAbelianGroup group_;
  int z_dim_;
  DensityMatrix initial_state_;
  std::vector<ComplexMatrix> unitaries_;
  Povm povm_;
  std::optional<std::map<int, int>> outcome_labels_;
};

struct RunResult {
  ComplexMatrix final_state;
  std::vector<double> outcome_probs;
};

/// Basis permutation |x,y,z> -> |x, y + f(x), z> as an index map.
std::vector<int> oracle_permutation(const OracleFunction& f, int x_dim, const FiniteAbelianGroup& group,
                                    int z_dim);
/// The same permutation as a dense 0/1 matrix.
ComplexMatrix oracle_matrix(const OracleFunction& f, int x_dim, const FiniteAbelianGroup& group, int z_dim);

RunResult run(const QuantumAlgorithm& alg, const OracleFunction& f);

/// Rows are functions of the problem, columns outcomes: mu(f) Tr(rho_f Pi_s).
Eigen::MatrixXd joint_distribution(const QuantumAlgorithm& alg, const LearningProblem& problem,
                                   Execution exec = Execution::parallel);

using RealDistribution = std::map<int, double>;

/// Below this outcome probability the posterior is reported as undefined.
inline constexpr double kConditioningEps = 1e-12;

std::optional<RealDistribution> posterior_quantum(const QuantumAlgorithm& alg, const LearningProblem& problem,
                                                  int outcome);
std::optional<RealDistribution> posterior_from_joint(const Eigen::MatrixXd& joint, const LearningProblem& problem,
                                                     int outcome);

/// Probability the labelled outcome names the part containing f.
double success_probability(const QuantumAlgorithm& alg, const LearningProblem& problem);

/// Largest |mu(C_j | s) - mu(C_j)| over observable outcomes.
struct PosteriorDeviation {
  double max_deviation = 0.0;
  int outcome = -1;
  int part = -1;
  double posterior = 0.0;
  double prior = 0.0;
};
PosteriorDeviation posterior_deviation(const Eigen::MatrixXd& joint, const LearningProblem& problem);

struct RandomAlgorithmSpec {
  int queries = 1;
  int z_dim = 1;
  /// 0 selects dim outcomes (rank-one projective measurement).
  int n_outcomes = 0;
  /// When non-empty, outcome s is labelled label_cycle[s % size].
  std::vector<int> label_cycle;
};

/// Haar-random pure initial state, random unitaries and a random projective
/// POVM. Stream 0 seeds the state, stream 1 the POVM, stream 2+i unitary i.
QuantumAlgorithm random_algorithm(int x_dim, const FiniteAbelianGroup& group, const RandomAlgorithmSpec& spec,
                                  std::uint64_t seed);

void require_compatible(const QuantumAlgorithm& alg, const LearningProblem& problem);
void require_within(const QuantumAlgorithm& alg, const Budget& budget);

json algorithm_to_json(const QuantumAlgorithm& alg);
QuantumAlgorithm algorithm_from_json(const json& j);

}  // namespace uq
