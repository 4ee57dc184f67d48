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

#include "uqlab/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "uqlab/kernels.hpp"

namespace uq {

QuantumAlgorithm::QuantumAlgorithm(int x_dim, FiniteAbelianGroup group, int z_dim, DensityMatrix initial_state,
                                   std::vector<ComplexMatrix> unitaries, Povm povm,
                                   std::optional<std::map<int, int>> outcome_labels)
    : x_dim_(x_dim),
      group_(std::move(group)),
      z_dim_(z_dim),
      initial_state_(std::move(initial_state)),
      unitaries_(std::move(unitaries)),
      povm_(std::move(povm)),
      outcome_labels_(std::move(outcome_labels)) {
  if (x_dim_ < 1 || z_dim_ < 1) throw std::invalid_argument("register dimensions must be positive");
  const int d = dim();
  if (initial_state_.dim() != d) {
    throw std::invalid_argument("initial state has dim " + std::to_string(initial_state_.dim()) + ", expected " +
                                std::to_string(d));
  }
  if (povm_.dim() != d) throw std::invalid_argument("POVM dimension mismatch");
  for (std::size_t i = 0; i < unitaries_.size(); ++i) {
    if (unitaries_[i].rows() != d || unitaries_[i].cols() != d) {
      throw std::invalid_argument("unitary " + std::to_string(i + 1) + " has the wrong dimension");
    }
    if (unitarity_error(unitaries_[i]) > kNumTol) {
      throw std::invalid_argument("operator " + std::to_string(i + 1) + " is not unitary");
    }
  }
  if (outcome_labels_) {
    for (const auto& [s, j] : *outcome_labels_) {
      if (s < 0 || s >= povm_.size()) throw std::invalid_argument("label for nonexistent outcome");
    }
  }
}

QuantumAlgorithm QuantumAlgorithm::with_labels(std::map<int, int> labels) const {
  return QuantumAlgorithm(x_dim_, group_, z_dim_, initial_state_, unitaries_, povm_, std::move(labels));
}

std::vector<int> oracle_permutation(const OracleFunction& f, int x_dim, const FiniteAbelianGroup& group,
                                    int z_dim) {
  if (f.size() != x_dim) throw std::invalid_argument("oracle table length does not match x_dim");
  const int y_dim = group.order();
  std::vector<int> perm(static_cast<std::size_t>(x_dim) * y_dim * z_dim);
  for (int x = 0; x < x_dim; ++x) {
    for (int y = 0; y < y_dim; ++y) {
      const int shifted = group.add(y, f(x));
      for (int z = 0; z < z_dim; ++z) perm[(x * y_dim + y) * z_dim + z] = (x * y_dim + shifted) * z_dim + z;
    }
  }
  return perm;
}

ComplexMatrix oracle_matrix(const OracleFunction& f, int x_dim, const FiniteAbelianGroup& group, int z_dim) {
  const auto perm = oracle_permutation(f, x_dim, group, z_dim);
  const auto d = static_cast<Eigen::Index>(perm.size());
  ComplexMatrix o = ComplexMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) o(perm[i], i) = 1.0;
  return o;
}

namespace {

void clamp_probabilities(std::vector<double>& probs) {
  double total = 0.0;
  for (double& p : probs) {
    if (p < -kNumTol || p > 1.0 + kNumTol) {
      throw std::logic_error("outcome probability " + std::to_string(p) + " outside [0, 1]");
    }
    p = std::clamp(p, 0.0, 1.0);
    total += p;
  }
  if (std::abs(total - 1.0) > kNumTol) throw std::logic_error("outcome probabilities do not sum to 1");
}

}  // namespace

RunResult run(const QuantumAlgorithm& alg, const OracleFunction& f) {
  RunResult r;
  r.final_state = evolve(alg, f);
  r.outcome_probs = outcome_probabilities(r.final_state, alg.povm());
  clamp_probabilities(r.outcome_probs);
  return r;
}

void require_compatible(const QuantumAlgorithm& alg, const LearningProblem& problem) {
  if (alg.x_dim() != problem.domain_size()) {
    throw std::invalid_argument("algorithm x_dim " + std::to_string(alg.x_dim()) + " != problem domain size " +
                                std::to_string(problem.domain_size()));
  }
  if (!(alg.group() == problem.group())) throw std::invalid_argument("algorithm and problem groups differ");
}

void require_within(const QuantumAlgorithm& alg, const Budget& budget) {
  if (alg.dim() > budget.max_dim) {
    throw CapacityError("Hilbert dimension " + std::to_string(alg.dim()) + " exceeds the ceiling " +
                        std::to_string(budget.max_dim));
  }
}

Eigen::MatrixXd joint_distribution(const QuantumAlgorithm& alg, const LearningProblem& problem,
                                   Execution exec) {
  require_compatible(alg, problem);
  Eigen::MatrixXd table = outcome_table(alg, problem.functions(), exec);
  for (int i = 0; i < problem.size(); ++i) {
    for (int s = 0; s < table.cols(); ++s) {
      const double p = table(i, s);
      if (p < -kNumTol || p > 1.0 + kNumTol) throw std::logic_error("outcome probability outside [0, 1]");
      table(i, s) = std::clamp(p, 0.0, 1.0) * problem.prior_values()[i];
    }
  }
  return table;
}

std::optional<RealDistribution> posterior_from_joint(const Eigen::MatrixXd& joint, const LearningProblem& problem,
                                                     int outcome) {
  if (outcome < 0 || outcome >= joint.cols()) throw std::out_of_range("no such outcome");
  RealDistribution post;
  for (int j : problem.parts()) post[j] = 0.0;
  double total = 0.0;
  for (int i = 0; i < problem.size(); ++i) {
    post[problem.labels()[i]] += joint(i, outcome);
    total += joint(i, outcome);
  }
  if (total <= kConditioningEps) return std::nullopt;
  for (auto& [j, v] : post) v /= total;
  return post;
}

std::optional<RealDistribution> posterior_quantum(const QuantumAlgorithm& alg, const LearningProblem& problem,
                                                  int outcome) {
  return posterior_from_joint(joint_distribution(alg, problem), problem, outcome);
}

double success_probability(const QuantumAlgorithm& alg, const LearningProblem& problem) {
  if (!alg.outcome_labels()) throw std::invalid_argument("success probability needs outcome labels");
  const auto& labels = *alg.outcome_labels();
  const Eigen::MatrixXd joint = joint_distribution(alg, problem);
  double success = 0.0;
  for (int i = 0; i < problem.size(); ++i) {
    for (const auto& [s, j] : labels) {
      if (j == problem.labels()[i]) success += joint(i, s);
    }
  }
  return std::clamp(success, 0.0, 1.0);
}

PosteriorDeviation posterior_deviation(const Eigen::MatrixXd& joint, const LearningProblem& problem) {
  PosteriorDeviation worst;
  const auto prior = problem.prior_distribution();
  for (int s = 0; s < joint.cols(); ++s) {
    const auto post = posterior_from_joint(joint, problem, s);
    if (!post) continue;
    for (const auto& [j, v] : *post) {
      const double pj = prior.at(j).get_d();
      const double dev = std::abs(v - pj);
      if (dev > worst.max_deviation || worst.outcome < 0) {
        worst = {dev, s, j, v, pj};
      }
    }
  }
  return worst;
}

QuantumAlgorithm random_algorithm(int x_dim, const FiniteAbelianGroup& group, const RandomAlgorithmSpec& spec,
                                  std::uint64_t seed) {
  if (spec.queries < 0) throw std::invalid_argument("query count must be non-negative");
  const int d = x_dim * group.order() * spec.z_dim;
  const int outcomes = spec.n_outcomes == 0 ? d : spec.n_outcomes;
  auto rho0 = DensityMatrix::pure(random_state_vector(d, mix_seed(seed, 0)));
  auto povm = random_povm(d, outcomes, mix_seed(seed, 1));
  std::vector<ComplexMatrix> unitaries;
  for (int i = 0; i < spec.queries; ++i) unitaries.push_back(random_unitary(d, mix_seed(seed, 2 + i)));
  std::optional<std::map<int, int>> labels;
  if (!spec.label_cycle.empty()) {
    labels.emplace();
    for (int s = 0; s < outcomes; ++s) (*labels)[s] = spec.label_cycle[s % spec.label_cycle.size()];
  }
  return QuantumAlgorithm(x_dim, group, spec.z_dim, std::move(rho0), std::move(unitaries), std::move(povm),
                          std::move(labels));
}

json algorithm_to_json(const QuantumAlgorithm& alg) {
  json j;
  j["x_dim"] = alg.x_dim();
  j["group"] = group_to_json(alg.group());
  j["z_dim"] = alg.z_dim();
  j["rho0"] = matrix_to_json(alg.initial_state().matrix());
  j["unitaries"] = json::array();
  for (const auto& u : alg.unitaries()) j["unitaries"].push_back(matrix_to_json(u));
  j["povm"] = json::array();
  for (const auto& e : alg.povm().elements()) j["povm"].push_back(matrix_to_json(e));
  if (alg.outcome_labels()) {
    json labels = json::object();
    for (const auto& [s, lab] : *alg.outcome_labels()) labels[std::to_string(s)] = lab;
    j["labels"] = std::move(labels);
  }
  return j;
}

QuantumAlgorithm algorithm_from_json(const json& j) {
  std::vector<ComplexMatrix> unitaries;
  for (const auto& u : j.at("unitaries")) unitaries.push_back(matrix_from_json(u));
  std::vector<ComplexMatrix> elements;
  for (const auto& e : j.at("povm")) elements.push_back(matrix_from_json(e));
  std::optional<std::map<int, int>> labels;
  if (j.contains("labels") && !j["labels"].is_null()) {
    labels.emplace();
    for (const auto& [key, value] : j["labels"].items()) (*labels)[std::stoi(key)] = value.get<int>();
  }
  return QuantumAlgorithm(j.at("x_dim").get<int>(), group_from_json(j.at("group")), j.value("z_dim", 1),
                          DensityMatrix(matrix_from_json(j.at("rho0"))), std::move(unitaries),
                          Povm(std::move(elements)), std::move(labels));
}

}  // namespace uq
