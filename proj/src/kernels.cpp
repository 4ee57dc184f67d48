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

#include "uqlab/kernels.hpp"

#include <algorithm>

#include <omp.h>

namespace uq {

namespace {

// Partial sums are formed per block of this many functions and then added
// in block order; the block size fixes the floating-point summation order.
constexpr int kBlock = 32;

ComplexMatrix conjugate_by_permutation(const ComplexMatrix& b, const std::vector<int>& perm) {
  const auto d = b.rows();
  ComplexMatrix out(d, d);
  for (Eigen::Index col = 0; col < d; ++col) {
    const int pc = perm[col];
    for (Eigen::Index row = 0; row < d; ++row) out(perm[row], pc) = b(row, col);
  }
  return out;
}

}  // namespace

ComplexMatrix evolve(const QuantumAlgorithm& alg, const OracleFunction& f) {
  const auto perm = oracle_permutation(f, alg.x_dim(), alg.group(), alg.z_dim());
  ComplexMatrix rho = alg.initial_state().matrix();
  ComplexMatrix tmp(rho.rows(), rho.cols());
  for (const auto& u : alg.unitaries()) {
    const ComplexMatrix queried = conjugate_by_permutation(rho, perm);
    tmp.noalias() = u * queried;
    rho.noalias() = tmp * u.adjoint();
  }
  return rho;
}

ComplexMatrix evolve_reference(const QuantumAlgorithm& alg, const OracleFunction& f) {
  const ComplexMatrix oracle = oracle_matrix(f, alg.x_dim(), alg.group(), alg.z_dim());
  ComplexMatrix rho = alg.initial_state().matrix();
  for (const auto& u : alg.unitaries()) {
    const ComplexMatrix queried = oracle * rho * oracle.adjoint();
    rho = u * queried * u.adjoint();
  }
  return rho;
}

std::vector<ComplexMatrix> evolve_steps(const QuantumAlgorithm& alg, const OracleFunction& f) {
  const auto perm = oracle_permutation(f, alg.x_dim(), alg.group(), alg.z_dim());
  std::vector<ComplexMatrix> steps{alg.initial_state().matrix()};
  for (const auto& u : alg.unitaries()) {
    const ComplexMatrix queried = conjugate_by_permutation(steps.back(), perm);
    steps.push_back(u * queried * u.adjoint());
  }
  return steps;
}

std::vector<double> outcome_probabilities(const ComplexMatrix& rho, const Povm& povm) {
  std::vector<double> probs(povm.size());
  for (int s = 0; s < povm.size(); ++s) {
    // Tr(rho Pi) = sum_ij rho_ij Pi_ji
    probs[s] = rho.cwiseProduct(povm[s].transpose()).sum().real();
  }
  return probs;
}

Eigen::MatrixXd outcome_table(const QuantumAlgorithm& alg, std::span<const OracleFunction> functions,
                              Execution exec) {
  const auto n = static_cast<std::int64_t>(functions.size());
  Eigen::MatrixXd table(n, alg.outcome_count());
  auto row = [&](std::int64_t i) {
    const auto probs = outcome_probabilities(evolve(alg, functions[i]), alg.povm());
    for (int s = 0; s < alg.outcome_count(); ++s) table(i, s) = probs[s];
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < n; ++i) row(i);
  } else {
    for (std::int64_t i = 0; i < n; ++i) row(i);
  }
  return table;
}

std::vector<ComplexMatrix> weighted_part_states(const QuantumAlgorithm& alg, const LearningProblem& problem,
                                                Execution exec) {
  require_compatible(alg, problem);
  const int d = alg.dim();
  const int parts = static_cast<int>(problem.parts().size());
  const int n = problem.size();
  const int blocks = (n + kBlock - 1) / kBlock;

  std::vector<int> part_of(n);
  for (int i = 0; i < n; ++i) part_of[i] = problem.part_index(problem.labels()[i]);

  // Blocks are processed in waves so only a few partials are alive at once;
  // they are always folded into the totals in increasing block order.
  const int wave = exec == Execution::parallel ? 4 * omp_get_max_threads() : 1;
  std::vector<std::vector<ComplexMatrix>> partial(
      wave, std::vector<ComplexMatrix>(parts, ComplexMatrix::Zero(d, d)));
  std::vector<ComplexMatrix> sums(parts, ComplexMatrix::Zero(d, d));
  auto block = [&](int b, std::vector<ComplexMatrix>& acc) {
    for (auto& m : acc) m.setZero();
    const int end = std::min(n, (b + 1) * kBlock);
    for (int i = b * kBlock; i < end; ++i) {
      const double w = problem.prior_values()[i];
      if (w == 0.0) continue;
      acc[part_of[i]] += w * evolve(alg, problem.functions()[i]);
    }
  };
  for (int first = 0; first < blocks; first += wave) {
    const int count = std::min(wave, blocks - first);
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
      for (int b = 0; b < count; ++b) block(first + b, partial[b]);
    } else {
      for (int b = 0; b < count; ++b) block(first + b, partial[b]);
    }
    for (int b = 0; b < count; ++b) {
      for (int j = 0; j < parts; ++j) sums[j] += partial[b][j];
    }
  }
  return sums;
}

}  // namespace uq
