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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "uqlab/algebra.hpp"
#include "uqlab/serialize.hpp"

namespace uq {

using Rational = mpq_class;

/// Total table X -> Y; values[x] is an element of the response group.
struct OracleFunction {
  std::vector<int> values;

  int operator()(int x) const { return values[x]; }
  int size() const { return static_cast<int>(values.size()); }
  auto operator<=>(const OracleFunction&) const = default;
};

/// Query/response pairs (x_i, y_i) with x in the internal numbering [0, |X|).
using Transcript = std::vector<std::pair<int, int>>;

/// Distribution over part labels; keys are the labels j in J.
using RationalDistribution = std::map<int, Rational>;

/// (C, {C_j}, mu): a class of functions, one part label per function, and
/// an exact prior. Domain points are 0..|X|-1 regardless of how a generator
/// numbers them externally.
class LearningProblem {
 public:
  LearningProblem(std::string name, int domain_size, FiniteAbelianGroup group,
                  std::vector<OracleFunction> functions, std::vector<int> labels,
                  std::vector<Rational> prior);

  const std::string& name() const { return name_; }
  int domain_size() const { return domain_size_; }
  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<OracleFunction>& functions() const { return functions_; }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<Rational>& prior() const { return prior_; }
  /// Prior weights rounded to double, for the numeric simulator.
  const std::vector<double>& prior_values() const { return prior_values_; }
  int size() const { return static_cast<int>(functions_.size()); }

  /// Sorted distinct labels.
  const std::vector<int>& parts() const { return parts_; }
  /// Position of label j in parts().
  int part_index(int label) const;
  Rational part_prior(int label) const;
  RationalDistribution prior_distribution() const;

 private:
  std::string name_;
  int domain_size_;
  FiniteAbelianGroup group_;
  std::vector<OracleFunction> functions_;
  std::vector<int> labels_;
  std::vector<Rational> prior_;
  std::vector<double> prior_values_;
  std::vector<int> parts_;
};

/// All f: {1..N} -> Z_2, uniform prior, labelled by parity. Supports N <= 12.
LearningProblem make_parity(int n);

/// All f: {1,2,3} -> Z_3, uniform prior; label 0 when the image size is
/// even, 1 when odd.
LearningProblem make_image_parity();

/// Shamir secret sharing: f(x) = a_0 + a_1 x + ... + a_k x^k over Z_p on
/// the points x = 1..p-1 (internal index x-1); label f(0) = a_0. Functions
/// are ordered by coefficient tuple with a_0 most significant.
LearningProblem make_shamir(int p, int k);

bool is_prime(int p);
/// Horner evaluation of sum_i coeffs[i] x^i mod p.
int shamir_evaluate(int p, std::span<const int> coeffs, int x);

/// f(0) of the unique degree-<=k polynomial through k+1 shares (x, y) with
/// distinct x in {1..p-1}, by Lagrange interpolation over Z_p.
int shamir_reconstruct(int p, int k, std::span<const std::pair<int, int>> shares);

/// Exact posterior over parts given f(x_i) = y_i for every pair. Returns
/// nullopt when the event has probability zero.
std::optional<RationalDistribution> posterior_classical(const LearningProblem& problem,
                                                        const Transcript& transcript);

/// Same schema in both directions:
/// { "domain_size", "group", "functions", "labels", "prior": [[num, den]] }.
json problem_to_json(const LearningProblem& problem);
LearningProblem problem_from_json(const json& j, std::string name = "problem");

/// Extends the domain by one point on which every function is 0. Used to run
/// the pairwise parity algorithm on odd N.
LearningProblem pad_with_zero_point(const LearningProblem& problem);

std::string to_string(const Rational& r);

}  // namespace uq
