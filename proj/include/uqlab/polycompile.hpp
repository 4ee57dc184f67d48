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
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "uqlab/capacity.hpp"
#include "uqlab/execution.hpp"
#include "uqlab/problems.hpp"
#include "uqlab/qsim.hpp"

namespace uq {

// Subsets of the variables {1..n} are bitmasks: bit i stands for variable
// i+1, i.e. domain point i. A Boolean oracle table f corresponds to the mask
// with bit i set iff f(i) = 1.

enum class Basis {
  zero_one,        // variables f_i in {0,1}
  plus_minus_one,  // variables w_i = 2 f_i - 1 in {-1,+1}
};

/// Squarefree polynomial, one real coefficient per subset of variables.
class MultilinearPolynomial {
 public:
  MultilinearPolynomial(int n, std::vector<double> coefficients, Basis basis);

  int n() const { return n_; }
  Basis basis() const { return basis_; }
  double coefficient(std::uint32_t subset) const { return coefficients_.at(subset); }
  const std::vector<double>& coefficients() const { return coefficients_; }

  /// Evaluates at a point given in the polynomial's own basis.
  double evaluate(std::span<const int> point) const;
  /// Largest |S| with |coefficient(S)| > tol; -1 for the zero polynomial.
  int degree(double tol) const;

 private:
  int n_;
  std::vector<double> coefficients_;
  Basis basis_;
};

/// Values on {0,1}^n (index = mask) -> multilinear coefficients (Moebius).
MultilinearPolynomial interpolate_multilinear(int n, std::span<const double> cube_values);
/// Multilinear coefficients -> values on {0,1}^n (zeta transform).
std::vector<double> evaluate_on_cube(const MultilinearPolynomial& p);

/// In-place unnormalised Walsh-Hadamard butterfly:
/// out[S] = sum_x in[x] (-1)^{|S & x|}.
void walsh_hadamard(std::span<double> values);

/// p(f) = sum over accepting outcomes of Tr(rho_f Pi_s) for all 2^n Boolean
/// oracles, interpolated. Throws std::logic_error if a coefficient of size
/// above 2k exceeds 1e-8.
MultilinearPolynomial acceptance_polynomial(const QuantumAlgorithm& alg, std::span<const int> accept_outcomes,
                                            Execution exec = Execution::parallel);

/// Coefficients of q(w) = 2 p((w+1)/2) - 1 in the characters w_S, computed
/// from the values of q on {-1,1}^n by the Walsh-Hadamard butterfly.
MultilinearPolynomial to_fourier(const MultilinearPolynomial& p);
/// The same coefficients by expanding prod (1 + w_i)/2 symbolically.
MultilinearPolynomial to_fourier_by_substitution(const MultilinearPolynomial& p);
/// Inverse of to_fourier.
MultilinearPolynomial from_fourier(const MultilinearPolynomial& q);

struct CompiledTerm {
  std::uint32_t subset = 0;
  double prob = 0.0;
  int sign = 1;
};

/// Pick S with probability |q(S)|/T, query the points in S, output 0 when
/// sign(q(S)) w_S = 1 and 1 otherwise.
struct CompiledClassicalAlgorithm {
  int n = 0;
  int k = 0;
  double scale = 0.0;  // T = sum_S |q(S)|
  std::vector<CompiledTerm> terms;
  /// T = 0: output 0 with probability 1/2 and make no queries.
  bool degenerate = false;
};

/// Fourier coefficients below this magnitude are dropped before normalising.
inline constexpr double kPruneTol = 1e-12;
/// Bound on coefficients of degree above 2k.
inline constexpr double kDegreeTol = 1e-8;

CompiledClassicalAlgorithm compile_fourier(const MultilinearPolynomial& fourier, int k);
CompiledClassicalAlgorithm compile_classical(const QuantumAlgorithm& alg, std::span<const int> accept_outcomes,
                                             Execution exec = Execution::parallel);

/// Exact probability that the compiled algorithm outputs 0 on oracle f.
double classical_output_prob(const CompiledClassicalAlgorithm& c, const OracleFunction& f);

struct ClassicalSample {
  int output = 0;
  int queries = 0;
};
/// One randomized execution against a Boolean oracle.
ClassicalSample sample_compiled(const CompiledClassicalAlgorithm& c, const std::function<int(int)>& oracle,
                                std::mt19937_64& rng);

OracleFunction boolean_oracle(int n, std::uint32_t mask);

struct CertificateRow {
  std::uint32_t oracle = 0;
  double p = 0.0;
  double p_classical = 0.0;
  /// p_classical - ((p - 1/2)/T + 1/2)
  double residual = 0.0;
};
/// One row per Boolean oracle, with p(f) taken from direct simulation.
std::vector<CertificateRow> bias_certificate(const QuantumAlgorithm& alg, std::span<const int> accept_outcomes,
                                             const CompiledClassicalAlgorithm& c,
                                             Execution exec = Execution::parallel);

struct RatioAudit {
  int k = 0;
  int part = 0;             // label of C_0 (the smaller of the two labels)
  bool defined = true;      // false when sum_f mu(f) p(f) vanishes
  double ratio = 0.0;       // sum_{C_0} mu p / sum_C mu p
  double part_prior = 0.0;  // mu(C_0)
  double deviation = 0.0;
  bool hypothesis_holds = false;  // 2k classical queries are useless
  bool identity_holds = false;    // |ratio - mu(C_0)| <= 1e-8
  /// The hypothesis implies the identity whenever it holds.
  bool consistent() const { return !hypothesis_holds || (defined && identity_holds); }
};

RatioAudit ratio_audit(const LearningProblem& problem, const QuantumAlgorithm& alg,
                       std::span<const int> accept_outcomes, const Budget& budget = {});

json compiled_to_json(const CompiledClassicalAlgorithm& c);
CompiledClassicalAlgorithm compiled_from_json(const json& j);

}  // namespace uq
