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

#include "uqlab/polycompile.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "uqlab/kernels.hpp"
#include "uqlab/useless.hpp"

namespace uq {

namespace {

int popcount(std::uint32_t m) { return std::popcount(m); }

void require_cube(int n, std::size_t size) {
  if (n < 0 || n > 20 || size != (std::size_t{1} << n)) throw std::invalid_argument("need 2^n values");
}

std::vector<double> accept_values(const Eigen::MatrixXd& table, std::span<const int> accept) {
  std::vector<double> p(table.rows(), 0.0);
  for (Eigen::Index i = 0; i < table.rows(); ++i) {
    for (int s : accept) p[i] += table(i, s);
  }
  return p;
}

void require_boolean(const QuantumAlgorithm& alg, std::span<const int> accept) {
  if (alg.group().order() != 2) throw std::invalid_argument("polynomial method needs Boolean responses (Y = Z_2)");
  if (alg.x_dim() > 12) throw CapacityError("polynomial method supports n <= 12 query points");
  for (int s : accept) {
    if (s < 0 || s >= alg.outcome_count()) throw std::invalid_argument("accept set names a nonexistent outcome");
  }
}

std::vector<OracleFunction> all_boolean_oracles(int n) {
  std::vector<OracleFunction> fns;
  fns.reserve(std::size_t{1} << n);
  for (std::uint32_t m = 0; m < (1u << n); ++m) fns.push_back(boolean_oracle(n, m));
  return fns;
}

}  // namespace

MultilinearPolynomial::MultilinearPolynomial(int n, std::vector<double> coefficients, Basis basis)
    : n_(n), coefficients_(std::move(coefficients)), basis_(basis) {
  require_cube(n_, coefficients_.size());
}

double MultilinearPolynomial::evaluate(std::span<const int> point) const {
  if (static_cast<int>(point.size()) != n_) throw std::invalid_argument("point has the wrong length");
  double total = 0.0;
  for (std::uint32_t s = 0; s < coefficients_.size(); ++s) {
    double term = coefficients_[s];
    for (int i = 0; i < n_ && term != 0.0; ++i) {
      if (s >> i & 1u) term *= point[i];
    }
    total += term;
  }
  return total;
}

int MultilinearPolynomial::degree(double tol) const {
  int deg = -1;
  for (std::uint32_t s = 0; s < coefficients_.size(); ++s) {
    if (std::abs(coefficients_[s]) > tol) deg = std::max(deg, popcount(s));
  }
  return deg;
}

OracleFunction boolean_oracle(int n, std::uint32_t mask) {
  OracleFunction f;
  f.values.resize(n);
  for (int i = 0; i < n; ++i) f.values[i] = static_cast<int>(mask >> i & 1u);
  return f;
}

MultilinearPolynomial interpolate_multilinear(int n, std::span<const double> cube_values) {
  require_cube(n, cube_values.size());
  std::vector<double> c(cube_values.begin(), cube_values.end());
  for (int i = 0; i < n; ++i) {
    const std::uint32_t bit = 1u << i;
    for (std::uint32_t m = 0; m < c.size(); ++m) {
      if (m & bit) c[m] -= c[m ^ bit];
    }
  }
  return MultilinearPolynomial(n, std::move(c), Basis::zero_one);
}

std::vector<double> evaluate_on_cube(const MultilinearPolynomial& p) {
  if (p.basis() != Basis::zero_one) throw std::invalid_argument("expected a 0/1-basis polynomial");
  std::vector<double> v = p.coefficients();
  for (int i = 0; i < p.n(); ++i) {
    const std::uint32_t bit = 1u << i;
    for (std::uint32_t m = 0; m < v.size(); ++m) {
      if (m & bit) v[m] += v[m ^ bit];
    }
  }
  return v;
}

void walsh_hadamard(std::span<double> values) {
  for (std::size_t h = 1; h < values.size(); h <<= 1) {
    for (std::size_t i = 0; i < values.size(); i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const double a = values[j], b = values[j + h];
        values[j] = a + b;
        values[j + h] = a - b;
      }
    }
  }
}

MultilinearPolynomial to_fourier(const MultilinearPolynomial& p) {
  if (p.basis() != Basis::zero_one) throw std::invalid_argument("expected a 0/1-basis polynomial");
  std::vector<double> q = evaluate_on_cube(p);
  for (double& v : q) v = 2.0 * v - 1.0;
  walsh_hadamard(q);
  // w_S = (-1)^{|S|} (-1)^{|S & x|} when w_i = 2 x_i - 1.
  const double norm = std::ldexp(1.0, -p.n());
  for (std::uint32_t s = 0; s < q.size(); ++s) q[s] *= (popcount(s) % 2 ? -norm : norm);
  return MultilinearPolynomial(p.n(), std::move(q), Basis::plus_minus_one);
}

MultilinearPolynomial to_fourier_by_substitution(const MultilinearPolynomial& p) {
  if (p.basis() != Basis::zero_one) throw std::invalid_argument("expected a 0/1-basis polynomial");
  // prod_{i in S} (1 + w_i)/2 = 2^{-|S|} sum_{T subset S} w_T, so
  // qhat(T) = 2 sum_{S superset T} 2^{-|S|} c_S - [T empty].
  std::vector<double> q(p.coefficients().size());
  for (std::uint32_t s = 0; s < q.size(); ++s) q[s] = std::ldexp(p.coefficients()[s], 1 - popcount(s));
  for (int i = 0; i < p.n(); ++i) {
    const std::uint32_t bit = 1u << i;
    for (std::uint32_t m = 0; m < q.size(); ++m) {
      if (!(m & bit)) q[m] += q[m | bit];
    }
  }
  q[0] -= 1.0;
  return MultilinearPolynomial(p.n(), std::move(q), Basis::plus_minus_one);
}

MultilinearPolynomial from_fourier(const MultilinearPolynomial& q) {
  if (q.basis() != Basis::plus_minus_one) throw std::invalid_argument("expected a +-1-basis polynomial");
  std::vector<double> v = q.coefficients();
  for (std::uint32_t s = 0; s < v.size(); ++s) {
    if (popcount(s) % 2) v[s] = -v[s];
  }
  walsh_hadamard(v);
  for (double& x : v) x = (1.0 + x) / 2.0;
  return interpolate_multilinear(q.n(), v);
}

MultilinearPolynomial acceptance_polynomial(const QuantumAlgorithm& alg, std::span<const int> accept_outcomes,
                                            Execution exec) {
  require_boolean(alg, accept_outcomes);
  const int n = alg.x_dim();
  const auto fns = all_boolean_oracles(n);
  const auto p = accept_values(outcome_table(alg, fns, exec), accept_outcomes);
  auto poly = interpolate_multilinear(n, p);
  const int bound = 2 * alg.queries();
  for (std::uint32_t s = 0; s < poly.coefficients().size(); ++s) {
    if (popcount(s) > bound && std::abs(poly.coefficient(s)) >= kDegreeTol) {
      throw std::logic_error("acceptance polynomial has degree above 2k = " + std::to_string(bound));
    }
  }
  return poly;
}

CompiledClassicalAlgorithm compile_fourier(const MultilinearPolynomial& fourier, int k) {
  if (fourier.basis() != Basis::plus_minus_one) throw std::invalid_argument("expected Fourier coefficients");
  CompiledClassicalAlgorithm c;
  c.n = fourier.n();
  c.k = k;
  std::vector<CompiledTerm> kept;
  for (std::uint32_t s = 0; s < fourier.coefficients().size(); ++s) {
    const double v = fourier.coefficient(s);
    if (std::abs(v) < kPruneTol) continue;
    if (popcount(s) > 2 * k) {
      if (std::abs(v) >= kDegreeTol) throw std::logic_error("Fourier coefficient above degree 2k");
      continue;  // numerically zero by the degree bound
    }
    kept.push_back({s, std::abs(v), v > 0 ? 1 : -1});
    c.scale += std::abs(v);
  }
  if (c.scale < kPruneTol) {
    c.scale = 0.0;
    c.degenerate = true;
    return c;
  }
  for (auto& t : kept) t.prob /= c.scale;
  c.terms = std::move(kept);
  return c;
}

CompiledClassicalAlgorithm compile_classical(const QuantumAlgorithm& alg, std::span<const int> accept_outcomes,
                                             Execution exec) {
  return compile_fourier(to_fourier(acceptance_polynomial(alg, accept_outcomes, exec)), alg.queries());
}

double classical_output_prob(const CompiledClassicalAlgorithm& c, const OracleFunction& f) {
  if (f.size() != c.n) throw std::invalid_argument("oracle length does not match the compiled algorithm");
  if (c.degenerate) return 0.5;
  double p0 = 0.0;
  for (const auto& t : c.terms) {
    int w = t.sign;
    for (int i = 0; i < c.n; ++i) {
      if (t.subset >> i & 1u) w *= f(i) ? 1 : -1;
    }
    if (w == 1) p0 += t.prob;
  }
  return p0;
}

ClassicalSample sample_compiled(const CompiledClassicalAlgorithm& c, const std::function<int(int)>& oracle,
                                std::mt19937_64& rng) {
  ClassicalSample out;
  if (c.degenerate) {
    out.output = std::bernoulli_distribution(0.5)(rng) ? 0 : 1;
    return out;
  }
  std::vector<double> weights;
  for (const auto& t : c.terms) weights.push_back(t.prob);
  const auto& term = c.terms[std::discrete_distribution<int>(weights.begin(), weights.end())(rng)];
  int w = term.sign;
  for (int i = 0; i < c.n; ++i) {
    if (term.subset >> i & 1u) {
      w *= oracle(i) ? 1 : -1;
      ++out.queries;
    }
  }
  out.output = w == 1 ? 0 : 1;
  return out;
}

std::vector<CertificateRow> bias_certificate(const QuantumAlgorithm& alg, std::span<const int> accept_outcomes,
                                             const CompiledClassicalAlgorithm& c, Execution exec) {
  require_boolean(alg, accept_outcomes);
  if (alg.x_dim() != c.n) throw std::invalid_argument("compiled algorithm does not match");
  const auto fns = all_boolean_oracles(c.n);
  const auto p = accept_values(outcome_table(alg, fns, exec), accept_outcomes);
  std::vector<CertificateRow> rows;
  for (std::uint32_t m = 0; m < fns.size(); ++m) {
    CertificateRow r;
    r.oracle = m;
    r.p = p[m];
    r.p_classical = classical_output_prob(c, fns[m]);
    const double predicted = c.degenerate ? 0.5 : (p[m] - 0.5) / c.scale + 0.5;
    r.residual = r.p_classical - predicted;
    rows.push_back(r);
  }
  return rows;
}

RatioAudit ratio_audit(const LearningProblem& problem, const QuantumAlgorithm& alg,
                       std::span<const int> accept_outcomes, const Budget& budget) {
  require_boolean(alg, accept_outcomes);
  require_compatible(alg, problem);
  if (problem.parts().size() != 2) throw std::invalid_argument("audit needs a two-part partition");

  RatioAudit audit;
  audit.k = alg.queries();
  audit.part = problem.parts().front();
  audit.part_prior = problem.part_prior(audit.part).get_d();

  const auto p = accept_values(outcome_table(alg, problem.functions()), accept_outcomes);
  double in_part = 0.0, total = 0.0;
  for (int i = 0; i < problem.size(); ++i) {
    const double wp = problem.prior_values()[i] * p[i];
    total += wp;
    if (problem.labels()[i] == audit.part) in_part += wp;
  }
  audit.defined = total > kConditioningEps;
  if (audit.defined) {
    audit.ratio = in_part / total;
    audit.deviation = std::abs(audit.ratio - audit.part_prior);
    audit.identity_holds = audit.deviation <= kDegreeTol;
  }
  audit.hypothesis_holds = classical_useless(problem, 2 * audit.k, budget).verdict != Verdict::not_useless;
  return audit;
}

json compiled_to_json(const CompiledClassicalAlgorithm& c) {
  json terms = json::array();
  for (const auto& t : c.terms) {
    std::vector<int> subset;
    for (int i = 0; i < c.n; ++i) {
      if (t.subset >> i & 1u) subset.push_back(i + 1);
    }
    terms.push_back({{"S", subset}, {"prob", t.prob}, {"sign", t.sign}});
  }
  return {{"n", c.n}, {"k", c.k}, {"T", c.scale}, {"terms", terms}, {"degenerate", c.degenerate}};
}

CompiledClassicalAlgorithm compiled_from_json(const json& j) {
  CompiledClassicalAlgorithm c;
  c.n = j.at("n").get<int>();
  c.k = j.at("k").get<int>();
  c.scale = j.at("T").get<double>();
  c.degenerate = j.at("degenerate").get<bool>();
  for (const auto& t : j.at("terms")) {
    CompiledTerm term;
    for (int v : t.at("S").get<std::vector<int>>()) {
      if (v < 1 || v > c.n) throw std::invalid_argument("subset index outside 1..n");
      term.subset |= 1u << (v - 1);
    }
    term.prob = t.at("prob").get<double>();
    term.sign = t.at("sign").get<int>();
    c.terms.push_back(term);
  }
  return c;
}

}  // namespace uq
