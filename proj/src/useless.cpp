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

#include "uqlab/useless.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <stdexcept>

namespace uq {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::useless:
      return "useless";
    case Verdict::not_useless:
      return "not useless";
    case Verdict::vacuous:
      return "vacuous";
  }
  return "?";
}

namespace {

std::uint64_t transcript_count(const LearningProblem& problem, int k) {
  const auto per_query = static_cast<std::uint64_t>(problem.domain_size()) * problem.group().order();
  return checked_pow(per_query, static_cast<unsigned>(k));
}

void check_budget(const LearningProblem& problem, int k, const Budget& budget) {
  if (k < 0) throw std::invalid_argument("query count must be non-negative");
  if (static_cast<std::uint64_t>(problem.size()) > budget.max_functions) {
    throw CapacityError("class size " + std::to_string(problem.size()) + " exceeds the ceiling " +
                        std::to_string(budget.max_functions));
  }
  const auto count = transcript_count(problem, k);
  if (count > budget.max_transcripts) {
    throw CapacityError("(|X||Y|)^k = " +
                        (count == std::numeric_limits<std::uint64_t>::max() ? std::string("overflow")
                                                                            : std::to_string(count)) +
                        " transcripts at k=" + std::to_string(k) + " exceeds the ceiling " +
                        std::to_string(budget.max_transcripts));
  }
}

// Digits of `index` in base `radix`, most significant first.
std::vector<int> digits(std::uint64_t index, int radix, int k) {
  std::vector<int> d(k);
  for (int i = k - 1; i >= 0; --i) {
    d[i] = static_cast<int>(index % radix);
    index /= radix;
  }
  return d;
}

UselessnessReport base_report(const LearningProblem& problem, int k) {
  UselessnessReport r;
  r.problem_id = problem.name();
  r.mode = "classical";
  r.k = k;
  r.transcripts = transcript_count(problem, k);
  r.evidence = "exact rational enumeration";
  return r;
}

// First violating transcript among those sharing the query points `xs`.
std::optional<ClassicalWitness> scan_query_tuple(const LearningProblem& problem, const std::vector<int>& xs,
                                                 const std::vector<Rational>& part_priors) {
  const int parts = static_cast<int>(part_priors.size());
  const int y_order = problem.group().order();
  // Keyed by the y-tuple read as a base-|Y| number, so iteration is lexicographic.
  std::map<std::uint64_t, std::vector<Rational>> mass;
  const auto& fns = problem.functions();
  for (int i = 0; i < problem.size(); ++i) {
    const auto& w = problem.prior()[i];
    if (sgn(w) == 0) continue;
    std::uint64_t key = 0;
    for (int x : xs) key = key * y_order + fns[i](x);
    auto [it, inserted] = mass.try_emplace(key);
    if (inserted) it->second.assign(parts + 1, Rational(0));
    it->second[problem.part_index(problem.labels()[i])] += w;
    it->second[parts] += w;
  }
  for (const auto& [key, m] : mass) {
    const Rational& total = m[parts];
    for (int j = 0; j < parts; ++j) {
      if (m[j] != part_priors[j] * total) {
        ClassicalWitness w;
        const auto ys = digits(key, y_order, static_cast<int>(xs.size()));
        for (std::size_t q = 0; q < xs.size(); ++q) w.transcript.emplace_back(xs[q], ys[q]);
        w.part = problem.parts()[j];
        w.posterior = m[j] / total;
        w.prior = part_priors[j];
        return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

UselessnessReport classical_useless(const LearningProblem& problem, int k, const Budget& budget, Execution exec) {
  check_budget(problem, k, budget);
  UselessnessReport report = base_report(problem, k);
  if (problem.parts().size() == 1) {
    report.verdict = Verdict::vacuous;
    report.evidence = "single part: every defined posterior equals the prior";
    return report;
  }

  std::vector<Rational> part_priors;
  for (int j : problem.parts()) part_priors.push_back(problem.part_prior(j));

  const std::uint64_t tuples = checked_pow(static_cast<std::uint64_t>(problem.domain_size()), k);
  // Smallest query tuple with a violation. Tuples above the current best are
  // skipped; every tuple below it is always scanned, so the result does not
  // depend on scheduling.
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  std::optional<ClassicalWitness> witness;

  auto visit = [&](std::uint64_t t) {
    if (t > best.load(std::memory_order_relaxed)) return;
    auto w = scan_query_tuple(problem, digits(t, problem.domain_size(), k), part_priors);
    if (!w) return;
#pragma omp critical(uq_classical_witness)
    {
      if (t < best.load()) {
        best.store(t);
        witness = std::move(w);
      }
    }
  };

  const auto n = static_cast<std::int64_t>(tuples);
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t t = 0; t < n; ++t) visit(static_cast<std::uint64_t>(t));
  } else {
    for (std::int64_t t = 0; t < n; ++t) visit(static_cast<std::uint64_t>(t));
  }

  if (witness) {
    report.verdict = Verdict::not_useless;
    report.classical_witness = std::move(witness);
    const double dev = Rational(report.classical_witness->posterior - report.classical_witness->prior).get_d();
    report.max_deviation = std::abs(dev);
  } else {
    report.verdict = Verdict::useless;
  }
  return report;
}

UselessnessReport classical_useless_reference(const LearningProblem& problem, int k, const Budget& budget) {
  check_budget(problem, k, budget);
  UselessnessReport report = base_report(problem, k);
  report.evidence = "brute-force posterior per transcript";
  if (problem.parts().size() == 1) {
    report.verdict = Verdict::vacuous;
    return report;
  }
  const auto prior = problem.prior_distribution();
  const int nx = problem.domain_size();
  const int ny = problem.group().order();
  const std::uint64_t x_tuples = checked_pow(nx, k);
  const std::uint64_t y_tuples = checked_pow(ny, k);
  for (std::uint64_t tx = 0; tx < x_tuples; ++tx) {
    const auto xs = digits(tx, nx, k);
    for (std::uint64_t ty = 0; ty < y_tuples; ++ty) {
      const auto ys = digits(ty, ny, k);
      Transcript t;
      for (int q = 0; q < k; ++q) t.emplace_back(xs[q], ys[q]);
      const auto post = posterior_classical(problem, t);
      if (!post) continue;
      for (const auto& [j, v] : *post) {
        if (v != prior.at(j)) {
          report.verdict = Verdict::not_useless;
          report.classical_witness = ClassicalWitness{t, j, v, prior.at(j)};
          report.max_deviation = std::abs(Rational(v - prior.at(j)).get_d());
          return report;
        }
      }
    }
  }
  report.verdict = Verdict::useless;
  return report;
}

int max_useless_k(const LearningProblem& problem, const Budget& budget) {
  // A useless k implies a useless k-1 (repeat one query point), so the scan
  // stops at the first failure. Beyond |X| queries every point is known.
  for (int k = 1; k <= problem.domain_size(); ++k) {
    if (classical_useless(problem, k, budget).verdict == Verdict::not_useless) return k - 1;
  }
  return problem.domain_size();
}

int quantum_lower_bound(const LearningProblem& problem, const Budget& budget) {
  return max_useless_k(problem, budget) / 2 + 1;
}

double lemma_check(const LearningProblem& problem, const QuantumAlgorithm& alg, Execution exec) {
  const auto per_part = weighted_part_states(alg, problem, exec);
  ComplexMatrix mixture = ComplexMatrix::Zero(alg.dim(), alg.dim());
  for (const auto& m : per_part) mixture += m;
  double worst = 0.0;
  for (std::size_t j = 0; j < per_part.size(); ++j) {
    const double weight = problem.part_prior(problem.parts()[j]).get_d();
    worst = std::max(worst, max_abs_entry(per_part[j] - weight * mixture));
  }
  return worst;
}

UselessnessReport quantum_useless_falsify(const LearningProblem& problem, const FalsifyOptions& options,
                                          Execution exec) {
  if (options.queries < 0) throw std::invalid_argument("query count must be non-negative");
  if (options.trials < 1) throw std::invalid_argument("need at least one trial");
  if (static_cast<int>(options.seeded.size()) > options.trials) {
    throw std::invalid_argument("more seeded algorithms than trials");
  }
  for (const auto& alg : options.seeded) {
    require_compatible(alg, problem);
    if (alg.queries() != options.queries) throw std::invalid_argument("seeded algorithm has the wrong query count");
  }
  const int d = problem.domain_size() * problem.group().order();
  if (d > options.budget.max_dim) {
    throw CapacityError("Hilbert dimension " + std::to_string(d) + " exceeds the ceiling " +
                        std::to_string(options.budget.max_dim));
  }
  if (static_cast<std::uint64_t>(problem.size()) > options.budget.max_functions) {
    throw CapacityError("class size exceeds the ceiling");
  }

  RandomAlgorithmSpec spec;
  spec.queries = options.queries;
  std::vector<PosteriorDeviation> results(options.trials);
  auto trial = [&](int t) {
    const QuantumAlgorithm alg = t < static_cast<int>(options.seeded.size())
                                     ? options.seeded[t]
                                     : random_algorithm(problem.domain_size(), problem.group(), spec,
                                                        mix_seed(options.seed, static_cast<std::uint64_t>(t)));
    results[t] = posterior_deviation(joint_distribution(alg, problem, Execution::serial), problem);
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int t = 0; t < options.trials; ++t) trial(t);
  } else {
    for (int t = 0; t < options.trials; ++t) trial(t);
  }

  UselessnessReport report;
  report.problem_id = problem.name();
  report.mode = "quantum";
  report.k = options.queries;
  report.trials = options.trials;
  int worst = 0;
  for (int t = 1; t < options.trials; ++t) {
    if (results[t].max_deviation > results[worst].max_deviation) worst = t;
  }
  report.max_deviation = results[worst].max_deviation;
  if (report.max_deviation > options.tolerance) {
    report.verdict = Verdict::not_useless;
    const auto& r = results[worst];
    report.quantum_witness = QuantumWitness{worst, r.outcome, r.part, r.posterior, r.prior};
    report.evidence = "witness algorithm shifts the posterior";
    return report;
  }
  report.verdict = Verdict::useless;
  std::string backing = "sampled algorithms only";
  try {
    const auto cl = classical_useless(problem, 2 * options.queries, options.budget, exec);
    if (cl.verdict != Verdict::not_useless) backing = "proved: 2q classical queries are useless";
  } catch (const CapacityError&) {
    backing = "sampled algorithms only (2q classical check exceeds budget)";
  }
  report.evidence = backing;
  return report;
}

}  // namespace uq
