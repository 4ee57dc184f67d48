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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "uqlab/gallery.hpp"
#include "uqlab/useless.hpp"

namespace uq {
namespace {

// A skewed problem: a random subset of Boolean tables on three points with
// random labels and random integer weights.
LearningProblem random_problem(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<OracleFunction> fs;
  std::vector<int> labels;
  std::vector<Rational> weights;
  Rational total = 0;
  for (int m = 0; m < 8; ++m) {
    if (rng() % 3 == 0 && fs.size() + (8 - m) > 3) continue;
    fs.push_back(OracleFunction{{m & 1, (m >> 1) & 1, (m >> 2) & 1}});
    labels.push_back(static_cast<int>(rng() % 3));
    weights.emplace_back(static_cast<long>(1 + rng() % 5));
    total += weights.back();
  }
  for (auto& w : weights) w /= total;
  return LearningProblem("random-" + std::to_string(seed), 3, FiniteAbelianGroup::cyclic(2), fs, labels, weights);
}

std::vector<LearningProblem> suite() {
  return {make_parity(2), make_parity(3), make_parity(4), make_image_parity(), make_shamir(3, 1),
          make_shamir(5, 1), make_shamir(5, 2)};
}

TEST(Classical, Examples) {
  EXPECT_EQ(classical_useless(make_parity(4), 3).verdict, Verdict::useless);
  EXPECT_EQ(classical_useless(make_image_parity(), 2).verdict, Verdict::useless);

  const auto r = classical_useless(make_parity(4), 4);
  ASSERT_EQ(r.verdict, Verdict::not_useless);
  ASSERT_TRUE(r.classical_witness);
  const Transcript all_four{{0, 0}, {1, 0}, {2, 0}, {3, 0}};
  EXPECT_EQ(r.classical_witness->transcript, all_four);
  EXPECT_EQ(r.classical_witness->posterior, 1);
  EXPECT_EQ(r.classical_witness->prior, Rational(1, 2));
}

TEST(Classical, WitnessReproducesViolation) {
  for (const auto& p : suite()) {
    for (int k = 1; k <= p.domain_size(); ++k) {
      const auto r = classical_useless(p, k);
      if (r.verdict != Verdict::not_useless) continue;
      ASSERT_TRUE(r.classical_witness);
      const auto& w = *r.classical_witness;
      ASSERT_EQ(static_cast<int>(w.transcript.size()), k);
      const auto post = posterior_classical(p, w.transcript);
      ASSERT_TRUE(post);
      EXPECT_EQ(post->at(w.part), w.posterior);
      EXPECT_EQ(p.part_prior(w.part), w.prior);
      EXPECT_NE(w.posterior, w.prior);
    }
  }
}

TEST(Classical, FastPathMatchesReference) {
  std::vector<LearningProblem> problems = suite();
  for (std::uint64_t seed = 0; seed < 12; ++seed) problems.push_back(random_problem(seed));
  for (const auto& p : problems) {
    for (int k = 0; k <= std::min(p.domain_size(), 3); ++k) {
      if (p.size() > 30 && k == 3) continue;  // keep the reference run short
      const auto fast = classical_useless(p, k);
      const auto ref = classical_useless_reference(p, k);
      ASSERT_EQ(fast.verdict, ref.verdict) << p.name() << " k=" << k;
      ASSERT_EQ(fast.classical_witness.has_value(), ref.classical_witness.has_value());
      if (fast.classical_witness) {
        EXPECT_EQ(fast.classical_witness->transcript, ref.classical_witness->transcript);
        EXPECT_EQ(fast.classical_witness->part, ref.classical_witness->part);
      }
      const auto serial = classical_useless(p, k, {}, Execution::serial);
      EXPECT_EQ(serial.verdict, fast.verdict);
      EXPECT_EQ(serial.max_deviation, fast.max_deviation);
      if (serial.classical_witness) EXPECT_EQ(serial.classical_witness->transcript, fast.classical_witness->transcript);
    }
  }
}

TEST(Classical, Monotone) {
  std::vector<LearningProblem> problems = suite();
  for (std::uint64_t seed = 100; seed < 110; ++seed) problems.push_back(random_problem(seed));
  for (const auto& p : problems) {
    bool seen_violation = false;
    for (int k = 0; k <= p.domain_size(); ++k) {
      const bool useful = classical_useless(p, k).verdict == Verdict::not_useless;
      if (seen_violation) EXPECT_TRUE(useful) << p.name() << " k=" << k;
      seen_violation = seen_violation || useful;
    }
  }
}

TEST(Classical, VacuousAndCapacity) {
  const auto z2 = FiniteAbelianGroup::cyclic(2);
  const LearningProblem one("one", 2, z2, {OracleFunction{{0, 1}}, OracleFunction{{1, 1}}}, {0, 0},
                            {Rational(1, 2), Rational(1, 2)});
  EXPECT_EQ(classical_useless(one, 2).verdict, Verdict::vacuous);
  Budget tiny;
  tiny.max_transcripts = 10;
  EXPECT_THROW(classical_useless(make_parity(4), 2, tiny), CapacityError);
}

TEST(Bounds, Examples) {
  EXPECT_EQ(max_useless_k(make_parity(4)), 3);
  EXPECT_EQ(max_useless_k(make_shamir(5, 2)), 2);
  EXPECT_EQ(max_useless_k(make_image_parity()), 2);
  const LearningProblem single("single", 3, FiniteAbelianGroup::cyclic(2), {OracleFunction{{0, 1, 1}}}, {0},
                               {Rational(1)});
  EXPECT_EQ(max_useless_k(single), 3);

  EXPECT_EQ(quantum_lower_bound(make_parity(4)), 2);
  EXPECT_EQ(quantum_lower_bound(make_shamir(5, 2)), 2);
  EXPECT_EQ(quantum_lower_bound(make_image_parity()), 2);
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(max_useless_k(make_parity(n)), n - 1);
}

TEST(Lemma, Examples) {
  const auto p4 = make_parity(4);
  RandomAlgorithmSpec spec;
  EXPECT_LT(lemma_check(p4, random_algorithm(4, p4.group(), spec, 3)), 1e-9);

  const auto z2 = FiniteAbelianGroup::cyclic(2);
  const LearningProblem one("one", 2, z2, {OracleFunction{{0, 1}}, OracleFunction{{1, 1}}}, {5, 5},
                            {Rational(1, 4), Rational(3, 4)});
  EXPECT_LT(lemma_check(one, random_algorithm(2, z2, spec, 3)), 1e-15);

  // Two classical queries decide PARITY on two points, so the hypothesis fails here.
  const auto p2 = make_parity(2);
  EXPECT_GT(lemma_check(p2, random_algorithm(2, p2.group(), spec, 7)), 1e-6);
  EXPECT_GT(lemma_check(p2, deutsch()), 0.1);
}

TEST(Lemma, HoldsWheneverHypothesisHolds) {
  for (const auto& p : suite()) {
    const int m = max_useless_k(p);
    for (int q = 1; 2 * q <= m; ++q) {
      RandomAlgorithmSpec spec;
      spec.queries = q;
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto alg = random_algorithm(p.domain_size(), p.group(), spec, mix_seed(seed, 31));
        ASSERT_LT(lemma_check(p, alg), 1e-9) << p.name() << " q=" << q << " seed=" << seed;
      }
    }
  }
}

TEST(Falsify, Examples) {
  FalsifyOptions opt;
  const auto p4 = quantum_useless_falsify(make_parity(4), opt);
  EXPECT_EQ(p4.verdict, Verdict::useless);
  EXPECT_LT(p4.max_deviation, 1e-8);
  EXPECT_EQ(p4.trials, 50);
  EXPECT_EQ(p4.evidence, "proved: 2q classical queries are useless");

  EXPECT_LT(quantum_useless_falsify(make_image_parity(), opt).max_deviation, 1e-8);

  opt.seeded = {deutsch()};
  const auto p2 = quantum_useless_falsify(make_parity(2), opt);
  EXPECT_EQ(p2.verdict, Verdict::not_useless);
  EXPECT_GE(p2.max_deviation, 0.4);
  ASSERT_TRUE(p2.quantum_witness);
  EXPECT_EQ(p2.quantum_witness->trial, 0);

  // The witness points at a real shift that can be recomputed from its parts.
  const auto post = posterior_quantum(deutsch(), make_parity(2), p2.quantum_witness->outcome);
  ASSERT_TRUE(post);
  EXPECT_NEAR(post->at(p2.quantum_witness->part), p2.quantum_witness->posterior, 1e-12);
}

TEST(Falsify, ScheduleIndependent) {
  FalsifyOptions opt;
  opt.trials = 12;
  for (const auto& p : {make_parity(2), make_image_parity()}) {
    const auto a = quantum_useless_falsify(p, opt, Execution::serial);
    const auto b = quantum_useless_falsify(p, opt, Execution::parallel);
    EXPECT_EQ(a.verdict, b.verdict);
    EXPECT_EQ(a.max_deviation, b.max_deviation);
    EXPECT_EQ(a.quantum_witness.has_value(), b.quantum_witness.has_value());
    if (a.quantum_witness) EXPECT_EQ(a.quantum_witness->trial, b.quantum_witness->trial);
  }
}

TEST(Falsify, QueriesWithinClassicalBoundAreUseless) {
  for (const auto& p : suite()) {
    const int m = max_useless_k(p);
    for (int q = 1; 2 * q <= m; ++q) {
      FalsifyOptions opt;
      opt.queries = q;
      opt.trials = 20;
      const auto r = quantum_useless_falsify(p, opt);
      EXPECT_LT(r.max_deviation, 1e-8) << p.name() << " q=" << q;
    }
  }
}

}  // namespace
}  // namespace uq
