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

#include <bit>
#include <random>

#include "oracles.hpp"
#include "uqlab/gallery.hpp"
#include "uqlab/kernels.hpp"
#include "uqlab/polycompile.hpp"

namespace uq {
namespace {

const FiniteAbelianGroup kZ2 = FiniteAbelianGroup::cyclic(2);

QuantumAlgorithm random_boolean(int n, int q, std::uint64_t seed) {
  RandomAlgorithmSpec spec;
  spec.queries = q;
  return random_algorithm(n, kZ2, spec, seed);
}

std::vector<int> lower_half(const QuantumAlgorithm& alg) {
  std::vector<int> out;
  for (int s = 0; s < alg.outcome_count() / 2; ++s) out.push_back(s);
  return out;
}

// p(f) straight from the simulator, one oracle at a time.
std::vector<double> simulated_cube(const QuantumAlgorithm& alg, const std::vector<int>& accept) {
  const int n = alg.x_dim();
  std::vector<double> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    const auto probs = run(alg, boolean_oracle(n, m)).outcome_probs;
    double p = 0.0;
    for (int s : accept) p += probs[s];
    out.push_back(p);
  }
  return out;
}

TEST(Interpolation, RoundTrip) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n = 0; n <= 6; ++n) {
    std::vector<double> values(1u << n);
    for (double& v : values) v = u(rng);
    const auto poly = interpolate_multilinear(n, values);
    const auto back = evaluate_on_cube(poly);
    for (std::size_t m = 0; m < values.size(); ++m) {
      EXPECT_NEAR(back[m], values[m], 1e-10);
      std::vector<int> point(n);
      for (int i = 0; i < n; ++i) point[i] = (m >> i) & 1;
      EXPECT_NEAR(poly.evaluate(point), values[m], 1e-10);
    }
  }
}

TEST(AcceptancePolynomial, Examples) {
  const std::vector<int> accept0{0};
  const auto always = acceptance_polynomial(constant_guess(3, kZ2, 0), accept0);
  EXPECT_NEAR(always.coefficient(0), 1.0, 1e-12);
  for (std::uint32_t s = 1; s < 8; ++s) EXPECT_NEAR(always.coefficient(s), 0.0, 1e-12);

  // Simulated values on (f1,f2) = 00,10,01,11 are 1,0,0,1; solving the four
  // equations by hand gives 1 - f1 - f2 + 2 f1 f2.
  const std::vector<int> even{kOutcomeEven};
  const auto cube = simulated_cube(deutsch(), even);
  EXPECT_NEAR(cube[0], 1.0, 1e-12);
  EXPECT_NEAR(cube[1], 0.0, 1e-12);
  EXPECT_NEAR(cube[2], 0.0, 1e-12);
  EXPECT_NEAR(cube[3], 1.0, 1e-12);
  const auto d = acceptance_polynomial(deutsch(), even);
  EXPECT_NEAR(d.coefficient(0b00), 1.0, 1e-12);
  EXPECT_NEAR(d.coefficient(0b01), -1.0, 1e-12);
  EXPECT_NEAR(d.coefficient(0b10), -1.0, 1e-12);
  EXPECT_NEAR(d.coefficient(0b11), 2.0, 1e-12);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto alg = random_boolean(3, 1, seed);
    const auto p = acceptance_polynomial(alg, lower_half(alg));
    EXPECT_LT(std::abs(p.coefficient(0b111)), 1e-8);
    const auto direct = simulated_cube(alg, lower_half(alg));
    const auto back = evaluate_on_cube(p);
    for (std::size_t m = 0; m < direct.size(); ++m) EXPECT_NEAR(back[m], direct[m], 1e-10);
  }
}

TEST(AcceptancePolynomial, RejectsNonBoolean) {
  RandomAlgorithmSpec spec;
  const auto alg = random_algorithm(2, FiniteAbelianGroup::cyclic(3), spec, 1);
  const std::vector<int> accept{0};
  EXPECT_THROW(acceptance_polynomial(alg, accept), std::invalid_argument);
  const std::vector<int> bogus{7};
  EXPECT_THROW(acceptance_polynomial(deutsch(), bogus), std::invalid_argument);
}

TEST(Fourier, Examples) {
  const MultilinearPolynomial one(2, {1.0, 0.0, 0.0, 0.0}, Basis::zero_one);
  const auto q1 = to_fourier(one);
  EXPECT_NEAR(q1.coefficient(0), 1.0, 1e-15);
  for (std::uint32_t s = 1; s < 4; ++s) EXPECT_NEAR(q1.coefficient(s), 0.0, 1e-15);

  const MultilinearPolynomial d(2, {1.0, -1.0, -1.0, 2.0}, Basis::zero_one);
  for (const auto& q : {to_fourier(d), to_fourier_by_substitution(d)}) {
    EXPECT_NEAR(q.coefficient(0b11), 1.0, 1e-15);
    EXPECT_NEAR(q.coefficient(0b00), 0.0, 1e-15);
    EXPECT_NEAR(q.coefficient(0b01), 0.0, 1e-15);
    EXPECT_NEAR(q.coefficient(0b10), 0.0, 1e-15);
  }

  const MultilinearPolynomial half(3, {0.5, 0, 0, 0, 0, 0, 0, 0}, Basis::zero_one);
  const auto zero = to_fourier(half);
  for (double c : zero.coefficients()) EXPECT_NEAR(c, 0.0, 1e-15);
}

TEST(Fourier, RoutesAgreeInvertAndSatisfyParseval) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 1; n <= 6; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<double> cube(1u << n);
      for (double& v : cube) v = u(rng);
      const auto p = interpolate_multilinear(n, cube);
      const auto fast = to_fourier(p);
      const auto subst = to_fourier_by_substitution(p);
      const auto naive = testing::naive_fourier(n, cube);
      double lhs = 0.0, rhs = 0.0;
      for (std::uint32_t s = 0; s < cube.size(); ++s) {
        EXPECT_NEAR(fast.coefficient(s), subst.coefficient(s), 1e-10);
        EXPECT_NEAR(fast.coefficient(s), naive[s], 1e-10);
        lhs += fast.coefficient(s) * fast.coefficient(s);
        rhs += (2 * cube[s] - 1) * (2 * cube[s] - 1);
      }
      EXPECT_NEAR(lhs, rhs / cube.size(), 1e-9);
      const auto back = from_fourier(fast);
      for (std::uint32_t s = 0; s < cube.size(); ++s) EXPECT_NEAR(back.coefficient(s), p.coefficient(s), 1e-10);
      // q(w) evaluated in the +-1 basis matches 2 p(f) - 1.
      for (std::uint32_t m = 0; m < cube.size(); ++m) {
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = (m >> i) & 1 ? 1 : -1;
        EXPECT_NEAR(fast.evaluate(w), 2 * cube[m] - 1, 1e-10);
      }
    }
  }
}

TEST(Fourier, DegreeBoundForSimulatedAlgorithms) {
  for (int n : {3, 4, 5}) {
    for (int q : {1, 2}) {
      if (2 * q >= n) continue;
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto alg = random_boolean(n, q, mix_seed(seed, n * 10 + q));
        const auto fourier = to_fourier(acceptance_polynomial(alg, lower_half(alg)));
        for (std::uint32_t s = 0; s < (1u << n); ++s) {
          if (std::popcount(s) > 2 * q) ASSERT_LT(std::abs(fourier.coefficient(s)), 1e-8);
        }
      }
    }
  }
}

TEST(Compile, Examples) {
  const std::vector<int> even{kOutcomeEven};
  const auto d = compile_classical(deutsch(), even);
  EXPECT_FALSE(d.degenerate);
  EXPECT_NEAR(d.scale, 1.0, 1e-12);
  ASSERT_EQ(d.terms.size(), 1u);
  EXPECT_EQ(d.terms[0].subset, 0b11u);
  EXPECT_NEAR(d.terms[0].prob, 1.0, 1e-12);
  EXPECT_EQ(d.terms[0].sign, 1);
  EXPECT_NEAR(classical_output_prob(d, OracleFunction{{0, 0}}), 1.0, 1e-12);
  EXPECT_NEAR(classical_output_prob(d, OracleFunction{{0, 1}}), 0.0, 1e-12);

  const std::vector<int> accept0{0};
  const auto always = compile_classical(constant_guess(2, kZ2, 0), accept0);
  EXPECT_NEAR(always.scale, 1.0, 1e-12);
  ASSERT_EQ(always.terms.size(), 1u);
  EXPECT_EQ(always.terms[0].subset, 0u);
  EXPECT_EQ(always.terms[0].sign, 1);

  // A fair coin that ignores the oracle: measure |0> in the Hadamard basis.
  const int dim = 4;
  ComplexMatrix plus = ComplexMatrix::Zero(dim, dim);
  plus.topLeftCorner(2, 2).setConstant(0.5);
  ComplexMatrix minus = ComplexMatrix::Identity(dim, dim) - plus;
  const QuantumAlgorithm coin(2, kZ2, 1, DensityMatrix::pure(ComplexVector::Unit(dim, 0)), {}, Povm({plus, minus}));
  const auto fair = compile_classical(coin, accept0);
  EXPECT_TRUE(fair.degenerate);
  EXPECT_TRUE(fair.terms.empty());
  EXPECT_EQ(classical_output_prob(fair, OracleFunction{{1, 0}}), 0.5);
  std::mt19937_64 rng(1);
  EXPECT_EQ(sample_compiled(fair, [](int) { return 0; }, rng).queries, 0);
}

TEST(Compile, BiasIdentityForRandomAlgorithms) {
  for (int n : {2, 3}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto alg = random_boolean(n, 1, mix_seed(seed, 500 + n));
      const auto accept = lower_half(alg);
      const auto c = compile_classical(alg, accept);
      double total = 0.0;
      for (const auto& t : c.terms) {
        EXPECT_LE(std::popcount(t.subset), 2);
        EXPECT_GE(t.prob, 0.0);
        total += t.prob;
      }
      if (!c.degenerate) EXPECT_NEAR(total, 1.0, 1e-10);
      const auto cube = simulated_cube(alg, accept);
      for (std::uint32_t m = 0; m < cube.size(); ++m) {
        const double predicted = c.degenerate ? 0.5 : (cube[m] - 0.5) / c.scale + 0.5;
        ASSERT_NEAR(classical_output_prob(c, boolean_oracle(n, m)), predicted, 1e-9);
      }
      for (const auto& row : bias_certificate(alg, accept, c)) EXPECT_LT(std::abs(row.residual), 1e-9);
    }
  }
}

TEST(Compile, SamplingMatchesExactProbability) {
  const auto alg = random_boolean(3, 1, 77);
  const auto c = compile_classical(alg, lower_half(alg));
  ASSERT_FALSE(c.degenerate);
  std::mt19937_64 rng(2024);
  for (std::uint32_t m : {0u, 5u, 7u}) {
    const auto f = boolean_oracle(3, m);
    const int samples = 20000;
    int zeros = 0;
    for (int i = 0; i < samples; ++i) {
      const auto s = sample_compiled(c, [&](int x) { return f(x); }, rng);
      EXPECT_LE(s.queries, 2);
      zeros += s.output == 0;
    }
    EXPECT_NEAR(static_cast<double>(zeros) / samples, classical_output_prob(c, f), 0.02);
  }
}

TEST(Compile, RejectsHighDegreeInput) {
  const MultilinearPolynomial q(3, {0, 0, 0, 0, 0, 0, 0, 0.5}, Basis::plus_minus_one);
  EXPECT_THROW(compile_fourier(q, 1), std::logic_error);
  const MultilinearPolynomial dust(3, {0.5, 0, 0, 0, 0, 0, 0, 1e-10}, Basis::plus_minus_one);
  const auto c = compile_fourier(dust, 1);
  ASSERT_EQ(c.terms.size(), 1u);
  EXPECT_EQ(c.terms[0].subset, 0u);
}

TEST(Compile, JsonRoundTrip) {
  const auto alg = random_boolean(3, 1, 3);
  const auto c = compile_classical(alg, lower_half(alg));
  const json j = compiled_to_json(c);
  for (const char* key : {"n", "k", "T", "terms", "degenerate"}) EXPECT_TRUE(j.contains(key));
  const auto back = compiled_from_json(j);
  EXPECT_EQ(back.n, c.n);
  EXPECT_EQ(back.k, c.k);
  EXPECT_EQ(back.scale, c.scale);
  ASSERT_EQ(back.terms.size(), c.terms.size());
  for (std::size_t i = 0; i < c.terms.size(); ++i) {
    EXPECT_EQ(back.terms[i].subset, c.terms[i].subset);
    EXPECT_EQ(back.terms[i].prob, c.terms[i].prob);
    EXPECT_EQ(back.terms[i].sign, c.terms[i].sign);
  }
  const json deutsch_json = compiled_to_json(compile_classical(deutsch(), std::vector<int>{kOutcomeEven}));
  EXPECT_EQ(deutsch_json["terms"][0]["S"], json({1, 2}));
}

TEST(Audit, Examples) {
  const auto p4 = make_parity(4);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto alg = random_boolean(4, 1, seed);
    const auto a = ratio_audit(p4, alg, lower_half(alg));
    EXPECT_TRUE(a.hypothesis_holds);
    EXPECT_TRUE(a.defined);
    EXPECT_NEAR(a.ratio, 0.5, 1e-8);
    EXPECT_TRUE(a.consistent());
  }

  const auto d = ratio_audit(make_parity(2), deutsch(), std::vector<int>{kOutcomeEven});
  EXPECT_FALSE(d.hypothesis_holds);
  EXPECT_NEAR(d.ratio, 1.0, 1e-12);
  EXPECT_FALSE(d.identity_holds);

  const auto constant = ratio_audit(p4, constant_guess(4, kZ2, 0), std::vector<int>{0});
  EXPECT_EQ(constant.ratio, constant.part_prior);
  EXPECT_EQ(constant.part_prior, 0.5);

  EXPECT_THROW(ratio_audit(make_image_parity(), constant_guess(3, FiniteAbelianGroup::cyclic(3), 0),
                                std::vector<int>{0}),
               std::invalid_argument);
}

TEST(Audit, SkewedPriorConstantAcceptance) {
  const LearningProblem skew("skew", 2, kZ2,
                             {OracleFunction{{0, 0}}, OracleFunction{{0, 1}}, OracleFunction{{1, 1}}}, {0, 1, 0},
                             {Rational(1, 6), Rational(1, 2), Rational(1, 3)});
  const auto a = ratio_audit(skew, constant_guess(2, kZ2, 0), std::vector<int>{0});
  EXPECT_NEAR(a.ratio, 0.5, 1e-15);
  EXPECT_NEAR(a.part_prior, 0.5, 1e-15);
}

}  // namespace
}  // namespace uq
