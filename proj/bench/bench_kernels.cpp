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

// Serial reference versus OpenMP kernels. Arg(0) = serial, Arg(1) = parallel.

#include <benchmark/benchmark.h>

#include "uqlab/kernels.hpp"
#include "uqlab/useless.hpp"

namespace {

uq::Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? uq::Execution::serial : uq::Execution::parallel;
}

void BM_OutcomeTable(benchmark::State& state) {
  const auto problem = uq::make_parity(8);
  uq::RandomAlgorithmSpec spec;
  spec.queries = 3;
  const auto alg = uq::random_algorithm(8, problem.group(), spec, 1);
  for (auto _ : state) benchmark::DoNotOptimize(uq::outcome_table(alg, problem.functions(), mode(state)));
  state.SetItemsProcessed(state.iterations() * problem.size());
}
BENCHMARK(BM_OutcomeTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_WeightedPartStates(benchmark::State& state) {
  const auto problem = uq::make_shamir(5, 2);
  uq::RandomAlgorithmSpec spec;
  spec.queries = 2;
  const auto alg = uq::random_algorithm(problem.domain_size(), problem.group(), spec, 2);
  for (auto _ : state) benchmark::DoNotOptimize(uq::weighted_part_states(alg, problem, mode(state)));
  state.SetItemsProcessed(state.iterations() * problem.size());
}
BENCHMARK(BM_WeightedPartStates)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ClassicalUseless(benchmark::State& state) {
  const auto problem = uq::make_shamir(5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(uq::classical_useless(problem, 3, {}, mode(state)));
}
BENCHMARK(BM_ClassicalUseless)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Falsify(benchmark::State& state) {
  const auto problem = uq::make_image_parity();
  uq::FalsifyOptions opt;
  opt.trials = 20;
  for (auto _ : state) benchmark::DoNotOptimize(uq::quantum_useless_falsify(problem, opt, mode(state)));
}
BENCHMARK(BM_Falsify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
