// Copyright 2026 The submax Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Microbenchmarks for the hot paths: multilinear evaluation, gradient
// estimation, the linear oracle, and a whole solver run. Sizes are chosen so
// one repetition stays in the microsecond-to-millisecond range.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "submax/generator.hpp"
#include "submax/instance.hpp"
#include "submax/multilinear.hpp"
#include "submax/oracles.hpp"
#include "submax/polytope.hpp"
#include "submax/rng.hpp"
#include "submax/solver.hpp"
#include "submax/types.hpp"

namespace {

using namespace submax;

InstanceSpec benchmark_instance(int n, ObjectiveFamily objective,
                                ConstraintFamily constraint) {
  GeneratorOptions options;
  options.n = n;
  options.objective = objective;
  options.constraint = constraint;
  options.seed = 17;
  return generate_instance(options);
}

FractionalPoint interior_point(int n) {
  Rng rng(3);
  std::vector<double> coords(static_cast<size_t>(n));
  for (double& c : coords) c = rng.uniform(0.1, 0.9);
  return FractionalPoint(std::move(coords));
}

void BM_evaluate_exact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const InstanceSpec instance = benchmark_instance(
      n, ObjectiveFamily::cut, ConstraintFamily::cardinality);
  const SetFunctionOracle f(instance.objective, n);
  const FractionalPoint x = interior_point(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_exact(f, x));
  }
}
BENCHMARK(BM_evaluate_exact)->Arg(8)->Arg(12)->Arg(16);

void BM_gradient_exact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const InstanceSpec instance = benchmark_instance(
      n, ObjectiveFamily::cut, ConstraintFamily::cardinality);
  const SetFunctionOracle f(instance.objective, n);
  const FractionalPoint x = interior_point(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gradient_exact(f, x));
  }
}
BENCHMARK(BM_gradient_exact)->Arg(8)->Arg(12);

void BM_gradient_sampled(benchmark::State& state) {
  const int n = 12;
  const std::int64_t d = state.range(0);
  const InstanceSpec instance = benchmark_instance(
      n, ObjectiveFamily::coverage, ConstraintFamily::cardinality);
  const SetFunctionOracle f(instance.objective, n);
  const FractionalPoint x = interior_point(n);
  std::uint64_t timestep = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gradient_sampled(f, x, d, SampleStream{1, timestep++}));
  }
}
BENCHMARK(BM_gradient_sampled)->Arg(64)->Arg(512)->Arg(4096);

void BM_linear_max(benchmark::State& state) {
  const int n = 32;
  const InstanceSpec instance = benchmark_instance(
      n, ObjectiveFamily::coverage, ConstraintFamily::knapsack);
  const PolytopeOracle polytope(instance.constraint, n);
  Rng rng(5);
  std::vector<double> weights(static_cast<size_t>(n));
  for (double& w : weights) w = rng.uniform(-2.0, 2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(polytope.linear_max(weights));
  }
}
BENCHMARK(BM_linear_max);

void BM_solve_exact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const InstanceSpec instance = benchmark_instance(
      n, ObjectiveFamily::cut, ConstraintFamily::partition);
  SolverConfig config;
  config.eps = 0.5;
  config.gradient_mode = GradientMode::exact;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(instance, config));
  }
}
BENCHMARK(BM_solve_exact)->Arg(6)->Arg(8);

void BM_solve_sampled(benchmark::State& state) {
  const int n = 12;
  const InstanceSpec instance = benchmark_instance(
      n, ObjectiveFamily::facility, ConstraintFamily::knapsack);
  SolverConfig config;
  config.eps = 0.5;
  config.gradient_mode = GradientMode::sampled;
  config.d_override = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(instance, config));
  }
}
BENCHMARK(BM_solve_sampled)->Arg(16)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
