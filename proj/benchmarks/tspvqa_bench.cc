// Copyright 2026 The tspvqa Authors
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
//
// Micro-benchmarks for the hot paths: trial-state construction, correlation
// measurement, cost evaluation, one optimizer step, and the classical
// oracles.

#include <cmath>
#include <cstdint>
#include <vector>

#include "benchmark/benchmark.h"
#include "tspvqa/classical.h"
#include "tspvqa/cost.h"
#include "tspvqa/four_city.h"
#include "tspvqa/measurement.h"
#include "tspvqa/optimizer.h"
#include "tspvqa/params.h"
#include "tspvqa/rng.h"
#include "tspvqa/trial_state.h"

namespace tspvqa {
namespace {

VariationalParams sample_params(int n_cities, uint64_t seed) {
  RandomStream rng(seed);
  VariationalParams params;
  params.n_cities = n_cities;
  params.angles.resize(param_count_for(n_cities));
  for (double &a : params.angles) a = rng.uniform(0.0, 3.14159);
  return params;
}

DistanceMatrix sample_instance(int n, uint64_t seed) {
  RandomStream rng(seed);
  RealMatrix entries = RealMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) entries(i, j) = 1.0 + std::floor(rng.uniform(0.0, 20.0));
  return make_distance_matrix(n, entries);
}

void BM_BuildTrialState(benchmark::State &state) {
  const int n_cities = static_cast<int>(state.range(0));
  const VariationalParams params = sample_params(n_cities, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_trial_state(n_cities, params));
  }
}
BENCHMARK(BM_BuildTrialState)->Arg(4)->Arg(8)->Arg(16);

void BM_CorrelationExact(benchmark::State &state) {
  const int n_cities = static_cast<int>(state.range(0));
  const Statevector trial =
      build_trial_state(n_cities, sample_params(n_cities, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(correlation_exact(trial));
  }
}
BENCHMARK(BM_CorrelationExact)->Arg(4)->Arg(8)->Arg(16);

void BM_CorrelationSampled2000(benchmark::State &state) {
  const Statevector trial = build_trial_state(4, sample_params(4, 3));
  uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(correlation_sampled(trial, 2000, ++seed));
  }
}
BENCHMARK(BM_CorrelationSampled2000);

void BM_FourCityClosedForm(benchmark::State &state) {
  const FourCityParams params = from_variational(sample_params(4, 4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(four_city_correlation(params));
  }
}
BENCHMARK(BM_FourCityClosedForm);

void BM_ProjectorEmulationExact(benchmark::State &state) {
  const FourCityParams params = from_variational(sample_params(4, 5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(emulate_projectors(params));
  }
}
BENCHMARK(BM_ProjectorEmulationExact);

void BM_ProjectorEmulationSampled2000(benchmark::State &state) {
  const FourCityParams params = from_variational(sample_params(4, 6));
  uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(emulate_projectors(params, 2000, ++seed));
  }
}
BENCHMARK(BM_ProjectorEmulationSampled2000);

void BM_TotalCostFull(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  const PaddedProblem padded = pad_problem(sample_instance(n, 7));
  CorrelationMatrix x;
  x.dim = padded.dim;
  x.entries = RealMatrix::Constant(padded.dim, padded.dim, 1.0 / padded.dim);
  CostConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(total_cost(padded, x, config));
  }
}
BENCHMARK(BM_TotalCostFull)->Arg(4)->Arg(8)->Arg(12);

void BM_TotalCostLazy(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  const PaddedProblem padded = pad_problem(sample_instance(n, 8));
  CorrelationMatrix x;
  x.dim = padded.dim;
  x.entries = RealMatrix::Constant(padded.dim, padded.dim, 1.0 / padded.dim);
  CostConfig config;
  config.subtour_mode = SubtourMode::kLazy;
  config.active_subsets = {0b0011, 0b1100};
  for (auto _ : state) {
    benchmark::DoNotOptimize(total_cost(padded, x, config));
  }
}
BENCHMARK(BM_TotalCostLazy)->Arg(4)->Arg(8)->Arg(12);

void BM_GradientStepExact(benchmark::State &state) {
  const DistanceMatrix instance = sample_instance(4, 9);
  const PaddedProblem padded = pad_problem(instance);
  CostConfig cost_config;
  const auto cost = [&](const std::vector<double> &angles) {
    VariationalParams params;
    params.n_cities = 4;
    params.angles = angles;
    return total_cost(padded, correlation_exact(build_trial_state(4, params)),
                      cost_config);
  };
  const std::vector<double> angles = sample_params(4, 10).angles;
  for (auto _ : state) {
    benchmark::DoNotOptimize(finite_diff_gradient(cost, angles, 0.05));
  }
}
BENCHMARK(BM_GradientStepExact);

void BM_BruteForce(benchmark::State &state) {
  const DistanceMatrix instance =
      sample_instance(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_tsp(instance));
  }
}
BENCHMARK(BM_BruteForce)->Arg(7)->Arg(9);

void BM_HeldKarp(benchmark::State &state) {
  const DistanceMatrix instance =
      sample_instance(static_cast<int>(state.range(0)), 12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(held_karp(instance));
  }
}
BENCHMARK(BM_HeldKarp)->Arg(7)->Arg(9)->Arg(12);

void BM_BirkhoffDecompose(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  RandomStream rng(13);
  RealMatrix x = RealMatrix::Zero(n, n);
  std::vector<int> sigma(n);
  for (int t = 0; t < 6; ++t) {
    for (int i = 0; i < n; ++i) sigma[i] = i;
    for (int i = n - 1; i > 0; --i) {
      const int j = static_cast<int>(rng.uniform(0.0, i + 1.0));
      std::swap(sigma[i], sigma[j]);
    }
    for (int i = 0; i < n; ++i) x(i, sigma[i]) += 1.0 / 6.0;
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(birkhoff_decompose(x));
  }
}
BENCHMARK(BM_BirkhoffDecompose)->Arg(4)->Arg(8);

}  // namespace
}  // namespace tspvqa
