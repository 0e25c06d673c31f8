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

#include "tspvqa/optimizer.h"

#include <algorithm>
#include <cmath>
#include <future>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "tspvqa/classical.h"
#include "tspvqa/four_city.h"
#include "tspvqa/rng.h"
#include "tspvqa/trial_state.h"

namespace tspvqa {

namespace {

constexpr double kPi = 3.141592653589793;

// Seed-stream tags, partitioned by purpose so the angle draws, the
// per-iteration measurement seeds, and the final measurements never collide.
constexpr uint64_t kInitStream = uint64_t{1} << 32;
constexpr uint64_t kIterStream = uint64_t{2} << 32;
constexpr uint64_t kFinalStream = uint64_t{3} << 32;

void validate_config(const OptimizerConfig &config) {
  std::ostringstream msg;
  if (!(config.learning_rate > 0.0) || !std::isfinite(config.learning_rate)) {
    msg << "optimize: learning_rate must be positive and finite, got "
        << config.learning_rate << ".";
    throw std::invalid_argument(msg.str());
  }
  if (!(config.fd_step > 0.0) || !std::isfinite(config.fd_step)) {
    msg << "optimize: fd_step must be positive and finite, got "
        << config.fd_step << ".";
    throw std::invalid_argument(msg.str());
  }
  if (config.max_iters < 0) {
    msg << "optimize: max_iters must be >= 0, got " << config.max_iters << ".";
    throw std::invalid_argument(msg.str());
  }
  if (config.cost_tol &&
      (!(*config.cost_tol > 0.0) || !std::isfinite(*config.cost_tol))) {
    msg << "optimize: cost_tol must be positive and finite, got "
        << *config.cost_tol << ".";
    throw std::invalid_argument(msg.str());
  }
  if (config.patience < 1) {
    msg << "optimize: patience must be >= 1, got " << config.patience << ".";
    throw std::invalid_argument(msg.str());
  }
  if (config.n_starts < 1) {
    msg << "optimize: n_starts must be >= 1, got " << config.n_starts << ".";
    throw std::invalid_argument(msg.str());
  }
  if (config.max_lazy_rounds < 1) {
    msg << "optimize: max_lazy_rounds must be >= 1, got "
        << config.max_lazy_rounds << ".";
    throw std::invalid_argument(msg.str());
  }
}

CorrelationMatrix measure(const VariationalParams &params, Protocol protocol,
                          uint64_t shots, uint64_t seed) {
  if (protocol == Protocol::kProjectors) {
    const FourCityParams fc = from_variational(params);
    if (shots == 0) return emulate_projectors(fc);
    return emulate_projectors(fc, shots, seed).first;
  }
  const Statevector state = build_trial_state(params.n_cities, params);
  if (shots == 0) return correlation_exact(state);
  return correlation_sampled(state, shots, seed).first;
}

double l2_norm(const std::vector<double> &v) {
  double sum = 0.0;
  for (double x : v) sum += x * x;
  return std::sqrt(sum);
}

RunTrace run_one_start(const DistanceMatrix &problem,
                       const PaddedProblem &padded,
                       const OptimizerConfig &config, double cost_tol,
                       int start_index) {
  const int n = problem.n_cities;
  const uint64_t base = derive_seed(config.seed, start_index);
  CostConfig cost_cfg{config.a_sub, config.subtour_mode, {}};

  RunTrace trace;
  trace.start_seed = base;
  trace.start_index = start_index;

  VariationalParams params;
  std::optional<CorrelationMatrix> last_x;
  bool converged = false;
  int next_index = 0;
  for (int round = 0; round < config.max_lazy_rounds; ++round) {
    if (next_index > config.max_iters) break;  // iteration budget exhausted
    params = random_init(n, derive_seed(base, kInitStream + round));
    trace.active_subsets_history.push_back(cost_cfg.active_subsets);
    last_x.reset();

    bool plateaued = false;
    int plateau_run = 0;
    double prev_cost = 0.0;
    bool have_prev = false;
    while (true) {
      // One fresh measurement seed per iteration, shared by the center
      // evaluation and every finite-difference probe: the probes then see
      // the same shot noise and their difference stays clean.
      const uint64_t iter_seed = derive_seed(base, kIterStream + next_index);
      const auto cost_at = [&](const std::vector<double> &angles) {
        const VariationalParams p{angles, n};
        const CorrelationMatrix x =
            measure(p, config.protocol, config.shots, iter_seed);
        return total_cost(padded, x, cost_cfg);
      };
      const double cost = cost_at(params.angles);
      if (!std::isfinite(cost)) {
        throw std::runtime_error(
            "optimize: cost evaluation returned a non-finite value.");
      }
      const std::vector<double> grad =
          finite_diff_gradient(cost_at, params.angles, config.fd_step);
      trace.records.push_back(
          {next_index, cost, l2_norm(grad), params.angles});

      if (have_prev && std::abs(cost - prev_cost) < cost_tol) {
        ++plateau_run;
      } else {
        plateau_run = 0;
      }
      prev_cost = cost;
      have_prev = true;
      ++next_index;
      if (plateau_run >= config.patience) {
        plateaued = true;
        break;
      }
      if (next_index > config.max_iters) break;
      for (std::size_t k = 0; k < params.angles.size(); ++k) {
        params.angles[k] -= config.learning_rate * grad[k];
      }
    }

    if (!plateaued) {
      converged = false;
      break;
    }
    last_x = measure(params, config.protocol, config.shots,
                     derive_seed(base, kFinalStream + round));
    if (config.subtour_mode != SubtourMode::kLazy) {
      converged = true;
      break;
    }
    const RealMatrix block = last_x->entries.topLeftCorner(n, n);
    const std::vector<CitySubset> violated =
        detect_violated_subsets(nearest_permutation(block));
    std::vector<CitySubset> fresh;
    for (CitySubset s : violated) {
      if (std::find(cost_cfg.active_subsets.begin(),
                    cost_cfg.active_subsets.end(),
                    s) == cost_cfg.active_subsets.end()) {
        fresh.push_back(s);
      }
    }
    if (fresh.empty()) {
      converged = true;
      break;
    }
    cost_cfg.active_subsets.insert(cost_cfg.active_subsets.end(),
                                   fresh.begin(), fresh.end());
    std::sort(cost_cfg.active_subsets.begin(), cost_cfg.active_subsets.end());
    converged = false;  // violations pending; another round must resolve them
  }

  if (!last_x) {
    // The last round ended on budget, not plateau; measure its endpoint.
    const int last_round =
        static_cast<int>(trace.active_subsets_history.size()) - 1;
    last_x = measure(params, config.protocol, config.shots,
                     derive_seed(base, kFinalStream + last_round));
  }
  trace.final_x = std::move(*last_x);
  const RealMatrix block = trace.final_x.entries.topLeftCorner(n, n);
  trace.rounded = nearest_permutation(block);
  trace.route_length = route_length(problem, trace.rounded);
  trace.overlap = overlap(trace.final_x, trace.rounded);
  trace.converged = converged;
  return trace;
}

// Strict ordering of start outcomes: any valid tour beats any non-tour;
// among valid tours, shorter routes beat longer and ties go to the start
// whose final X agrees most sharply with its rounded route (higher
// overlap); among non-tours, lower final cost wins; remaining ties keep
// the earliest start.
bool better_trace(const RunTrace &a, const RunTrace &b) {
  const bool av = a.rounded.valid_tour();
  const bool bv = b.rounded.valid_tour();
  if (av != bv) return av;
  if (av) {
    if (a.route_length != b.route_length) {
      return a.route_length < b.route_length;
    }
    if (a.overlap != b.overlap) return a.overlap > b.overlap;
  } else {
    const double ac = a.records.back().cost;
    const double bc = b.records.back().cost;
    if (ac != bc) return ac < bc;
  }
  return a.start_index < b.start_index;
}

}  // namespace

VariationalParams random_init(int n_cities, uint64_t seed) {
  const int count = param_count_for(n_cities);
  RandomStream stream(seed);
  VariationalParams params;
  params.n_cities = n_cities;
  params.angles.resize(count);
  for (int k = 0; k < count; ++k) {
    params.angles[k] = stream.uniform(0.0, kPi);
  }
  return params;
}

std::vector<double> finite_diff_gradient(
    const std::function<double(const std::vector<double> &)> &cost_at,
    const std::vector<double> &angles, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    std::ostringstream msg;
    msg << "finite_diff_gradient: step must be positive and finite, got " << h
        << ".";
    throw std::invalid_argument(msg.str());
  }
  std::vector<double> grad(angles.size());
  std::vector<double> probe = angles;
  for (std::size_t k = 0; k < angles.size(); ++k) {
    probe[k] = angles[k] + h;
    const double up = cost_at(probe);
    probe[k] = angles[k] - h;
    const double down = cost_at(probe);
    probe[k] = angles[k];
    if (!std::isfinite(up) || !std::isfinite(down)) {
      throw std::runtime_error(
          "finite_diff_gradient: cost evaluation returned a non-finite "
          "value.");
    }
    grad[k] = (up - down) / (2.0 * h);
  }
  return grad;
}

RunTrace optimize(const DistanceMatrix &problem,
                  const OptimizerConfig &config) {
  validate_config(config);
  if (config.protocol == Protocol::kProjectors && problem.n_cities != 4) {
    std::ostringstream msg;
    msg << "optimize: the projector protocol emulates a 4-city mesh; got "
        << problem.n_cities << " cities.";
    throw std::invalid_argument(msg.str());
  }
  if (config.subtour_mode != SubtourMode::kOff && problem.n_cities > 32) {
    std::ostringstream msg;
    msg << "optimize: subtour bookkeeping uses 32-bit city subsets; got "
        << problem.n_cities << " cities (run with the subtour term off).";
    throw std::invalid_argument(msg.str());
  }
  const PaddedProblem padded = pad_problem(problem);
  const double cost_tol =
      config.cost_tol ? *config.cost_tol : (config.shots == 0 ? 1e-4 : 1.0);

  std::vector<RunTrace> traces;
  traces.reserve(config.n_starts);
  if (config.parallel_starts && config.n_starts > 1) {
    std::vector<std::future<RunTrace>> futures;
    futures.reserve(config.n_starts);
    for (int s = 0; s < config.n_starts; ++s) {
      futures.push_back(std::async(std::launch::async, [&, s] {
        return run_one_start(problem, padded, config, cost_tol, s);
      }));
    }
    for (auto &f : futures) traces.push_back(f.get());
  } else {
    for (int s = 0; s < config.n_starts; ++s) {
      traces.push_back(run_one_start(problem, padded, config, cost_tol, s));
    }
  }

  int best = 0;
  for (int s = 1; s < config.n_starts; ++s) {
    if (better_trace(traces[s], traces[best])) best = s;
  }
  return std::move(traces[best]);
}

}  // namespace tspvqa
