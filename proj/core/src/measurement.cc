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

#include "tspvqa/measurement.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "tspvqa/rng.h"

namespace tspvqa {

CorrelationMatrix correlation_exact(const Statevector &state) {
  const int dim = state.register_dim();
  CorrelationMatrix x;
  x.dim = dim;
  x.mode = MeasurementMode::kExact;
  x.entries.resize(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      x.entries(i, j) =
          dim * std::norm(state.amplitudes[static_cast<int64_t>(i) * dim + j]);
    }
  }
  return x;
}

std::pair<CorrelationMatrix, CoincidenceRecord> correlation_sampled(
    const Statevector &state, uint64_t shots, uint64_t seed) {
  if (shots == 0) {
    throw std::invalid_argument(
        "Sampled correlation needs at least one shot.");
  }
  const int dim = state.register_dim();
  std::vector<double> probs(static_cast<size_t>(dim) * dim);
  for (size_t k = 0; k < probs.size(); ++k) {
    probs[k] = std::norm(state.amplitudes[k]);
  }
  const std::vector<uint64_t> counts = multinomial_counts(probs, shots, seed);

  CoincidenceRecord record;
  record.counts.resize(dim, dim);
  record.total = shots;
  record.seed = seed;

  CorrelationMatrix x;
  x.dim = dim;
  x.mode = MeasurementMode::kSampled;
  x.shots = shots;
  x.entries.resize(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const uint64_t c = counts[static_cast<size_t>(i) * dim + j];
      record.counts(i, j) = c;
      x.entries(i, j) = dim * static_cast<double>(c) / shots;
    }
  }
  return {std::move(x), std::move(record)};
}

double overlap(const CorrelationMatrix &x_hat, const RoutePermutation &x_ref) {
  const int n = x_ref.size();
  if (n > x_hat.dim) {
    throw std::invalid_argument(
        "Reference route covers " + std::to_string(n) +
        " cities but the correlation matrix only has " +
        std::to_string(x_hat.dim) + " modes.");
  }
  // Tr[X * x^T] picks the X entries sitting on the route's support; spectator
  // modes contribute their diagonal entries (identity padding).
  double trace = 0.0;
  for (int k = 0; k < n; ++k) {
    trace += x_hat.entries(k, x_ref.next(k));
  }
  for (int k = n; k < x_hat.dim; ++k) {
    trace += x_hat.entries(k, k);
  }
  return trace / x_hat.dim;
}

StochasticityReport assert_doubly_stochastic(const CorrelationMatrix &x,
                                             double tol) {
  StochasticityReport report;
  for (int i = 0; i < x.dim; ++i) {
    report.max_row_deviation = std::max(report.max_row_deviation,
                                        std::abs(x.entries.row(i).sum() - 1));
    report.max_col_deviation = std::max(report.max_col_deviation,
                                        std::abs(x.entries.col(i).sum() - 1));
  }
  report.pass =
      report.max_row_deviation <= tol && report.max_col_deviation <= tol;
  return report;
}

}  // namespace tspvqa
