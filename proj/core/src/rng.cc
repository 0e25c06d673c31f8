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

#include "tspvqa/rng.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tspvqa {

uint64_t splitmix64(uint64_t &state) {
  state += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t derive_seed(uint64_t base, uint64_t stream) {
  // Advance a SplitMix64 chain keyed by the base, then fold in the stream
  // index and mix once more. Distinct (base, stream) pairs give well
  // separated seeds even for tiny consecutive inputs.
  uint64_t state = base;
  uint64_t mixed = splitmix64(state);
  state = mixed ^ (stream * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
  return splitmix64(state);
}

double RandomStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

std::vector<uint64_t> multinomial_counts(const std::vector<double> &probs,
                                         uint64_t shots, uint64_t seed) {
  if (shots == 0) {
    throw std::invalid_argument("multinomial_counts needs at least one shot.");
  }
  if (probs.empty()) {
    throw std::invalid_argument("multinomial_counts needs outcomes.");
  }
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw std::invalid_argument(
          "multinomial_counts probabilities must be finite and nonnegative.");
    }
    total += p;
  }
  if (total <= 0.0) {
    throw std::invalid_argument(
        "multinomial_counts probabilities must sum to a positive value.");
  }

  std::vector<double> cdf(probs.size());
  double acc = 0.0;
  for (size_t k = 0; k < probs.size(); ++k) {
    acc += probs[k] / total;
    cdf[k] = acc;
  }
  cdf.back() = 1.0;

  std::vector<uint64_t> counts(probs.size(), 0);
  RandomStream stream(seed);
  for (uint64_t shot = 0; shot < shots; ++shot) {
    const double u = stream.uniform();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const size_t idx = std::min<size_t>(it - cdf.begin(), probs.size() - 1);
    ++counts[idx];
  }
  return counts;
}

}  // namespace tspvqa
