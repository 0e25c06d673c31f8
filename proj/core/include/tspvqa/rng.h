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

#ifndef TSPVQA_RNG_H_
#define TSPVQA_RNG_H_

#include <cstdint>
#include <random>
#include <vector>

namespace tspvqa {

// Every stochastic operation in this library takes an explicit seed; there is
// no global generator state. Raw engine words are turned into doubles by hand
// because std::uniform_real_distribution (and friends) are implementation
// defined, and traces must be byte-identical across standard libraries.

// SplitMix64 step (Steele, Lea, Flood). Used to derive decorrelated stream
// seeds from a base seed, e.g. one stream per optimizer start or iteration.
uint64_t splitmix64(uint64_t &state);

// Mixes a base seed with a stream index into an independent stream seed.
uint64_t derive_seed(uint64_t base, uint64_t stream);

// Deterministic uniform-double stream backed by std::mt19937_64, whose raw
// output sequence is fixed by the standard.
class RandomStream {
 public:
  explicit RandomStream(uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits: (word >> 11) * 2^-53.
  double uniform();

  // Uniform on [lo, hi).
  double uniform(double lo, double hi);

 private:
  std::mt19937_64 engine_;
};

// Draws multinomial counts: `shots` independent trials over len(probs)
// outcomes. Probabilities are normalized internally; negative entries are
// rejected. Each trial is an inverse-CDF binary search, so the result is
// deterministic given the seed on any platform.
//
// Throws std::invalid_argument when shots is zero, probs is empty, or the
// probabilities do not sum to something positive.
std::vector<uint64_t> multinomial_counts(const std::vector<double> &probs,
                                         uint64_t shots, uint64_t seed);

}  // namespace tspvqa

#endif  // TSPVQA_RNG_H_
