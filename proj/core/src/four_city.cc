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

#include "tspvqa/four_city.h"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "tspvqa/rng.h"

namespace tspvqa {

namespace {

constexpr double kHalfPi = 1.5707963267948966;

// Below this, a pair of row components is treated as exactly zero and the
// angle it would determine is gauge (set to 0).
constexpr double kDegenerateTol = 1e-12;

double sq(double v) { return v * v; }

// Row kProjectorOutputPort of the triangular mesh, in closed form:
// (sin t1 cos t2, -sin t1 sin t2, cos t1 sin t3, cos t1 cos t3).
Eigen::Vector4d projector_row(const std::array<double, 3> &t) {
  return {std::sin(t[0]) * std::cos(t[1]), -std::sin(t[0]) * std::sin(t[1]),
          std::cos(t[0]) * std::sin(t[2]), std::cos(t[0]) * std::cos(t[2])};
}

// Triple putting row v (unit, with v[0] = 0) on the projector port. The
// departure rows 2..4 all have a vanishing first component, so t2 = pi/2
// zeroes the first slot and the remaining angles split v among the others.
std::array<double, 3> idler_triple(const Eigen::Vector4d &v) {
  const double tail = std::hypot(v[2], v[3]);
  return {std::atan2(-v[1], tail), kHalfPi,
          tail > kDegenerateTol ? std::atan2(v[2], v[3]) : 0.0};
}

// Triple putting row v (unit, with v[3] = 0) on the projector port. The
// arrival rows 2..4 all have a vanishing last component, so t3 = pi/2
// zeroes the last slot.
std::array<double, 3> signal_triple(const Eigen::Vector4d &v) {
  const double head = std::hypot(v[0], v[1]);
  return {std::atan2(head, v[2]),
          head > kDegenerateTol ? std::atan2(-v[1], v[0]) : 0.0, kHalfPi};
}

}  // namespace

VariationalParams to_variational(const FourCityParams &params) {
  return {{params.a.begin(), params.a.end()}, 4};
}

FourCityParams from_variational(const VariationalParams &params) {
  validate_params(params);
  if (params.n_cities != 4) {
    std::ostringstream msg;
    msg << "from_variational: expected a 4-city parameter vector, got "
        << params.n_cities << " cities.";
    throw std::invalid_argument(msg.str());
  }
  FourCityParams out;
  for (int k = 0; k < 6; ++k) out.a[k] = params.angles[k];
  return out;
}

RealMatrix departure_unitary_4(double a1, double a2, double a3) {
  const double s1 = std::sin(a1), c1 = std::cos(a1);
  const double s2 = std::sin(a2), c2 = std::cos(a2);
  const double s3 = std::sin(a3), c3 = std::cos(a3);
  RealMatrix u(4, 4);
  u << 1, 0, 0, 0,                                          //
      0, s1 * s3 - c1 * s2 * c3, s1 * c3 + c1 * s2 * s3, -c1 * c2,  //
      0, -c1 * s3 - s1 * s2 * c3, -c1 * c3 + s1 * s2 * s3, -s1 * c2,  //
      0, -c2 * c3, c2 * s3, s2;
  return u;
}

RealMatrix arrival_unitary_4(double a4, double a5, double a6) {
  const double s4 = std::sin(a4), c4 = std::cos(a4);
  const double s5 = std::sin(a5), c5 = std::cos(a5);
  const double s6 = std::sin(a6), c6 = std::cos(a6);
  RealMatrix u(4, 4);
  u << 0, 0, 0, 1,                                          //
      s5, c5 * s6, c5 * c6, 0,                              //
      s4 * c5, c4 * c6 - s4 * s5 * s6, -c4 * s6 - s4 * s5 * c6, 0,  //
      c4 * c5, -s4 * c6 - c4 * s5 * s6, s4 * s6 - c4 * s5 * c6, 0;
  return u;
}

CorrelationMatrix four_city_correlation(const FourCityParams &params) {
  const double a1 = params.a[0], a2 = params.a[1], a3 = params.a[2];
  const double a4 = params.a[3], a5 = params.a[4], a6 = params.a[5];
  const double s1 = std::sin(a1), c1 = std::cos(a1);
  const double s2 = std::sin(a2), c2 = std::cos(a2);
  const double s3 = std::sin(a3), c3 = std::cos(a3);
  const double s4 = std::sin(a4), c4 = std::cos(a4);
  const double s5 = std::sin(a5), c5 = std::cos(a5);
  const double s6 = std::sin(a6), c6 = std::cos(a6);
  const double sd = std::sin(a6 - a3);
  const double cd = std::cos(a6 - a3);

  RealMatrix x(4, 4);
  x(0, 0) = 0.0;
  x(0, 1) = sq(s5);
  x(0, 2) = sq(s4) * sq(c5);
  x(0, 3) = sq(c4) * sq(c5);
  x(1, 0) = sq(c1) * sq(c2);
  x(1, 1) = sq(c5) * sq(s1 * cd - c1 * s2 * sd);
  x(1, 2) = sq((c4 * c6 - s4 * s5 * s6) * (s1 * s3 - c1 * s2 * c3) -
               (c4 * s6 + s4 * s5 * c6) * (s1 * c3 + c1 * s2 * s3));
  x(1, 3) = sq(cd * (s4 * c1 * s2 - c4 * s5 * s1) +
               sd * (c4 * s5 * c1 * s2 + s4 * s1));
  x(2, 0) = sq(s1) * sq(c2);
  x(2, 1) = sq(c5) * sq(s1 * s2 * sd + c1 * cd);
  x(2, 2) = sq((s4 * s5 * c6 + c4 * s6) * (c1 * c3 - s1 * s2 * s3) -
               (c4 * c6 - s4 * s5 * s6) * (s1 * s2 * c3 + c1 * s3));
  x(2, 3) = sq(cd * (c4 * s5 * c1 + s4 * s1 * s2) +
               sd * (c4 * s5 * s1 * s2 - s4 * c1));
  x(3, 0) = sq(s2);
  x(3, 1) = sq(c5) * sq(c2) * sq(sd);
  x(3, 2) = sq(c2) * sq(s4 * s5 * sd - c4 * cd);
  x(3, 3) = sq(c2) * sq(c4 * s5 * sd + s4 * cd);
  return {4, std::move(x), MeasurementMode::kExact, 0};
}

FourCityParams route_phase_settings(const RoutePermutation &route) {
  if (route.size() != 4 || !route.valid_tour()) {
    throw std::invalid_argument(
        "route_phase_settings: route must be a valid 4-city tour.");
  }
  const double h = kHalfPi;
  // One catalog entry per tour, keyed by the city visited after city 1 and
  // the one after that (which determines the whole sequence).
  struct Entry {
    int second, third;
    FourCityParams params;
  };
  static const Entry kCatalog[] = {
      {1, 2, {{h, h, h, h, h, h}}},  // 1 -> 2 -> 3 -> 4
      {1, 3, {{h, 0, h, h, h, 0}}},  // 1 -> 2 -> 4 -> 3
      {2, 1, {{h, h, 0, h, 0, h}}},  // 1 -> 3 -> 2 -> 4
      {2, 3, {{0, 0, h, h, 0, 0}}},  // 1 -> 3 -> 4 -> 2
      {3, 1, {{h, 0, 0, 0, 0, h}}},  // 1 -> 4 -> 2 -> 3
      {3, 2, {{0, 0, 0, 0, 0, 0}}},  // 1 -> 4 -> 3 -> 2
  };
  const int second = route.next(0);
  const int third = route.next(second);
  for (const Entry &entry : kCatalog) {
    if (entry.second == second && entry.third == third) return entry.params;
  }
  throw std::runtime_error(
      "route_phase_settings: tour missing from the catalog; this indicates "
      "an internal consistency bug.");
}

ProjectorSettings projector_settings(const FourCityParams &params) {
  const RealMatrix u_d =
      departure_unitary_4(params.a[0], params.a[1], params.a[2]);
  const RealMatrix u_a =
      arrival_unitary_4(params.a[3], params.a[4], params.a[5]);
  ProjectorSettings out;
  // Row 1 of each transformation is constant (e1 and e4), so the first
  // triples never depend on the angles.
  out.idler[0] = {kHalfPi, 0.0, kHalfPi};
  out.signal[0] = {0.0, kHalfPi, 0.0};
  for (int j = 1; j < 4; ++j) {
    out.idler[j] = idler_triple(u_d.row(j));
    out.signal[j] = signal_triple(u_a.row(j));
  }
  return out;
}

namespace {

// The sixteen coincidence probabilities, row-major over (idler setting,
// signal setting). Entry (ji, js) is |<row ji of U_d, row js of U_a>|^2 / 4:
// the two photons of the maximally entangled pair exit the projector port
// with amplitude (1/2) * sum_k (U_i)_{port,k} (U_s)_{port,k}.
std::vector<double> coincidence_probabilities(const FourCityParams &params) {
  const ProjectorSettings settings = projector_settings(params);
  std::vector<double> probs(16);
  for (int ji = 0; ji < 4; ++ji) {
    const Eigen::Vector4d idler = projector_row(settings.idler[ji]);
    for (int js = 0; js < 4; ++js) {
      const Eigen::Vector4d signal = projector_row(settings.signal[js]);
      probs[ji * 4 + js] = sq(0.5 * idler.dot(signal));
    }
  }
  return probs;
}

}  // namespace

CorrelationMatrix emulate_projectors(const FourCityParams &params) {
  const std::vector<double> probs = coincidence_probabilities(params);
  RealMatrix x(4, 4);
  for (int ji = 0; ji < 4; ++ji) {
    for (int js = 0; js < 4; ++js) {
      x(ji, js) = 4.0 * probs[ji * 4 + js];
    }
  }
  return {4, std::move(x), MeasurementMode::kExact, 0};
}

std::pair<CorrelationMatrix, CoincidenceRecord> emulate_projectors(
    const FourCityParams &params, uint64_t shots, uint64_t seed) {
  if (shots == 0) {
    throw std::invalid_argument(
        "emulate_projectors: sampling requires at least one shot.");
  }
  const std::vector<double> probs = coincidence_probabilities(params);
  const std::vector<uint64_t> counts = multinomial_counts(probs, shots, seed);

  CoincidenceRecord record;
  record.counts.resize(4, 4);
  record.total = shots;
  record.seed = seed;
  RealMatrix x(4, 4);
  for (int ji = 0; ji < 4; ++ji) {
    for (int js = 0; js < 4; ++js) {
      const uint64_t c = counts[ji * 4 + js];
      record.counts(ji, js) = c;
      x(ji, js) = 4.0 * static_cast<double>(c) / static_cast<double>(shots);
    }
  }
  CorrelationMatrix result{4, std::move(x), MeasurementMode::kSampled, shots};
  return {std::move(result), std::move(record)};
}

}  // namespace tspvqa
