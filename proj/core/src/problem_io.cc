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

#include "tspvqa/problem_io.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace tspvqa {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string &what) {
  throw std::invalid_argument(what);
}

ordered_json parse_document(const std::string &text, const char *kind) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error &err) {
    std::ostringstream msg;
    msg << kind << ": malformed JSON: " << err.what();
    fail(msg.str());
  }
}

void require_tag(const ordered_json &doc, const char *tag, const char *kind) {
  if (!doc.is_object()) {
    fail(std::string(kind) + ": top-level value must be an object.");
  }
  if (!doc.contains("format") || !doc["format"].is_string() ||
      doc["format"].get<std::string>() != tag) {
    fail(std::string(kind) + ": missing or wrong \"format\" tag (expected \"" +
         tag + "\").");
  }
}

double require_finite_number(const ordered_json &value, const char *kind,
                             const std::string &field) {
  if (!value.is_number()) {
    fail(std::string(kind) + ": field \"" + field + "\" must be a number.");
  }
  const double out = value.get<double>();
  if (!std::isfinite(out)) {
    fail(std::string(kind) + ": field \"" + field + "\" must be finite.");
  }
  return out;
}

RealMatrix require_square_array(const ordered_json &value, int n,
                                const char *kind, const std::string &field) {
  if (!value.is_array() || static_cast<int>(value.size()) != n) {
    std::ostringstream msg;
    msg << kind << ": field \"" << field << "\" must be an array of " << n
        << " rows.";
    fail(msg.str());
  }
  RealMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    const ordered_json &row = value[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      std::ostringstream msg;
      msg << kind << ": row " << i + 1 << " of \"" << field << "\" must hold "
          << n << " numbers.";
      fail(msg.str());
    }
    for (int j = 0; j < n; ++j) {
      std::ostringstream where;
      where << field << "[" << i + 1 << "][" << j + 1 << "]";
      m(i, j) = require_finite_number(row[j], kind, where.str());
    }
  }
  return m;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const char *subtour_name(SubtourMode mode) {
  switch (mode) {
    case SubtourMode::kFull:
      return "full";
    case SubtourMode::kLazy:
      return "lazy";
    case SubtourMode::kOff:
      return "off";
  }
  return "lazy";
}

ordered_json config_echo(const OptimizerConfig &config) {
  ordered_json echo;
  echo["lr"] = config.learning_rate;
  echo["fd_step"] = config.fd_step;
  echo["max_iters"] = config.max_iters;
  if (config.cost_tol) {
    echo["cost_tol"] = *config.cost_tol;
  } else {
    echo["cost_tol"] = nullptr;
  }
  echo["patience"] = config.patience;
  echo["starts"] = config.n_starts;
  echo["max_lazy_rounds"] = config.max_lazy_rounds;
  return echo;
}

ordered_json cycles_json(const RoutePermutation &route) {
  ordered_json cycles = ordered_json::array();
  for (const auto &cycle : route.cycles()) {
    ordered_json labels = ordered_json::array();
    for (int city : cycle) labels.push_back(city + 1);
    cycles.push_back(std::move(labels));
  }
  return cycles;
}

}  // namespace

ProblemFile parse_problem_json(const std::string &text) {
  const char *kind = "problem file";
  const ordered_json doc = parse_document(text, kind);
  require_tag(doc, kProblemFormatTag, kind);
  for (const auto &item : doc.items()) {
    const std::string &key = item.key();
    if (key != "format" && key != "n" && key != "distances" &&
        key != "diag_penalty" && key != "a_sub") {
      fail(std::string(kind) + ": unknown field \"" + key + "\".");
    }
  }
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    fail(std::string(kind) + ": field \"n\" must be an integer.");
  }
  ProblemFile out;
  out.n = doc["n"].get<int>();
  if (out.n < 1 || out.n > 4096) {
    std::ostringstream msg;
    msg << kind << ": field \"n\" must be in [1, 4096], got " << out.n << ".";
    fail(msg.str());
  }
  if (!doc.contains("distances")) {
    fail(std::string(kind) + ": field \"distances\" is required.");
  }
  out.distances = require_square_array(doc["distances"], out.n, kind,
                                       "distances");
  if (out.distances.minCoeff() < 0.0) {
    fail(std::string(kind) + ": field \"distances\" must be nonnegative.");
  }
  if (doc.contains("diag_penalty")) {
    out.diag_penalty =
        require_finite_number(doc["diag_penalty"], kind, "diag_penalty");
  }
  if (doc.contains("a_sub")) {
    out.a_sub = require_finite_number(doc["a_sub"], kind, "a_sub");
  }
  return out;
}

ProblemFile load_problem_file(const std::string &path) {
  return parse_problem_json(read_file(path));
}

std::string problem_to_json(const ProblemFile &problem) {
  ordered_json doc;
  doc["format"] = kProblemFormatTag;
  doc["n"] = problem.n;
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < problem.n; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < problem.n; ++j) row.push_back(problem.distances(i, j));
    rows.push_back(std::move(row));
  }
  doc["distances"] = std::move(rows);
  if (problem.diag_penalty) doc["diag_penalty"] = *problem.diag_penalty;
  if (problem.a_sub) doc["a_sub"] = *problem.a_sub;
  return doc.dump();
}

RealMatrix parse_matrix_json(const std::string &text) {
  const char *kind = "matrix file";
  const ordered_json doc = parse_document(text, kind);
  require_tag(doc, kMatrixFormatTag, kind);
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    fail(std::string(kind) + ": field \"n\" must be an integer.");
  }
  const int n = doc["n"].get<int>();
  if (n < 1 || n > 4096) {
    std::ostringstream msg;
    msg << kind << ": field \"n\" must be in [1, 4096], got " << n << ".";
    fail(msg.str());
  }
  if (!doc.contains("entries")) {
    fail(std::string(kind) + ": field \"entries\" is required.");
  }
  return require_square_array(doc["entries"], n, kind, "entries");
}

RealMatrix load_matrix_file(const std::string &path) {
  return parse_matrix_json(read_file(path));
}

std::string matrix_to_json(const RealMatrix &m) {
  ordered_json doc;
  doc["format"] = kMatrixFormatTag;
  doc["n"] = static_cast<int>(m.rows());
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  doc["entries"] = std::move(rows);
  return doc.dump();
}

ordered_json trace_header(const DistanceMatrix &problem,
                          const OptimizerConfig &config) {
  ordered_json doc;
  doc["format"] = kTraceFormatTag;
  doc["type"] = "header";
  doc["n"] = problem.n_cities;
  doc["mode"] = config.shots == 0 ? "exact" : "sampled";
  doc["shots"] = config.shots;
  doc["protocol"] =
      config.protocol == Protocol::kProjectors ? "projectors" : "universal";
  doc["subtour"] = subtour_name(config.subtour_mode);
  doc["a_sub"] = config.a_sub;
  doc["diag_penalty"] = problem.diag_penalty;
  doc["seed"] = config.seed;
  doc["config"] = config_echo(config);
  return doc;
}

ordered_json trace_iteration(const IterationRecord &record) {
  ordered_json doc;
  doc["type"] = "iteration";
  doc["iteration"] = record.iteration;
  doc["cost"] = record.cost;
  doc["grad_norm"] = record.grad_norm;
  doc["alpha"] = record.angles;
  return doc;
}

ordered_json trace_result(const RunTrace &trace,
                          const OptimizerConfig &config) {
  ordered_json doc;
  doc["type"] = "result";
  doc["dim"] = trace.final_x.dim;
  ordered_json flat = ordered_json::array();
  for (int i = 0; i < trace.final_x.dim; ++i) {
    for (int j = 0; j < trace.final_x.dim; ++j) {
      flat.push_back(trace.final_x.entries(i, j));
    }
  }
  doc["final_x"] = std::move(flat);
  if (trace.rounded.valid_tour()) {
    doc["route"] = trace.rounded.to_sequence();
    doc["route_length"] = trace.route_length;
  } else {
    // A rounded permutation with subtours or fixed points has no tour
    // length; reporting one (it would include the diagonal penalty) would
    // invite comparisons against real tours.
    doc["route"] = nullptr;
    doc["route_length"] = nullptr;
  }
  doc["cycles"] = cycles_json(trace.rounded);
  doc["valid_tour"] = trace.rounded.valid_tour();
  doc["overlap"] = trace.overlap;
  doc["converged"] = trace.converged;
  ordered_json history = ordered_json::array();
  for (const auto &round : trace.active_subsets_history) {
    ordered_json sets = ordered_json::array();
    for (CitySubset subset : round) sets.push_back(subset_cities(subset));
    history.push_back(std::move(sets));
  }
  doc["active_subsets"] = std::move(history);
  doc["start_index"] = trace.start_index;
  doc["start_seed"] = trace.start_seed;
  doc["seed"] = config.seed;
  doc["config"] = config_echo(config);
  return doc;
}

std::string dump_line(const ordered_json &object) {
  return object.dump() + "\n";
}

ParsedTrace parse_trace_stream(const std::string &text) {
  const char *kind = "trace stream";
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.size() < 2) {
    fail(std::string(kind) +
         ": expected at least a header line and a result line.");
  }
  ParsedTrace out;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    ordered_json doc;
    try {
      doc = ordered_json::parse(lines[k]);
    } catch (const nlohmann::json::parse_error &err) {
      std::ostringstream msg;
      msg << kind << ": line " << k + 1 << ": malformed JSON: " << err.what();
      fail(msg.str());
    }
    if (!doc.is_object() || !doc.contains("type") ||
        !doc["type"].is_string()) {
      std::ostringstream msg;
      msg << kind << ": line " << k + 1 << ": missing \"type\".";
      fail(msg.str());
    }
    const std::string type = doc["type"].get<std::string>();
    if (k == 0) {
      require_tag(doc, kTraceFormatTag, kind);
      if (type != "header") {
        fail(std::string(kind) + ": line 1 must have type \"header\".");
      }
      out.header = std::move(doc);
    } else if (k + 1 == lines.size()) {
      if (type != "result") {
        std::ostringstream msg;
        msg << kind << ": line " << k + 1 << " must have type \"result\".";
        fail(msg.str());
      }
      out.result = std::move(doc);
    } else {
      if (type != "iteration" || !doc.contains("iteration") ||
          !doc["iteration"].is_number_integer()) {
        std::ostringstream msg;
        msg << kind << ": line " << k + 1
            << " must be an iteration record with an integer index.";
        fail(msg.str());
      }
      if (!out.iterations.empty() &&
          doc["iteration"].get<int>() <=
              out.iterations.back()["iteration"].get<int>()) {
        std::ostringstream msg;
        msg << kind << ": line " << k + 1
            << ": iteration indices must strictly increase.";
        fail(msg.str());
      }
      out.iterations.push_back(std::move(doc));
    }
  }
  return out;
}

ordered_json oracle_report(const DistanceMatrix &problem) {
  ordered_json doc;
  doc["format"] = kOracleFormatTag;
  doc["n"] = problem.n_cities;
  std::optional<double> brute_length;
  if (problem.n_cities <= kMaxBruteForceCities) {
    const auto [route, length] = brute_force_tsp(problem);
    ordered_json entry;
    entry["route"] = route.to_sequence();
    entry["length"] = length;
    doc["brute_force"] = std::move(entry);
    brute_length = length;
  } else {
    doc["brute_force"] = nullptr;
    std::ostringstream note;
    note << "exhaustive search is capped at " << kMaxBruteForceCities
         << " cities";
    doc["brute_force_note"] = note.str();
  }
  std::optional<double> dp_length;
  if (problem.n_cities <= kMaxHeldKarpCities) {
    ordered_json entry;
    entry["length"] = held_karp(problem);
    dp_length = entry["length"].get<double>();
    doc["held_karp"] = std::move(entry);
  } else {
    doc["held_karp"] = nullptr;
    std::ostringstream note;
    note << "dynamic program is capped at " << kMaxHeldKarpCities << " cities";
    doc["held_karp_note"] = note.str();
  }
  if (brute_length && dp_length) {
    doc["agree"] = std::abs(*brute_length - *dp_length) <= 1e-9;
  } else {
    doc["agree"] = nullptr;
  }
  return doc;
}

ordered_json birkhoff_report(const BirkhoffDecomposition &dec) {
  ordered_json doc;
  doc["format"] = kBirkhoffFormatTag;
  doc["n"] = dec.terms.empty() ? 0 : dec.terms.front().permutation.size();
  ordered_json terms = ordered_json::array();
  double weight_sum = 0.0;
  for (const auto &term : dec.terms) {
    ordered_json entry;
    entry["weight"] = term.weight;
    ordered_json sigma = ordered_json::array();
    for (int city = 0; city < term.permutation.size(); ++city) {
      sigma.push_back(term.permutation.next(city) + 1);
    }
    entry["sigma"] = std::move(sigma);
    terms.push_back(std::move(entry));
    weight_sum += term.weight;
  }
  doc["terms"] = std::move(terms);
  doc["weight_sum"] = weight_sum;
  doc["residual"] = dec.residual;
  return doc;
}

}  // namespace tspvqa
