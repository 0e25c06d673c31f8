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

#ifndef TSPVQA_PROBLEM_IO_H_
#define TSPVQA_PROBLEM_IO_H_

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tspvqa/classical.h"
#include "tspvqa/cost.h"
#include "tspvqa/linalg.h"
#include "tspvqa/optimizer.h"

namespace tspvqa {

// All on-disk documents are JSON with a leading "format" version tag; traces
// are line-delimited JSON (one object per line). The exact layouts are
// documented in docs/FORMATS.md and frozen: emission is deterministic
// (insertion-ordered keys, shortest round-trip number encoding), so repeated
// runs with equal inputs produce byte-identical files.
inline constexpr char kProblemFormatTag[] = "tspvqa-problem/1";
inline constexpr char kTraceFormatTag[] = "tspvqa-trace/1";
inline constexpr char kMatrixFormatTag[] = "tspvqa-matrix/1";
inline constexpr char kBirkhoffFormatTag[] = "tspvqa-birkhoff/1";
inline constexpr char kOracleFormatTag[] = "tspvqa-oracle/1";

// A parsed instance document: the distance matrix plus optional per-file
// overrides of the self-loop penalty and subtour weight (command-line flags
// take precedence over these, which take precedence over built-in defaults).
struct ProblemFile {
  int n = 0;
  RealMatrix distances;
  std::optional<double> diag_penalty;
  std::optional<double> a_sub;
};

// Parsing throws std::invalid_argument naming the offending field (or the
// byte position for malformed JSON); loading adds the file path and throws
// std::runtime_error when the file cannot be read.
ProblemFile parse_problem_json(const std::string &text);
ProblemFile load_problem_file(const std::string &path);
std::string problem_to_json(const ProblemFile &problem);

// Square real matrix documents (input of the Birkhoff command).
RealMatrix parse_matrix_json(const std::string &text);
RealMatrix load_matrix_file(const std::string &path);
std::string matrix_to_json(const RealMatrix &m);

// Trace stream lines. A stream is: one header object, one object per
// optimizer iteration, one terminal result object. The header takes the
// resolved instance (flag and file overrides already applied), so the echo
// reflects what actually ran.
nlohmann::ordered_json trace_header(const DistanceMatrix &problem,
                                    const OptimizerConfig &config);
nlohmann::ordered_json trace_iteration(const IterationRecord &record);
nlohmann::ordered_json trace_result(const RunTrace &trace,
                                    const OptimizerConfig &config);

// One emitted line: compact dump plus trailing newline.
std::string dump_line(const nlohmann::ordered_json &object);

// Re-parsed trace stream (the round-trip direction). Validates the format
// tag, the line structure, and that iteration indices strictly increase.
struct ParsedTrace {
  nlohmann::ordered_json header;
  std::vector<nlohmann::ordered_json> iterations;
  nlohmann::ordered_json result;
};
ParsedTrace parse_trace_stream(const std::string &text);

// Classical-oracle report: brute force (when within its capacity cap, else
// a refusal note) and the dynamic-programming length (likewise).
nlohmann::ordered_json oracle_report(const DistanceMatrix &problem);

// Decomposition listing with weights, permutations, their sum, and the
// reconstruction residual.
nlohmann::ordered_json birkhoff_report(const BirkhoffDecomposition &dec);

}  // namespace tspvqa

#endif  // TSPVQA_PROBLEM_IO_H_
