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
// Command-line front end. Subcommands:
//
//   solve     run the variational solver on an instance file
//   emulate   same loop, but cost evaluations may go through the
//             sixteen-projector photonic emulation (--protocol projectors)
//   oracle    classical exact answers (exhaustive + dynamic programming)
//   birkhoff  decompose a doubly-stochastic matrix into permutations
//
// stdout carries data records only; all diagnostics go to stderr. Exit codes:
// 0 = solver converged to a valid tour (or the command succeeded), 2 = run
// finished without converging to a valid tour, 1 = bad input or usage.

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tspvqa/classical.h"
#include "tspvqa/cost.h"
#include "tspvqa/optimizer.h"
#include "tspvqa/problem_io.h"

namespace {

using tspvqa::OptimizerConfig;
using tspvqa::Protocol;
using tspvqa::SubtourMode;

struct SolveOptions {
  std::string problem_path;
  bool exact = false;
  uint64_t shots = 2000;
  std::optional<uint64_t> seed;
  double lr = 0.005;
  double fd_step = 0.05;
  int max_iters = 500;
  int starts = 5;
  std::optional<double> asub;
  std::optional<double> dii;
  std::string subtour = "lazy";
  std::string protocol = "universal";
  std::string out_path;
};

uint64_t resolve_seed(const std::optional<uint64_t> &flag_seed) {
  if (flag_seed) return *flag_seed;
  const char *env = std::getenv("TSPVQA_SEED");
  if (env == nullptr || *env == '\0') return 0;
  errno = 0;
  char *end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (errno != 0 || end == env || *end != '\0') {
    throw std::invalid_argument(
        "TSPVQA_SEED must be an unsigned decimal integer, got \"" +
        std::string(env) + "\".");
  }
  return static_cast<uint64_t>(value);
}

SubtourMode parse_subtour(const std::string &name) {
  if (name == "full") return SubtourMode::kFull;
  if (name == "lazy") return SubtourMode::kLazy;
  return SubtourMode::kOff;
}

// Opens --out when given, else stdout. The stream must outlive its use.
std::ostream &open_output(const std::string &path, std::ofstream &file) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot write file: " + path);
  }
  return file;
}

void add_common_flags(CLI::App *cmd, SolveOptions &opts) {
  cmd->add_option("problem", opts.problem_path, "Instance file (JSON)")
      ->required();
  auto *exact = cmd->add_flag("--exact", opts.exact,
                              "Exact expectation values (no shot noise)");
  cmd->add_option("--shots", opts.shots,
                  "Coincidence events per measurement (default 2000)")
      ->excludes(exact);
  cmd->add_option("--seed", opts.seed,
                  "Base seed (default: TSPVQA_SEED env var, else 0)");
  cmd->add_option("--lr", opts.lr, "Gradient-descent learning rate");
  cmd->add_option("--fd-step", opts.fd_step,
                  "Finite-difference step (radians)");
  cmd->add_option("--max-iters", opts.max_iters,
                  "Iteration budget per start");
  cmd->add_option("--starts", opts.starts, "Number of random restarts");
  cmd->add_option("--asub", opts.asub, "Subtour-elimination weight");
  cmd->add_option("--dii", opts.dii, "Self-loop penalty on the diagonal");
  cmd->add_option("--subtour", opts.subtour,
                  "Subtour handling: full, lazy, or off")
      ->check(CLI::IsMember({"full", "lazy", "off"}));
  cmd->add_option("--out", opts.out_path,
                  "Write the trace here instead of stdout");
}

int run_solve(const SolveOptions &opts) {
  const tspvqa::ProblemFile file =
      tspvqa::load_problem_file(opts.problem_path);
  const double dii = opts.dii.value_or(file.diag_penalty.value_or(100.0));
  const double asub = opts.asub.value_or(file.a_sub.value_or(50.0));
  const tspvqa::DistanceMatrix problem =
      tspvqa::make_distance_matrix(file.n, file.distances, dii);

  OptimizerConfig config;
  config.learning_rate = opts.lr;
  config.fd_step = opts.fd_step;
  config.max_iters = opts.max_iters;
  config.n_starts = opts.starts;
  config.shots = opts.exact ? 0 : opts.shots;
  config.seed = resolve_seed(opts.seed);
  config.protocol =
      opts.protocol == "projectors" ? Protocol::kProjectors
                                    : Protocol::kUniversal;
  config.subtour_mode = parse_subtour(opts.subtour);
  config.a_sub = asub;

  const tspvqa::RunTrace trace = tspvqa::optimize(problem, config);

  std::ofstream out_file;
  std::ostream &out = open_output(opts.out_path, out_file);
  out << tspvqa::dump_line(tspvqa::trace_header(problem, config));
  for (const tspvqa::IterationRecord &record : trace.records) {
    out << tspvqa::dump_line(tspvqa::trace_iteration(record));
  }
  out << tspvqa::dump_line(tspvqa::trace_result(trace, config));
  out.flush();
  if (!out) {
    throw std::runtime_error("failed while writing the trace stream.");
  }
  return (trace.converged && trace.rounded.valid_tour()) ? 0 : 2;
}

int run_oracle(const SolveOptions &opts) {
  const tspvqa::ProblemFile file =
      tspvqa::load_problem_file(opts.problem_path);
  if (file.n > tspvqa::kMaxHeldKarpCities) {
    throw std::invalid_argument(
        "oracle: both solvers are capped at " +
        std::to_string(tspvqa::kMaxHeldKarpCities) + " cities; got " +
        std::to_string(file.n) + ".");
  }
  const double dii = opts.dii.value_or(file.diag_penalty.value_or(100.0));
  const tspvqa::DistanceMatrix problem =
      tspvqa::make_distance_matrix(file.n, file.distances, dii);
  std::ofstream out_file;
  std::ostream &out = open_output(opts.out_path, out_file);
  out << tspvqa::oracle_report(problem).dump() << "\n";
  out.flush();
  return 0;
}

int run_birkhoff(const SolveOptions &opts) {
  const tspvqa::RealMatrix m = tspvqa::load_matrix_file(opts.problem_path);
  const tspvqa::BirkhoffDecomposition dec = tspvqa::birkhoff_decompose(m);
  std::ofstream out_file;
  std::ostream &out = open_output(opts.out_path, out_file);
  out << tspvqa::birkhoff_report(dec).dump() << "\n";
  out.flush();
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Variational solver for travelling-salesman instances on "
               "simulated photonic meshes"};
  app.require_subcommand(1);

  SolveOptions solve_opts;
  CLI::App *solve = app.add_subcommand(
      "solve", "Run the variational solver on an instance");
  add_common_flags(solve, solve_opts);

  SolveOptions emulate_opts;
  emulate_opts.protocol = "projectors";
  CLI::App *emulate = app.add_subcommand(
      "emulate",
      "Run the solver through the sixteen-projector mesh emulation");
  add_common_flags(emulate, emulate_opts);
  emulate->add_option("--protocol", emulate_opts.protocol,
                      "Measurement pipeline: projectors or universal")
      ->check(CLI::IsMember({"projectors", "universal"}));

  SolveOptions oracle_opts;
  CLI::App *oracle = app.add_subcommand(
      "oracle", "Print classical exact solutions for an instance");
  oracle->add_option("problem", oracle_opts.problem_path,
                     "Instance file (JSON)")
      ->required();
  oracle->add_option("--dii", oracle_opts.dii,
                     "Self-loop penalty on the diagonal");
  oracle->add_option("--out", oracle_opts.out_path,
                     "Write the report here instead of stdout");

  SolveOptions birkhoff_opts;
  CLI::App *birkhoff = app.add_subcommand(
      "birkhoff",
      "Decompose a doubly-stochastic matrix into permutations");
  birkhoff->add_option("matrix", birkhoff_opts.problem_path,
                       "Matrix file (JSON)")
      ->required();
  birkhoff->add_option("--out", birkhoff_opts.out_path,
                       "Write the listing here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve->parsed()) return run_solve(solve_opts);
    if (emulate->parsed()) return run_solve(emulate_opts);
    if (oracle->parsed()) return run_oracle(oracle_opts);
    if (birkhoff->parsed()) return run_birkhoff(birkhoff_opts);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
  return 0;
}
