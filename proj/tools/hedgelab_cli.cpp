// Copyright 2026 The hedgelab Authors.
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

// hedgelab command-line driver. Talks to the library only through hedgelab.h.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hedgelab/hedgelab.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

struct CommonOptions {
  std::string algos = "hedge,bold-hedge";
  std::size_t n = 4;
  std::size_t horizon = 10000;
  std::string loss = "iid:q1";
  std::string delay = "zero";
  std::string eta = "auto14";
  std::size_t reps = 1;
  std::uint64_t seed = 0;
  std::size_t k = 10;
  double h_bound = 1.0;
  std::size_t threads = 0;
  std::string out = "-";
};

void AddCommon(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--algos", o.algos,
                  "comma list of hedge, fs, bold-hedge, bold-fs");
  cmd->add_option("--n", o.n, "number of experts (iid losses use 4)");
  cmd->add_option("--horizon", o.horizon, "rounds T");
  cmd->add_option("--loss", o.loss,
                  "iid:q1 | iid:q2 | iid:Q,... | switch:q2:k=10 | file:PATH");
  cmd->add_option("--delay", o.delay, "zero | fixed:D | poisson:L | file:PATH");
  cmd->add_option("--eta", o.eta, "auto14 | auto13 | VALUE");
  cmd->add_option("--seed", o.seed, "base seed");
  cmd->add_option("--k", o.k, "switch budget of the comparator");
  cmd->add_option("--H", o.h_bound, "loss bound H");
  cmd->add_option("--threads", o.threads, "worker count (0 = all cores)");
  cmd->add_option("--out", o.out, "output CSV path, - for stdout");
}

hl_experiment_config ToConfig(const CommonOptions& o) {
  hl_experiment_config c;
  hl_experiment_config_init(&c);
  c.algorithms = o.algos.c_str();
  c.num_experts = o.n;
  c.horizon = o.horizon;
  c.loss = o.loss.c_str();
  c.delay = o.delay.c_str();
  c.eta = o.eta.c_str();
  c.replications = o.reps;
  c.seed = o.seed;
  c.switches = o.k;
  c.h_bound = o.h_bound;
  c.threads = o.threads;
  return c;
}

int Report(hl_status status) {
  if (status == HL_OK) return kExitPass;
  std::fprintf(stderr, "hedgelab: %s: %s\n", hl_status_string(status),
               hl_last_error());
  return kExitConfig;
}

// Parses "A:B" into a window.
bool ParseWindow(const std::string& text, std::uint64_t* a, std::uint64_t* b) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return false;
  try {
    std::size_t used = 0;
    const std::string left = text.substr(0, colon);
    const std::string right = text.substr(colon + 1);
    if (left.empty() || right.empty() || left[0] == '-' || right[0] == '-') {
      return false;
    }
    *a = std::stoull(left, &used);
    if (used != left.size()) return false;
    *b = std::stoull(right, &used);
    return used == right.size();
  } catch (const std::exception&) {
    return false;
  }
}

void PrintLine(const char* line, void*) { std::printf("%s\n", line); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delayed-feedback hedging experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hl_version()));

  CommonOptions run_opts;
  std::vector<double> lambdas;
  std::string summary;
  CLI::App* run = app.add_subcommand("run", "replicated regret sweep");
  AddCommon(run, run_opts);
  run->add_option("--reps", run_opts.reps, "replications R");
  run->add_option("--lambdas", lambdas,
                  "mean delays to sweep (poisson or zero delay model)")
      ->delimiter(',');
  run->add_option("--summary", summary,
                  "per-lambda means path (default <out>.summary.csv)");

  CommonOptions trace_opts;
  trace_opts.algos = "fs";
  std::string window;
  CLI::App* trace = app.add_subcommand("trace", "weight evolution window");
  AddCommon(trace, trace_opts);
  trace->add_option("--window", window, "A:B, inclusive, 1-based")->required();

  std::string suite = "all";
  CLI::App* verify = app.add_subcommand("verify", "property suites");
  verify->add_option("suite", suite, "oracle | bounds | lemmas | all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  if (run->parsed()) {
    const hl_experiment_config c = ToConfig(run_opts);
    return Report(hl_run_sweep(&c, lambdas.empty() ? nullptr : lambdas.data(),
                               lambdas.size(), run_opts.out.c_str(),
                               summary.empty() ? nullptr : summary.c_str()));
  }
  if (trace->parsed()) {
    std::uint64_t a = 0, b = 0;
    if (!ParseWindow(window, &a, &b)) {
      std::fprintf(stderr, "hedgelab: --window: expected A:B, got '%s'\n",
                   window.c_str());
      return kExitConfig;
    }
    const hl_experiment_config c = ToConfig(trace_opts);
    return Report(hl_write_weight_trace(&c, a, b, trace_opts.out.c_str()));
  }
  int passed = 0;
  const hl_status status = hl_verify(suite.c_str(), PrintLine, nullptr, &passed);
  if (status != HL_OK) return Report(status);
  std::fflush(stdout);
  return passed ? kExitPass : kExitFailure;
}
