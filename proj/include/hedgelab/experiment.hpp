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

#ifndef HEDGELAB_EXPERIMENT_HPP_
#define HEDGELAB_EXPERIMENT_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hedgelab/environments.hpp"
#include "hedgelab/errors.hpp"
#include "hedgelab/game.hpp"

namespace hedgelab {

// Raised for invalid experiment configurations; the message names the field.
class ConfigError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

struct EtaChoice {
  EtaPolicy policy = EtaPolicy::kAuto14;
  double value = 0.0;
};

struct ExperimentConfig {
  std::vector<Algorithm> algorithms = {Algorithm::kHedge,
                                       Algorithm::kBoldHedge};
  std::size_t num_experts = 4;
  std::size_t horizon = 10000;
  LossModel loss{LossModel::Kind::kIidBernoulli, kQ1, 0, {}};
  DelayModel delay;
  EtaChoice eta;
  std::size_t replications = 1;
  std::uint64_t seed = 0;
  // K of the switching comparator.
  std::size_t switches = 10;
  double h_bound = 1.0;
  // 0 picks the hardware concurrency; HEDGELAB_THREADS overrides.
  std::size_t threads = 0;

  // One-line JSON echo of every field.
  std::string ToJson() const;
  // Throws ConfigError naming the offending field.
  void Validate() const;
};

// "iid:q1", "iid:q2", "iid:0.1,0.2,...", "switch:q2:k=10",
// "switch:0.1,0.3:k=3", "file:PATH".
LossModel ParseLossSpec(std::string_view spec);
// "zero", "fixed:D", "poisson:L", "file:PATH".
DelayModel ParseDelaySpec(std::string_view spec);
// "auto14", "auto13", or a positive number.
EtaChoice ParseEtaSpec(std::string_view spec);
// Comma-separated algorithm names.
std::vector<Algorithm> ParseAlgorithmList(std::string_view spec);
std::string DescribeLossModel(const LossModel& model);
std::string DescribeDelayModel(const DelayModel& model);

// The mean delay a learner is told: D, lambda, or the mean of a file.
double NominalDelay(const DelayModel& model, std::size_t horizon);

// The data of one replication, shared by every algorithm.
struct Realization {
  std::vector<LossVector> losses;
  DelaySchedule delays;
  // Present for switching losses.
  std::optional<double> planted_loss;
};

// Seed of replication r is seed + r; losses and delays use separate streams.
Realization MakeRealization(const ExperimentConfig& config,
                            const DelayModel& delay, std::size_t replication);

GameConfig MakeGameConfig(const ExperimentConfig& config, double nominal_delay,
                          std::uint64_t seed);

struct ResultRow {
  double lambda = 0.0;
  std::size_t rep = 0;
  Algorithm algorithm = Algorithm::kHedge;
  double regret_best = 0.0;
  double regret_switch_k = 0.0;
  // NaN unless the losses were generated with a planted switch sequence.
  double regret_planted = 0.0;
  double total_loss = 0.0;
  std::uint64_t sum_delays = 0;
  std::size_t clamped = 0;
  double eta = 0.0;
};

struct SummaryRow {
  double lambda = 0.0;
  Algorithm algorithm = Algorithm::kHedge;
  std::size_t reps = 0;
  double mean_regret_best = 0.0;
  double se_regret_best = 0.0;
  double mean_regret_switch_k = 0.0;
  double se_regret_switch_k = 0.0;
  double mean_regret_planted = 0.0;
  double se_regret_planted = 0.0;
  double mean_clamped = 0.0;
};

struct SweepResult {
  // The lambda grid that was run; empty when the delay model ran as given.
  std::vector<double> lambdas;
  // Ordered by lambda, then replication, then algorithm as configured.
  std::vector<ResultRow> rows;
  // Ordered by lambda, then algorithm.
  std::vector<SummaryRow> summary;
};

// Runs every configured algorithm on the same realization for each
// (lambda, replication). An empty lambda list runs the delay model as given;
// otherwise each lambda replaces the Poisson mean (the delay model must be
// Poisson or zero).
SweepResult RunSweep(const ExperimentConfig& config,
                     const std::vector<double>& lambdas);

// Worker count after applying HEDGELAB_THREADS.
std::size_t ResolveThreads(std::size_t requested);

// `# {config json}` then `lambda,rep,algo,regret_best,regret_switch_k,H_T,
// sum_delays,eta`.
void WriteResultsCsv(std::ostream& out, const ExperimentConfig& config,
                     const SweepResult& result);
// `# {config json}` then `lambda,algo,reps,mean_regret_best,...`.
void WriteSummaryCsv(std::ostream& out, const ExperimentConfig& config,
                     const SweepResult& result);
// "out.csv" -> "out.summary.csv".
std::string SummaryPathFor(const std::string& results_path);

// Weights of the single configured algorithm on replication 0, rows
// `t,expert,weight` for t in [t_start, t_end].
void WriteWeightTrace(std::ostream& out, const ExperimentConfig& config,
                      Round t_start, Round t_end);

}  // namespace hedgelab

#endif  // HEDGELAB_EXPERIMENT_HPP_
