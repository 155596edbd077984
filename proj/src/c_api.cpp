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

#include "hedgelab/hedgelab.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hedgelab/bounds.hpp"
#include "hedgelab/errors.hpp"
#include "hedgelab/experiment.hpp"
#include "hedgelab/fixed_share.hpp"
#include "hedgelab/game.hpp"
#include "hedgelab/hedge.hpp"
#include "hedgelab/learning_rate.hpp"
#include "hedgelab/oracle.hpp"
#include "hedgelab/verify.hpp"

using namespace hedgelab;

struct hl_learner {
  std::variant<DelayedHedge, DelayedFixedShare> impl;
  std::size_t num_experts;
  Round round = 0;
  // Hedge only: which rounds have been revealed.
  std::vector<bool> revealed;
};

struct hl_trace {
  GameTrace trace;
};

namespace {

thread_local std::string last_error;

template <typename F>
hl_status Guard(F&& body) {
  try {
    body();
    last_error.clear();
    return HL_OK;
  } catch (const ConfigError& e) {
    last_error = e.what();
    return HL_ERR_CONFIG;
  } catch (const ParameterError& e) {
    last_error = e.what();
    return HL_ERR_PARAMETER;
  } catch (const BoundsViolation& e) {
    last_error = e.what();
    return HL_ERR_BOUNDS;
  } catch (const ProtocolViolation& e) {
    last_error = e.what();
    return HL_ERR_PROTOCOL;
  } catch (const CapacityError& e) {
    last_error = e.what();
    return HL_ERR_CAPACITY;
  } catch (const ParseError& e) {
    last_error = e.what();
    return HL_ERR_PARSE;
  } catch (const IoError& e) {
    last_error = e.what();
    return HL_ERR_IO;
  } catch (const std::exception& e) {
    last_error = e.what();
    return HL_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return HL_ERR_INTERNAL;
  }
}

void Require(bool ok, const char* what) {
  if (!ok) throw ParameterError(what);
}

Algorithm ToAlgorithm(hl_algorithm a) {
  switch (a) {
    case HL_HEDGE:
      return Algorithm::kHedge;
    case HL_FIXED_SHARE:
      return Algorithm::kFixedShare;
    case HL_BOLD_HEDGE:
      return Algorithm::kBoldHedge;
    case HL_BOLD_FIXED_SHARE:
      return Algorithm::kBoldFixedShare;
  }
  throw ParameterError("unknown algorithm id");
}

SimplexWeights PriorOrUniform(const double* prior, std::size_t n) {
  if (prior == nullptr) return SimplexWeights::Uniform(n);
  return SimplexWeights::FromProbabilities(std::span<const double>(prior, n));
}

std::vector<LossVector> LossRows(const double* losses, std::size_t horizon,
                                 std::size_t n) {
  std::vector<LossVector> rows;
  rows.reserve(horizon);
  for (std::size_t t = 0; t < horizon; ++t) {
    rows.emplace_back(std::vector<double>(losses + t * n, losses + (t + 1) * n));
  }
  return rows;
}

ExperimentConfig ToExperimentConfig(const hl_experiment_config* c) {
  Require(c != nullptr, "config is NULL");
  ExperimentConfig config;
  if (c->algorithms) config.algorithms = ParseAlgorithmList(c->algorithms);
  config.num_experts = c->num_experts;
  config.horizon = c->horizon;
  if (c->loss) config.loss = ParseLossSpec(c->loss);
  if (c->delay) config.delay = ParseDelaySpec(c->delay);
  if (c->eta) config.eta = ParseEtaSpec(c->eta);
  config.replications = c->replications;
  config.seed = c->seed;
  config.switches = c->switches;
  config.h_bound = c->h_bound;
  config.threads = c->threads;
  return config;
}

template <typename W>
void WithOutput(const char* path, W&& write) {
  if (path == nullptr || std::string(path) == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(std::string("cannot open '") + path + "' for writing");
  write(out);
  if (!out) throw IoError(std::string("write to '") + path + "' failed");
}

}  // namespace

extern "C" {

const char* hl_version(void) { return "1.0.0"; }

const char* hl_last_error(void) { return last_error.c_str(); }

const char* hl_status_string(hl_status status) {
  switch (status) {
    case HL_OK:
      return "ok";
    case HL_ERR_PARAMETER:
      return "parameter error";
    case HL_ERR_BOUNDS:
      return "bounds violation";
    case HL_ERR_PROTOCOL:
      return "protocol violation";
    case HL_ERR_CAPACITY:
      return "capacity exceeded";
    case HL_ERR_PARSE:
      return "parse error";
    case HL_ERR_IO:
      return "i/o error";
    case HL_ERR_CONFIG:
      return "configuration error";
    case HL_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

hl_status hl_learner_create(hl_algorithm algorithm, size_t num_experts,
                            const double* prior, double eta, double h_bound,
                            hl_learner** out) {
  return Guard([&] {
    Require(out != nullptr, "out is NULL");
    *out = nullptr;
    const SimplexWeights p = PriorOrUniform(prior, num_experts);
    if (algorithm == HL_HEDGE) {
      *out = new hl_learner{DelayedHedge(p, eta, h_bound), num_experts, 0, {}};
    } else if (algorithm == HL_FIXED_SHARE) {
      *out = new hl_learner{DelayedFixedShare(p, eta, h_bound), num_experts, 0, {}};
    } else {
      throw ParameterError("online learners are hedge or fixed share only");
    }
  });
}

void hl_learner_free(hl_learner* learner) { delete learner; }

hl_status hl_learner_predict(hl_learner* learner, double alpha, double* weights,
                             size_t num_experts) {
  return Guard([&] {
    Require(learner != nullptr && weights != nullptr, "NULL argument");
    Require(num_experts == learner->num_experts, "weight buffer size mismatch");
    const Round t = learner->round + 1;
    SimplexWeights w;
    if (auto* fs = std::get_if<DelayedFixedShare>(&learner->impl)) {
      w = fs->Predict(t, alpha < 0.0 ? 1.0 / static_cast<double>(t) : alpha);
    } else {
      w = std::get<DelayedHedge>(learner->impl).Predict();
      learner->revealed.push_back(false);
    }
    learner->round = t;
    std::copy(w.values().begin(), w.values().end(), weights);
  });
}

hl_status hl_learner_reveal(hl_learner* learner, const uint64_t* rounds,
                            const double* losses, size_t count) {
  return Guard([&] {
    Require(learner != nullptr, "learner is NULL");
    if (count == 0) return;
    Require(rounds != nullptr && losses != nullptr, "NULL argument");
    const std::size_t n = learner->num_experts;
    std::vector<RevealedLoss> arrivals;
    for (std::size_t i = 0; i < count; ++i) {
      arrivals.emplace_back(
          rounds[i], LossVector(std::vector<double>(losses + i * n, losses + (i + 1) * n)));
    }
    if (auto* fs = std::get_if<DelayedFixedShare>(&learner->impl)) {
      fs->RevealSweep(learner->round, arrivals);
      return;
    }
    auto& hedge = std::get<DelayedHedge>(learner->impl);
    std::vector<Round> seen;
    for (const auto& [tau, loss] : arrivals) {
      if (tau == 0 || tau > learner->round) {
        throw ProtocolViolation("round " + std::to_string(tau) +
                                " revealed at round " +
                                std::to_string(learner->round));
      }
      if (learner->revealed[tau - 1] ||
          std::find(seen.begin(), seen.end(), tau) != seen.end()) {
        throw ProtocolViolation("round " + std::to_string(tau) + " revealed twice");
      }
      loss.CheckBounds(hedge.h_bound(), tau);
      seen.push_back(tau);
    }
    // Ascending round order makes the floating-point sums order-free.
    std::sort(arrivals.begin(), arrivals.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [tau, loss] : arrivals) {
      hedge.Reveal(loss, tau);
      learner->revealed[tau - 1] = true;
    }
  });
}

uint64_t hl_learner_round(const hl_learner* learner) {
  return learner ? learner->round : 0;
}

void hl_game_options_init(hl_game_options* options) {
  if (options == nullptr) return;
  options->h_bound = 1.0;
  options->eta_policy = HL_ETA_AUTO14;
  options->eta = 0.0;
  options->expected_delay = 0.0;
  options->prior = nullptr;
  options->alpha = -1.0;
  options->prune_memory = 0;
}

hl_status hl_run_game(hl_algorithm algorithm, const double* losses,
                      size_t horizon, size_t num_experts, const int64_t* delays,
                      const hl_game_options* options, hl_trace** out) {
  return Guard([&] {
    Require(out != nullptr, "out is NULL");
    *out = nullptr;
    Require(losses != nullptr || horizon == 0, "losses is NULL");
    hl_game_options defaults;
    hl_game_options_init(&defaults);
    const hl_game_options& o = options ? *options : defaults;
    GameConfig config;
    config.h_bound = o.h_bound;
    switch (o.eta_policy) {
      case HL_ETA_EXPLICIT:
        config.eta_policy = EtaPolicy::kExplicit;
        break;
      case HL_ETA_AUTO13:
        config.eta_policy = EtaPolicy::kAuto13;
        break;
      case HL_ETA_AUTO14:
        config.eta_policy = EtaPolicy::kAuto14;
        break;
      default:
        throw ParameterError("unknown eta policy");
    }
    config.eta = o.eta;
    config.expected_delay = o.expected_delay;
    if (o.prior) config.prior = PriorOrUniform(o.prior, num_experts);
    if (o.alpha >= 0.0) config.alpha = AlphaSchedule::Constant(o.alpha);
    config.prune_memory = o.prune_memory != 0;

    const auto rows = LossRows(losses, horizon, num_experts);
    const DelaySchedule schedule =
        delays ? DelaySchedule(std::span<const std::int64_t>(delays, horizon))
               : DelaySchedule::Zero(horizon);
    *out = new hl_trace{RunGame(ToAlgorithm(algorithm), rows, schedule, config)};
  });
}

void hl_trace_free(hl_trace* trace) { delete trace; }

size_t hl_trace_horizon(const hl_trace* trace) {
  return trace ? trace->trace.horizon() : 0;
}

size_t hl_trace_num_experts(const hl_trace* trace) {
  return trace ? trace->trace.num_experts : 0;
}

double hl_trace_total_loss(const hl_trace* trace) {
  return trace ? trace->trace.total_loss : 0.0;
}

double hl_trace_eta(const hl_trace* trace) {
  return trace ? trace->trace.eta : 0.0;
}

hl_status hl_trace_weights(const hl_trace* trace, uint64_t t, double* weights,
                           size_t num_experts) {
  return Guard([&] {
    Require(trace != nullptr && weights != nullptr, "NULL argument");
    Require(t >= 1 && t <= trace->trace.horizon(), "round outside [1, T]");
    Require(num_experts == trace->trace.num_experts, "buffer size mismatch");
    const auto w = trace->trace.Weights(t);
    std::copy(w.begin(), w.end(), weights);
  });
}

hl_status hl_trace_round_losses(const hl_trace* trace, double* out,
                                size_t horizon) {
  return Guard([&] {
    Require(trace != nullptr && out != nullptr, "NULL argument");
    Require(horizon == trace->trace.horizon(), "buffer size mismatch");
    std::copy(trace->trace.round_loss.begin(), trace->trace.round_loss.end(), out);
  });
}

hl_status hl_trace_expert_losses(const hl_trace* trace, double* out,
                                 size_t num_experts) {
  return Guard([&] {
    Require(trace != nullptr && out != nullptr, "NULL argument");
    Require(num_experts == trace->trace.num_experts, "buffer size mismatch");
    std::copy(trace->trace.expert_loss.begin(), trace->trace.expert_loss.end(), out);
  });
}

hl_status hl_optimal_eta(double h_bound, size_t num_experts, double length,
                         double* out) {
  return Guard([&] {
    Require(out != nullptr, "out is NULL");
    *out = OptimalEta(h_bound, num_experts, length);
  });
}

hl_status hl_eta_delayed(double h_bound, size_t num_experts, double horizon,
                         double expected_delay, double* out) {
  return Guard([&] {
    Require(out != nullptr, "out is NULL");
    *out = EtaDelayed(h_bound, num_experts, horizon, expected_delay);
  });
}

hl_status hl_hedge_regret_bound(double eta, double h_bound, double horizon,
                                double sum_delays, double num_experts,
                                double* out) {
  return Guard([&] {
    Require(out != nullptr, "out is NULL");
    *out = HedgeRegretBound(eta, h_bound, horizon, sum_delays, num_experts);
  });
}

hl_status hl_fs_regret_bound(double eta, double h_bound, double horizon,
                             double sum_delays, double num_experts,
                             double switches, double* out) {
  return Guard([&] {
    Require(out != nullptr, "out is NULL");
    *out = FixedShareRegretBound(eta, h_bound, horizon, sum_delays, num_experts,
                                 switches);
  });
}

hl_status hl_mixloss(const double* weights, const double* losses,
                     size_t num_experts, double eta, double* out) {
  return Guard([&] {
    Require(weights != nullptr && losses != nullptr && out != nullptr,
            "NULL argument");
    *out = MixLoss(std::span<const double>(weights, num_experts),
                   std::span<const double>(losses, num_experts), eta);
  });
}

hl_status hl_best_switching_sequence(const double* losses, size_t horizon,
                                     size_t num_experts, size_t max_switches,
                                     double* loss_out, size_t* experts) {
  return Guard([&] {
    Require(losses != nullptr && loss_out != nullptr, "NULL argument");
    const auto rows = LossRows(losses, horizon, num_experts);
    const auto path = oracle::BestSwitchingSequence(rows, max_switches);
    *loss_out = path.loss;
    if (experts) std::copy(path.experts.begin(), path.experts.end(), experts);
  });
}

void hl_experiment_config_init(hl_experiment_config* config) {
  if (config == nullptr) return;
  config->algorithms = "hedge,bold-hedge";
  config->num_experts = 4;
  config->horizon = 10000;
  config->loss = "iid:q1";
  config->delay = "zero";
  config->eta = "auto14";
  config->replications = 1;
  config->seed = 0;
  config->switches = 10;
  config->h_bound = 1.0;
  config->threads = 0;
}

hl_status hl_run_sweep(const hl_experiment_config* config,
                       const double* lambdas, size_t lambda_count,
                       const char* out_path, const char* summary_path) {
  return Guard([&] {
    const ExperimentConfig c = ToExperimentConfig(config);
    std::vector<double> grid;
    if (lambdas) grid.assign(lambdas, lambdas + lambda_count);
    const SweepResult result = RunSweep(c, grid);
    WithOutput(out_path, [&](std::ostream& os) { WriteResultsCsv(os, c, result); });
    const bool to_stdout = out_path == nullptr || std::string(out_path) == "-";
    if (!to_stdout) {
      const std::string summary =
          summary_path ? std::string(summary_path) : SummaryPathFor(out_path);
      WithOutput(summary.c_str(),
                 [&](std::ostream& os) { WriteSummaryCsv(os, c, result); });
    }
  });
}

hl_status hl_write_weight_trace(const hl_experiment_config* config,
                                uint64_t t_start, uint64_t t_end,
                                const char* out_path) {
  return Guard([&] {
    const ExperimentConfig c = ToExperimentConfig(config);
    c.Validate();
    if (t_start < 1 || t_end > c.horizon || t_start > t_end) {
      throw ParameterError("window outside [1, T]");
    }
    WithOutput(out_path, [&](std::ostream& os) {
      WriteWeightTrace(os, c, t_start, t_end);
    });
  });
}

hl_status hl_verify(const char* suite, hl_line_sink sink, void* user,
                    int* passed) {
  return Guard([&] {
    Require(suite != nullptr && passed != nullptr, "NULL argument");
    *passed = 0;
    const VerifyReport report = RunVerify(ParseVerifySuite(suite));
    if (sink) {
      for (const auto& check : report.checks) sink(check.Format().c_str(), user);
    }
    *passed = report.passed() ? 1 : 0;
  });
}

}  // extern "C"
