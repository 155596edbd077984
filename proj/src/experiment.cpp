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

#include "hedgelab/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <ostream>
#include <thread>

#include "hedgelab/csv_io.hpp"
#include "hedgelab/errors.hpp"
#include "hedgelab/oracle.hpp"
#include "json.hpp"

namespace hedgelab {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double ParseNumber(std::string_view text, const std::string& field) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError(field + ": '" + std::string(text) + "' is not a number");
  }
  return v;
}

std::vector<double> ParseMeans(std::string_view text) {
  if (text == "q1") return kQ1;
  if (text == "q2") return kQ2;
  std::vector<double> q;
  for (std::string_view part : SplitCsvLine(text)) {
    q.push_back(ParseNumber(part, "loss"));
  }
  return q;
}

nlohmann::ordered_json ConfigJson(const ExperimentConfig& config) {
  nlohmann::ordered_json j;
  std::vector<std::string> algos;
  for (Algorithm a : config.algorithms) algos.emplace_back(AlgorithmName(a));
  j["algorithms"] = algos;
  j["n"] = config.num_experts;
  j["horizon"] = config.horizon;
  j["loss"] = DescribeLossModel(config.loss);
  j["delay"] = DescribeDelayModel(config.delay);
  switch (config.eta.policy) {
    case EtaPolicy::kAuto13:
      j["eta"] = "auto13";
      break;
    case EtaPolicy::kAuto14:
      j["eta"] = "auto14";
      break;
    case EtaPolicy::kExplicit:
      j["eta"] = config.eta.value;
      break;
  }
  j["bold_eta"] = "per-copy optimal (2/H)sqrt(2 ln N / S)";
  j["prior"] = "uniform";
  j["alpha"] = "1/t";
  j["reps"] = config.replications;
  j["seed"] = config.seed;
  j["k"] = config.switches;
  j["H"] = config.h_bound;
  j["rng"] = "mt19937_64 via seed_seq(seed+rep, stream)";
  j["poisson"] = "inversion for lambda<=30, PTRS above";
  j["delay_clamp"] = "D_t <- min(D_t, T - t)";
  return j;
}

double Mean(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double StandardError(const std::vector<double>& xs) {
  if (xs.size() < 2) return kNaN;
  const double m = Mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  const double n = static_cast<double>(xs.size());
  return std::sqrt(ss / (n - 1.0) / n);
}

struct Task {
  double lambda;
  DelayModel delay;
  std::size_t rep;
};

std::vector<ResultRow> RunTask(const ExperimentConfig& config,
                               const Task& task) {
  const Realization data = MakeRealization(config, task.delay, task.rep);
  const double nominal = NominalDelay(task.delay, config.horizon);
  const GameConfig game = MakeGameConfig(config, nominal, config.seed + task.rep);
  const double best_switching =
      oracle::BestSwitchingSequence(data.losses, config.switches).loss;
  double best_expert = std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n < config.num_experts; ++n) {
    double total = 0.0;
    for (const LossVector& l : data.losses) total += l[n];
    best_expert = std::min(best_expert, total);
  }

  std::vector<ResultRow> rows;
  for (Algorithm algorithm : config.algorithms) {
    const GameTrace trace = RunGame(algorithm, data.losses, data.delays, game);
    ResultRow row;
    row.lambda = task.lambda;
    row.rep = task.rep;
    row.algorithm = algorithm;
    row.total_loss = trace.total_loss;
    row.regret_best = trace.total_loss - best_expert;
    row.regret_switch_k = trace.total_loss - best_switching;
    row.regret_planted = data.planted_loss.has_value()
                             ? trace.total_loss - *data.planted_loss
                             : kNaN;
    row.sum_delays = data.delays.SumDelays();
    row.clamped = data.delays.clamped_count();
    row.eta = trace.eta;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::string DescribeLossModel(const LossModel& model) {
  auto means = [&] {
    if (model.q == kQ1) return std::string("q1");
    if (model.q == kQ2) return std::string("q2");
    std::string s;
    for (std::size_t i = 0; i < model.q.size(); ++i) {
      if (i) s += ',';
      s += FormatDouble(model.q[i]);
    }
    return s;
  };
  switch (model.kind) {
    case LossModel::Kind::kIidBernoulli:
      return "iid:" + means();
    case LossModel::Kind::kSwitchingBernoulli:
      return "switch:" + means() + ":k=" + std::to_string(model.switches);
    case LossModel::Kind::kFromFile:
      return "file:" + model.path;
  }
  return "unknown";
}

std::string DescribeDelayModel(const DelayModel& model) {
  switch (model.kind) {
    case DelayModel::Kind::kZero:
      return "zero";
    case DelayModel::Kind::kFixed:
      return "fixed:" + FormatDouble(model.parameter);
    case DelayModel::Kind::kPoisson:
      return "poisson:" + FormatDouble(model.parameter);
    case DelayModel::Kind::kFromFile:
      return "file:" + model.path;
  }
  return "unknown";
}

LossModel ParseLossSpec(std::string_view spec) {
  LossModel model;
  if (spec.starts_with("iid:")) {
    model.kind = LossModel::Kind::kIidBernoulli;
    model.q = ParseMeans(spec.substr(4));
  } else if (spec.starts_with("switch:")) {
    model.kind = LossModel::Kind::kSwitchingBernoulli;
    std::string_view rest = spec.substr(7);
    const std::size_t colon = rest.rfind(':');
    if (colon == std::string_view::npos || !rest.substr(colon + 1).starts_with("k=")) {
      throw ConfigError("loss: switching spec needs ':k=K', got '" +
                        std::string(spec) + "'");
    }
    model.q = ParseMeans(rest.substr(0, colon));
    const double k = ParseNumber(rest.substr(colon + 3), "loss");
    if (!(k >= 0.0) || k != std::floor(k)) {
      throw ConfigError("loss: K must be a nonnegative integer");
    }
    model.switches = static_cast<std::size_t>(k);
  } else if (spec.starts_with("file:")) {
    model.kind = LossModel::Kind::kFromFile;
    model.path = std::string(spec.substr(5));
    if (model.path.empty()) throw ConfigError("loss: empty file path");
  } else {
    throw ConfigError("loss: unknown spec '" + std::string(spec) + "'");
  }
  for (double q : model.q) {
    if (!(q >= 0.0 && q <= 1.0)) throw ConfigError("loss: mean outside [0, 1]");
  }
  return model;
}

DelayModel ParseDelaySpec(std::string_view spec) {
  DelayModel model;
  if (spec == "zero") {
    model.kind = DelayModel::Kind::kZero;
  } else if (spec.starts_with("fixed:")) {
    model.kind = DelayModel::Kind::kFixed;
    model.parameter = ParseNumber(spec.substr(6), "delay");
    if (!(model.parameter >= 0.0) || model.parameter != std::floor(model.parameter)) {
      throw ConfigError("delay: fixed delay must be a nonnegative integer");
    }
  } else if (spec.starts_with("poisson:")) {
    model.kind = DelayModel::Kind::kPoisson;
    model.parameter = ParseNumber(spec.substr(8), "delay");
    if (!(model.parameter >= 0.0) || !std::isfinite(model.parameter)) {
      throw ConfigError("delay: Poisson mean must be nonnegative");
    }
  } else if (spec.starts_with("file:")) {
    model.kind = DelayModel::Kind::kFromFile;
    model.path = std::string(spec.substr(5));
    if (model.path.empty()) throw ConfigError("delay: empty file path");
  } else {
    throw ConfigError("delay: unknown spec '" + std::string(spec) + "'");
  }
  return model;
}

EtaChoice ParseEtaSpec(std::string_view spec) {
  if (spec == "auto14") return {EtaPolicy::kAuto14, 0.0};
  if (spec == "auto13") return {EtaPolicy::kAuto13, 0.0};
  const double v = ParseNumber(spec, "eta");
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ConfigError("eta: must be auto14, auto13 or a positive number");
  }
  return {EtaPolicy::kExplicit, v};
}

std::vector<Algorithm> ParseAlgorithmList(std::string_view spec) {
  std::vector<Algorithm> out;
  for (std::string_view name : SplitCsvLine(spec)) {
    try {
      out.push_back(ParseAlgorithm(name));
    } catch (const ParameterError& e) {
      throw ConfigError(std::string("algos: ") + e.what());
    }
  }
  return out;
}

std::string ExperimentConfig::ToJson() const { return ConfigJson(*this).dump(); }

void ExperimentConfig::Validate() const {
  if (algorithms.empty()) throw ConfigError("algos: at least one algorithm");
  if (num_experts == 0) throw ConfigError("n: must be >= 1");
  if (horizon == 0) throw ConfigError("horizon: must be >= 1");
  if (replications == 0) throw ConfigError("reps: must be >= 1");
  if (!(h_bound > 0.0) || !std::isfinite(h_bound)) {
    throw ConfigError("H: must be positive");
  }
  if (loss.kind != LossModel::Kind::kFromFile) {
    if (loss.q.size() != num_experts) {
      throw ConfigError("loss: " + std::to_string(loss.q.size()) +
                        " Bernoulli means for n = " +
                        std::to_string(num_experts));
    }
    if (h_bound < 1.0) throw ConfigError("H: Bernoulli losses need H >= 1");
  }
  if (loss.kind == LossModel::Kind::kSwitchingBernoulli &&
      loss.switches >= horizon) {
    throw ConfigError("loss: K must be below the horizon");
  }
  if (eta.policy == EtaPolicy::kExplicit && !(eta.value > 0.0)) {
    throw ConfigError("eta: must be positive");
  }
}

double NominalDelay(const DelayModel& model, std::size_t horizon) {
  switch (model.kind) {
    case DelayModel::Kind::kZero:
      return 0.0;
    case DelayModel::Kind::kFixed:
    case DelayModel::Kind::kPoisson:
      return model.parameter;
    case DelayModel::Kind::kFromFile:
      return GenerateDelays(model, horizon, 0).MeanRawDelay();
  }
  return 0.0;
}

Realization MakeRealization(const ExperimentConfig& config,
                            const DelayModel& delay, std::size_t replication) {
  const std::uint64_t seed = config.seed + replication;
  Realization data;
  switch (config.loss.kind) {
    case LossModel::Kind::kIidBernoulli:
      data.losses = GenerateIidLosses(config.loss.q, config.horizon, seed);
      break;
    case LossModel::Kind::kSwitchingBernoulli: {
      SwitchingLosses s = GenerateSwitchingLosses(
          config.loss.q, config.loss.switches, config.horizon, seed);
      data.losses = std::move(s.losses);
      data.planted_loss = s.planted_loss;
      break;
    }
    case LossModel::Kind::kFromFile:
      data.losses = LoadLosses(config.loss.path, config.h_bound);
      if (data.losses.size() != config.horizon) {
        throw ConfigError("horizon: loss file has " +
                          std::to_string(data.losses.size()) + " rounds, not " +
                          std::to_string(config.horizon));
      }
      if (data.losses.front().size() != config.num_experts) {
        throw ConfigError("n: loss file has " +
                          std::to_string(data.losses.front().size()) +
                          " experts");
      }
      break;
  }
  data.delays = GenerateDelays(delay, config.horizon, seed);
  return data;
}

GameConfig MakeGameConfig(const ExperimentConfig& config, double nominal_delay,
                          std::uint64_t seed) {
  GameConfig game;
  game.h_bound = config.h_bound;
  game.eta_policy = config.eta.policy;
  game.eta = config.eta.value;
  game.expected_delay = nominal_delay;
  game.seed = seed;
  return game;
}

std::size_t ResolveThreads(std::size_t requested) {
  if (const char* env = std::getenv("HEDGELAB_THREADS")) {
    std::size_t v = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size() && v > 0) return v;
  }
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

SweepResult RunSweep(const ExperimentConfig& config,
                     const std::vector<double>& lambdas) {
  config.Validate();
  SweepResult result;
  result.lambdas = lambdas;

  std::vector<Task> tasks;
  if (lambdas.empty()) {
    const double nominal = NominalDelay(config.delay, config.horizon);
    for (std::size_t r = 0; r < config.replications; ++r) {
      tasks.push_back({nominal, config.delay, r});
    }
  } else {
    if (config.delay.kind != DelayModel::Kind::kPoisson &&
        config.delay.kind != DelayModel::Kind::kZero) {
      throw ConfigError("lambdas: a lambda grid needs a Poisson delay model");
    }
    for (double lambda : lambdas) {
      if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw ConfigError("lambdas: values must be nonnegative");
      }
      DelayModel model{DelayModel::Kind::kPoisson, lambda, {}};
      for (std::size_t r = 0; r < config.replications; ++r) {
        tasks.push_back({lambda, model, r});
      }
    }
  }

  // Workers pull task indices; results land in their task's slot so the
  // merge order never depends on scheduling.
  std::vector<std::vector<ResultRow>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::mutex failure_mutex;
  auto worker = [&] {
    while (!failed.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        slots[i] = RunTask(config, tasks[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        failed.store(true);
      }
    }
  };
  const std::size_t workers =
      std::min(ResolveThreads(config.threads), std::max<std::size_t>(tasks.size(), 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (auto& slot : slots) {
    for (auto& row : slot) result.rows.push_back(row);
  }

  // Rows are grouped by lambda in task order.
  const std::size_t per_lambda = config.replications * config.algorithms.size();
  for (std::size_t start = 0; start < result.rows.size(); start += per_lambda) {
    for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
      std::vector<double> best, switching, planted, clamped;
      for (std::size_t r = 0; r < config.replications; ++r) {
        const ResultRow& row =
            result.rows[start + r * config.algorithms.size() + a];
        best.push_back(row.regret_best);
        switching.push_back(row.regret_switch_k);
        planted.push_back(row.regret_planted);
        clamped.push_back(static_cast<double>(row.clamped));
      }
      SummaryRow s;
      s.lambda = result.rows[start].lambda;
      s.algorithm = config.algorithms[a];
      s.reps = config.replications;
      s.mean_regret_best = Mean(best);
      s.se_regret_best = StandardError(best);
      s.mean_regret_switch_k = Mean(switching);
      s.se_regret_switch_k = StandardError(switching);
      s.mean_regret_planted = Mean(planted);
      s.se_regret_planted = StandardError(planted);
      s.mean_clamped = Mean(clamped);
      result.summary.push_back(s);
    }
  }
  return result;
}

void WriteResultsCsv(std::ostream& out, const ExperimentConfig& config,
                     const SweepResult& result) {
  auto j = ConfigJson(config);
  if (!result.lambdas.empty()) j["lambdas"] = result.lambdas;
  out << "# " << j.dump() << '\n';
  out << "lambda,rep,algo,regret_best,regret_switch_k,H_T,sum_delays,eta\n";
  for (const ResultRow& r : result.rows) {
    out << FormatDouble(r.lambda) << ',' << r.rep << ','
        << AlgorithmName(r.algorithm) << ',' << FormatDouble(r.regret_best)
        << ',' << FormatDouble(r.regret_switch_k) << ','
        << FormatDouble(r.total_loss) << ',' << r.sum_delays << ','
        << FormatDouble(r.eta) << '\n';
  }
}

void WriteSummaryCsv(std::ostream& out, const ExperimentConfig& config,
                     const SweepResult& result) {
  auto j = ConfigJson(config);
  if (!result.lambdas.empty()) j["lambdas"] = result.lambdas;
  out << "# " << j.dump() << '\n';
  out << "lambda,algo,reps,mean_regret_best,se_regret_best,"
         "mean_regret_switch_k,se_regret_switch_k,mean_regret_planted,"
         "se_regret_planted,mean_clamped_delays\n";
  for (const SummaryRow& s : result.summary) {
    out << FormatDouble(s.lambda) << ',' << AlgorithmName(s.algorithm) << ','
        << s.reps << ',' << FormatDouble(s.mean_regret_best) << ','
        << FormatDouble(s.se_regret_best) << ','
        << FormatDouble(s.mean_regret_switch_k) << ','
        << FormatDouble(s.se_regret_switch_k) << ','
        << FormatDouble(s.mean_regret_planted) << ','
        << FormatDouble(s.se_regret_planted) << ','
        << FormatDouble(s.mean_clamped) << '\n';
  }
}

std::string SummaryPathFor(const std::string& results_path) {
  const std::string ext = ".csv";
  if (results_path.size() >= ext.size() &&
      results_path.compare(results_path.size() - ext.size(), ext.size(), ext) == 0) {
    return results_path.substr(0, results_path.size() - ext.size()) +
           ".summary.csv";
  }
  return results_path + ".summary.csv";
}

void WriteWeightTrace(std::ostream& out, const ExperimentConfig& config,
                      Round t_start, Round t_end) {
  config.Validate();
  if (config.algorithms.size() != 1) {
    throw ConfigError("algos: trace needs exactly one algorithm");
  }
  if (t_start < 1 || t_end > config.horizon || t_start > t_end) {
    throw ParameterError("window " + std::to_string(t_start) + ":" +
                         std::to_string(t_end) + " outside [1, " +
                         std::to_string(config.horizon) + "]");
  }
  const Realization data = MakeRealization(config, config.delay, 0);
  const GameConfig game = MakeGameConfig(
      config, NominalDelay(config.delay, config.horizon), config.seed);
  const GameTrace trace =
      RunGame(config.algorithms.front(), data.losses, data.delays, game);
  auto j = ConfigJson(config);
  j["window"] = {t_start, t_end};
  out << "# " << j.dump() << '\n';
  out << "t,expert,weight\n";
  for (Round t = t_start; t <= t_end; ++t) {
    const auto w = trace.Weights(t);
    for (std::size_t n = 0; n < w.size(); ++n) {
      out << t << ',' << n + 1 << ',' << FormatDouble(w[n]) << '\n';
    }
  }
}

}  // namespace hedgelab
