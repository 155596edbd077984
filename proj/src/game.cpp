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

#include "hedgelab/game.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <variant>

#include "hedgelab/errors.hpp"
#include "hedgelab/fixed_share.hpp"
#include "hedgelab/hedge.hpp"
#include "hedgelab/learning_rate.hpp"

namespace hedgelab {

std::string_view AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kHedge:
      return "hedge";
    case Algorithm::kFixedShare:
      return "fs";
    case Algorithm::kBoldHedge:
      return "bold-hedge";
    case Algorithm::kBoldFixedShare:
      return "bold-fs";
  }
  return "unknown";
}

Algorithm ParseAlgorithm(std::string_view name) {
  if (name == "hedge") return Algorithm::kHedge;
  if (name == "fs" || name == "fixed-share") return Algorithm::kFixedShare;
  if (name == "bold-hedge") return Algorithm::kBoldHedge;
  if (name == "bold-fs" || name == "bold-fixed-share") {
    return Algorithm::kBoldFixedShare;
  }
  throw ParameterError("unknown algorithm '" + std::string(name) + "'");
}

AlphaSchedule AlphaSchedule::Harmonic() { return AlphaSchedule(); }

AlphaSchedule AlphaSchedule::Constant(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ParameterError("switch probability outside [0, 1]");
  }
  AlphaSchedule s;
  s.kind_ = Kind::kConstant;
  s.constant_ = alpha;
  return s;
}

AlphaSchedule AlphaSchedule::Explicit(std::vector<double> values) {
  if (values.empty()) throw ParameterError("empty alpha schedule");
  for (double a : values) {
    if (!(a >= 0.0 && a <= 1.0)) {
      throw ParameterError("switch probability outside [0, 1]");
    }
  }
  AlphaSchedule s;
  s.kind_ = Kind::kExplicit;
  s.values_ = std::move(values);
  return s;
}

double AlphaSchedule::operator()(Round t) const {
  switch (kind_) {
    case Kind::kHarmonic:
      return 1.0 / static_cast<double>(t);
    case Kind::kConstant:
      return constant_;
    case Kind::kExplicit:
      return t <= values_.size() ? values_[t - 1] : values_.back();
  }
  return 0.0;
}

std::string AlphaSchedule::Describe() const {
  switch (kind_) {
    case Kind::kHarmonic:
      return "harmonic";
    case Kind::kConstant:
      return "constant:" + std::to_string(constant_);
    case Kind::kExplicit:
      return "explicit[" + std::to_string(values_.size()) + "]";
  }
  return "unknown";
}

double ResolveEta(const GameConfig& config, std::size_t num_experts,
                  std::size_t horizon) {
  if (config.eta_policy == EtaPolicy::kExplicit) {
    if (!(config.eta > 0.0) || !std::isfinite(config.eta)) {
      throw ParameterError("learning rate must be positive");
    }
    return config.eta;
  }
  if (num_experts == 1) return 1.0;
  const auto t = static_cast<double>(horizon);
  if (config.eta_policy == EtaPolicy::kAuto13) {
    return OptimalEta(config.h_bound, num_experts, t);
  }
  return EtaDelayed(config.h_bound, num_experts, t, config.expected_delay);
}

std::vector<std::vector<Round>> BoldPartition(const DelaySchedule& delays) {
  std::vector<std::vector<Round>> copies;
  // Reveal round of each copy's last member.
  std::vector<Round> busy_until;
  for (Round t = 1; t <= delays.horizon(); ++t) {
    std::size_t c = 0;
    while (c < copies.size() && !(busy_until[c] < t)) ++c;
    if (c == copies.size()) {
      copies.emplace_back();
      busy_until.push_back(0);
    }
    copies[c].push_back(t);
    busy_until[c] = delays.reveal_round(t);
  }
  return copies;
}

namespace {

std::size_t ValidateGame(std::span<const LossVector> losses,
                         const DelaySchedule& delays, double h_bound) {
  if (losses.empty()) throw ParameterError("horizon zero");
  if (losses.size() != delays.horizon()) {
    throw ParameterError("loss horizon " + std::to_string(losses.size()) +
                         " differs from delay horizon " +
                         std::to_string(delays.horizon()));
  }
  if (!(h_bound > 0.0) || !std::isfinite(h_bound)) {
    throw ParameterError("loss bound H must be positive");
  }
  const std::size_t n = losses.front().size();
  if (n == 0) throw ParameterError("expert pool must be nonempty");
  for (std::size_t i = 0; i < losses.size(); ++i) {
    if (losses[i].size() != n) {
      throw ParameterError("round " + std::to_string(i + 1) + " has " +
                           std::to_string(losses[i].size()) +
                           " losses, expected " + std::to_string(n));
    }
    losses[i].CheckBounds(h_bound, i + 1);
  }
  return n;
}

class TraceBuilder {
 public:
  TraceBuilder(GameTrace& trace, std::span<const LossVector> losses)
      : trace_(trace), losses_(losses) {
    const std::size_t n = trace.num_experts;
    trace_.weights.assign(losses.size() * n, 0.0);
    trace_.round_loss.assign(losses.size(), 0.0);
    trace_.expert_loss.assign(n, 0.0);
  }

  void Emit(Round t, const SimplexWeights& w) {
    std::copy(w.values().begin(), w.values().end(),
              trace_.weights.begin() + (t - 1) * trace_.num_experts);
  }

  // The learner suffers h_tau when l_tau is revealed.
  void Suffer(Round tau) {
    const LossVector& l = losses_[tau - 1];
    double h = 0.0;
    const auto w = trace_.Weights(tau);
    for (std::size_t n = 0; n < w.size(); ++n) h += w[n] * l[n];
    trace_.round_loss[tau - 1] = h;
  }

  void Finish() {
    trace_.total_loss = 0.0;
    for (double h : trace_.round_loss) trace_.total_loss += h;
    for (const LossVector& l : losses_) {
      for (std::size_t n = 0; n < l.size(); ++n) trace_.expert_loss[n] += l[n];
    }
  }

 private:
  GameTrace& trace_;
  std::span<const LossVector> losses_;
};

void PlayHedge(std::span<const LossVector> losses, const DelaySchedule& delays,
               const GameConfig& config, GameTrace& trace) {
  TraceBuilder out(trace, losses);
  DelayedHedge learner(trace.prior, trace.eta, config.h_bound);
  for (Round t = 1; t <= losses.size(); ++t) {
    out.Emit(t, learner.Predict());
    for (Round tau : delays.RevealedAt(t)) {
      learner.Reveal(losses[tau - 1], tau);
      out.Suffer(tau);
    }
  }
  out.Finish();
}

void PlayFixedShare(std::span<const LossVector> losses,
                    const DelaySchedule& delays, const GameConfig& config,
                    GameTrace& trace) {
  TraceBuilder out(trace, losses);
  DelayedFixedShare learner(trace.prior, trace.eta, config.h_bound,
                            config.prune_memory);
  std::vector<RevealedLoss> arrivals;
  for (Round t = 1; t <= losses.size(); ++t) {
    out.Emit(t, learner.Predict(t, config.alpha(t)));
    arrivals.clear();
    for (Round tau : delays.RevealedAt(t)) {
      arrivals.emplace_back(tau, losses[tau - 1]);
    }
    learner.RevealSweep(t, arrivals);
    for (Round tau : delays.RevealedAt(t)) out.Suffer(tau);
  }
  out.Finish();
}

// One non-delayed copy of the base learner, stepped in its own local time.
class BoldCopy {
 public:
  BoldCopy(bool fixed_share, const SimplexWeights& prior, double eta,
           const GameConfig& config)
      : alpha_(config.alpha) {
    if (fixed_share) {
      learner_.emplace<DelayedFixedShare>(prior, eta, config.h_bound,
                                          config.prune_memory);
    } else {
      learner_.emplace<DelayedHedge>(prior, eta, config.h_bound);
    }
  }

  SimplexWeights Predict() {
    ++local_round_;
    if (auto* fs = std::get_if<DelayedFixedShare>(&learner_)) {
      return fs->Predict(local_round_, alpha_(local_round_));
    }
    return std::get<DelayedHedge>(learner_).Predict();
  }

  // The loss of this copy's most recent round.
  void Observe(const LossVector& loss, Round global_round) {
    if (auto* fs = std::get_if<DelayedFixedShare>(&learner_)) {
      const RevealedLoss arrival{local_round_, loss};
      fs->RevealSweep(local_round_, std::span<const RevealedLoss>(&arrival, 1));
    } else {
      std::get<DelayedHedge>(learner_).Reveal(loss, global_round);
    }
  }

 private:
  std::variant<std::monostate, DelayedHedge, DelayedFixedShare> learner_;
  AlphaSchedule alpha_;
  Round local_round_ = 0;
};

void PlayBold(bool fixed_share, std::span<const LossVector> losses,
              const DelaySchedule& delays, const GameConfig& config,
              GameTrace& trace) {
  const auto partition = BoldPartition(delays);
  trace.copy_of_round.assign(losses.size(), 0);
  trace.copy_etas.clear();
  std::vector<BoldCopy> copies;
  copies.reserve(partition.size());
  double eta_mass = 0.0;
  for (std::size_t c = 0; c < partition.size(); ++c) {
    const double length = static_cast<double>(partition[c].size());
    const double eta = trace.num_experts == 1
                           ? 1.0
                           : OptimalEta(config.h_bound, trace.num_experts,
                                        length);
    trace.copy_etas.push_back(eta);
    eta_mass += eta * length;
    for (Round t : partition[c]) trace.copy_of_round[t - 1] = c;
    copies.emplace_back(fixed_share, trace.prior, eta, config);
  }
  trace.eta = eta_mass / static_cast<double>(losses.size());

  TraceBuilder out(trace, losses);
  for (Round t = 1; t <= losses.size(); ++t) {
    out.Emit(t, copies[trace.copy_of_round[t - 1]].Predict());
    for (Round tau : delays.RevealedAt(t)) {
      // The gap constraint guarantees tau is its copy's latest round.
      copies[trace.copy_of_round[tau - 1]].Observe(losses[tau - 1], tau);
      out.Suffer(tau);
    }
  }
  out.Finish();
}

}  // namespace

GameTrace RunGame(Algorithm algorithm, std::span<const LossVector> losses,
                  const DelaySchedule& delays, const GameConfig& config) {
  const std::size_t n = ValidateGame(losses, delays, config.h_bound);
  GameTrace trace;
  trace.algorithm = algorithm;
  trace.num_experts = n;
  trace.delays = delays;
  trace.seed = config.seed;
  if (config.prior.has_value()) {
    if (config.prior->size() != n) {
      throw ParameterError("prior has " + std::to_string(config.prior->size()) +
                           " entries, expected " + std::to_string(n));
    }
    trace.prior = *config.prior;
  } else {
    trace.prior = SimplexWeights::Uniform(n);
  }

  switch (algorithm) {
    case Algorithm::kHedge:
      trace.eta = ResolveEta(config, n, losses.size());
      PlayHedge(losses, delays, config, trace);
      break;
    case Algorithm::kFixedShare:
      trace.eta = ResolveEta(config, n, losses.size());
      PlayFixedShare(losses, delays, config, trace);
      break;
    case Algorithm::kBoldHedge:
      PlayBold(false, losses, delays, config, trace);
      break;
    case Algorithm::kBoldFixedShare:
      PlayBold(true, losses, delays, config, trace);
      break;
  }
  return trace;
}

}  // namespace hedgelab
