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

#include "hedgelab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "hedgelab/errors.hpp"
#include "hedgelab/oracle.hpp"

namespace hedgelab {
namespace {

void CheckEta(double eta) {
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw ParameterError("learning rate must be positive");
  }
}

void CheckNonnegative(double v, const char* name) {
  if (!(v >= 0.0)) throw ParameterError(std::string(name) + " must be >= 0");
}

}  // namespace

double MixLoss(std::span<const double> w, std::span<const double> loss,
               double eta) {
  CheckEta(eta);
  if (w.size() != loss.size()) throw ParameterError("dimension mismatch");
  std::vector<double> terms(w.size());
  for (std::size_t n = 0; n < w.size(); ++n) {
    terms[n] = std::log(w[n]) - eta * loss[n];
  }
  return -LogSumExp(terms) / eta;
}

double MixLoss(const SimplexWeights& w, const LossVector& loss, double eta) {
  return MixLoss(w.values(), loss.values(), eta);
}

double HedgeRegretBound(double eta, double h_bound, double horizon,
                        double sum_delays, double num_experts) {
  CheckEta(eta);
  CheckNonnegative(h_bound, "H");
  CheckNonnegative(horizon, "T");
  CheckNonnegative(sum_delays, "sum of delays");
  if (!(num_experts >= 1.0)) throw ParameterError("N must be >= 1");
  const double h2 = h_bound * h_bound;
  return std::log(num_experts) / eta + eta * h2 * horizon / 8.0 +
         eta * h2 * sum_delays / 4.0;
}

double FixedShareRegretBound(double eta, double h_bound, double horizon,
                             double sum_delays, double num_experts,
                             double switches) {
  CheckEta(eta);
  CheckNonnegative(h_bound, "H");
  CheckNonnegative(sum_delays, "sum of delays");
  CheckNonnegative(switches, "K");
  if (!(num_experts >= 1.0)) throw ParameterError("N must be >= 1");
  if (!(horizon >= 1.0)) throw ParameterError("T must be >= 1");
  const double h2 = h_bound * h_bound;
  return (switches + 1.0) * (std::log(num_experts) + std::log(horizon)) / eta +
         eta * h2 * horizon / 8.0 + eta * h2 * sum_delays / 4.0;
}

SequenceLogProb FixedShareSequenceLogProb(std::span<const std::size_t> sequence,
                                          std::size_t num_experts) {
  if (sequence.empty()) throw ParameterError("empty expert sequence");
  if (num_experts == 0) throw ParameterError("N must be >= 1");
  for (std::size_t e : sequence) {
    if (e >= num_experts) throw ParameterError("expert index out of range");
  }
  const double n = static_cast<double>(num_experts);
  SequenceLogProb out;
  out.log_prob = -std::log(n);
  for (std::size_t t = 2; t <= sequence.size(); ++t) {
    const double alpha = 1.0 / static_cast<double>(t);
    if (sequence[t - 1] != sequence[t - 2]) {
      ++out.switches;
      out.log_prob += std::log(alpha / n);
    } else {
      out.log_prob += std::log(1.0 - alpha + alpha / n);
    }
  }
  out.bound = static_cast<double>(out.switches + 1) *
              (std::log(n) + std::log(static_cast<double>(sequence.size())));
  out.holds = -out.log_prob <= out.bound + 1e-9;
  return out;
}

DelaySumSides DelaySumIdentity(const DelaySchedule& delays) {
  const std::uint64_t horizon = delays.horizon();
  DelaySumSides sides;
  if (horizon == 0) return sides;
  // arrivals[r] = number of rounds revealed exactly at r.
  std::vector<std::uint64_t> arrivals(horizon + 1, 0);
  for (Round t = 1; t <= horizon; ++t) {
    const std::uint64_t r = t + delays.delay(t);
    if (r > horizon) throw ParameterError("delay schedule violates t + D_t <= T");
    ++arrivals[r];
  }
  std::uint64_t revealed = 0;
  for (Round t = 1; t < horizon; ++t) {
    revealed += arrivals[t];
    sides.lhs += revealed + delays.delay(t);
  }
  sides.rhs = horizon * (horizon - 1) / 2;
  return sides;
}

bool CheckDelaySumIdentity(const DelaySchedule& delays) {
  const DelaySumSides sides = DelaySumIdentity(delays);
  return sides.lhs == sides.rhs;
}

ChangeBoundCheck CheckChangeBound(const SimplexWeights& p,
                                  std::span<const double> a, double eta,
                                  double c) {
  CheckEta(eta);
  CheckNonnegative(c, "C");
  if (a.size() != p.size()) throw ParameterError("dimension mismatch");
  const double floor = std::exp(-eta * c);
  std::vector<double> q(p.size());
  double mass = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(a[i] >= floor && a[i] <= 1.0)) {
      throw ParameterError("a-value " + std::to_string(a[i]) +
                           " outside [exp(-eta C), 1]");
    }
    q[i] = p[i] * a[i];
    mass += q[i];
  }
  ChangeBoundCheck out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    q[i] /= mass;
    if (p[i] >= q[i]) out.tv += p[i] - q[i];
  }
  out.bound = eta * c / 4.0;
  out.holds = out.tv <= out.bound + 1e-12;
  return out;
}

HoeffdingCheck CheckPerStepHoeffding(const GameTrace& trace,
                                     std::span<const LossVector> losses,
                                     double eta, double h_bound) {
  if (losses.size() != trace.horizon()) {
    throw ParameterError("trace and losses differ in horizon");
  }
  HoeffdingCheck out;
  out.worst_excess = -std::numeric_limits<double>::infinity();
  const double slack = eta * h_bound * h_bound / 8.0;
  for (Round t = 1; t <= trace.horizon(); ++t) {
    const double m = MixLoss(trace.Weights(t), losses[t - 1].values(), eta);
    const double excess = trace.round_loss[t - 1] - m - slack;
    if (excess > out.worst_excess) {
      out.worst_excess = excess;
      out.worst_round = t;
    }
    if (excess > 1e-12) out.holds = false;
  }
  return out;
}

BoundReport HedgeBoundReport(const GameTrace& trace, double h_bound) {
  BoundReport r;
  r.eta = trace.eta;
  r.h_bound = h_bound;
  r.horizon = trace.horizon();
  r.num_experts = trace.num_experts;
  r.sum_delays = trace.delays.SumDelays();
  r.empirical = trace.total_loss - *std::min_element(trace.expert_loss.begin(),
                                                     trace.expert_loss.end());
  r.bound = HedgeRegretBound(r.eta, h_bound, static_cast<double>(r.horizon),
                             static_cast<double>(r.sum_delays),
                             static_cast<double>(r.num_experts));
  r.slack = r.bound - r.empirical;
  return r;
}

BoundReport FixedShareBoundReport(const GameTrace& trace,
                                  std::span<const LossVector> losses,
                                  std::size_t switches, double h_bound) {
  BoundReport r;
  r.eta = trace.eta;
  r.h_bound = h_bound;
  r.horizon = trace.horizon();
  r.num_experts = trace.num_experts;
  r.switches = switches;
  r.sum_delays = trace.delays.SumDelays();
  r.empirical =
      trace.total_loss - oracle::BestSwitchingSequence(losses, switches).loss;
  r.bound = FixedShareRegretBound(
      r.eta, h_bound, static_cast<double>(r.horizon),
      static_cast<double>(r.sum_delays), static_cast<double>(r.num_experts),
      static_cast<double>(switches));
  r.slack = r.bound - r.empirical;
  return r;
}

}  // namespace hedgelab
