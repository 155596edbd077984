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

#ifndef HEDGELAB_BOUNDS_HPP_
#define HEDGELAB_BOUNDS_HPP_

#include <cstdint>
#include <span>

#include "hedgelab/game.hpp"
#include "hedgelab/types.hpp"

namespace hedgelab {

// An empirical quantity next to the theoretical bound it must respect.
struct BoundReport {
  double empirical = 0.0;
  double bound = 0.0;
  // bound - empirical; nonnegative (up to rounding) when the bound holds.
  double slack = 0.0;
  double eta = 0.0;
  double h_bound = 0.0;
  std::size_t horizon = 0;
  std::size_t num_experts = 0;
  std::size_t switches = 0;
  std::uint64_t sum_delays = 0;
};

// m = -(1/eta) ln sum_n w^n exp(-eta l^n), evaluated by log-sum-exp.
double MixLoss(const SimplexWeights& w, const LossVector& loss, double eta);
double MixLoss(std::span<const double> w, std::span<const double> loss,
               double eta);

// ln N / eta + eta H^2 T / 8 + eta H^2 sum(D) / 4: regret of uniform-prior
// delayed Hedge against any fixed expert.
double HedgeRegretBound(double eta, double h_bound, double horizon,
                        double sum_delays, double num_experts);

// (K + 1)(ln N + ln T) / eta + eta H^2 T / 8 + eta H^2 sum(D) / 4: regret of
// delayed Fixed Share with alpha_t = 1/t against any sequence with at most K
// switches.
double FixedShareRegretBound(double eta, double h_bound, double horizon,
                             double sum_delays, double num_experts,
                             double switches);

struct SequenceLogProb {
  double log_prob = 0.0;
  std::size_t switches = 0;
  // (K + 1)(ln N + ln T).
  double bound = 0.0;
  // -log_prob <= bound + 1e-9.
  bool holds = false;
};

// ln p(n_1..n_T) under the Fixed Share chain with uniform prior over
// `num_experts` and alpha_t = 1/t. Experts are 0-based.
SequenceLogProb FixedShareSequenceLogProb(std::span<const std::size_t> sequence,
                                          std::size_t num_experts);

struct DelaySumSides {
  // sum_{t<T} |𝒟_t| + sum_{t<T} D_t.
  std::uint64_t lhs = 0;
  // T (T - 1) / 2.
  std::uint64_t rhs = 0;
};

// Both sides in exact integer arithmetic, counting |𝒟_t| from reveal times.
DelaySumSides DelaySumIdentity(const DelaySchedule& delays);
bool CheckDelaySumIdentity(const DelaySchedule& delays);

struct ChangeBoundCheck {
  // sum over {x : p(x) >= q(x)} of p(x) - q(x), with q ∝ p a.
  double tv = 0.0;
  // eta C / 4.
  double bound = 0.0;
  bool holds = false;
};

// `a` must lie in [exp(-eta C), 1] entrywise; ParameterError otherwise.
ChangeBoundCheck CheckChangeBound(const SimplexWeights& p,
                                  std::span<const double> a, double eta,
                                  double c);

struct HoeffdingCheck {
  bool holds = true;
  // max_t h_t - m_t - eta H^2 / 8.
  double worst_excess = 0.0;
  Round worst_round = 0;
};

// h_t <= m_t + eta H^2 / 8 + 1e-12 at every round of a non-delayed trace.
HoeffdingCheck CheckPerStepHoeffding(const GameTrace& trace,
                                     std::span<const LossVector> losses,
                                     double eta, double h_bound);

// Regret of `trace` against its best fixed expert, next to the Hedge bound
// at the trace's rate.
BoundReport HedgeBoundReport(const GameTrace& trace, double h_bound);

// Regret of `trace` against the best sequence with at most K switches, next
// to the Fixed Share bound.
BoundReport FixedShareBoundReport(const GameTrace& trace,
                                  std::span<const LossVector> losses,
                                  std::size_t switches, double h_bound);

}  // namespace hedgelab

#endif  // HEDGELAB_BOUNDS_HPP_
