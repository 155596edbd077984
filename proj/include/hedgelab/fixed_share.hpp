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

#ifndef HEDGELAB_FIXED_SHARE_HPP_
#define HEDGELAB_FIXED_SHARE_HPP_

#include <deque>
#include <optional>
#include <span>
#include <utility>

#include "hedgelab/types.hpp"

namespace hedgelab {

// One revealed round: (tau, l_tau).
using RevealedLoss = std::pair<Round, LossVector>;

// Fixed Share under delayed feedback.
//
// The state keeps u_0 = prior and, for every played round tau, the posterior
// u_tau over the active expert at tau given the losses of rounds <= tau that
// have been revealed so far. A round goes:
//
//   w_t = Predict(t, alpha_t)        // (1 - alpha_t) u_{t-1} + alpha_t prior
//   RevealSweep(t, arrivals of t)    // recompute u_tau for tau_min..t
//
// When arrivals of several rounds land together they are registered first and
// a single ascending sweep follows, so their order in the input is irrelevant.
//
// With pruning enabled, entries below the longest fully revealed prefix are
// dropped since they are never read again; emitted weights are unaffected.
class DelayedFixedShare {
 public:
  DelayedFixedShare(const SimplexWeights& prior, double eta, double h_bound,
                    bool prune_memory = false);

  std::size_t num_experts() const { return prior_.size(); }
  double eta() const { return eta_; }
  const SimplexWeights& prior() const { return prior_; }
  // The last round passed to Predict (0 before the first round).
  Round round() const { return round_; }

  // Emits w_t. `t` must be round() + 1 and alpha must lie in [0, 1].
  SimplexWeights Predict(Round t, double alpha);

  // Registers the losses revealed at the end of round t and sweeps. Every
  // tau must satisfy tau <= t and be revealed at most once per game.
  void RevealSweep(Round t, std::span<const RevealedLoss> revealed);

  // u_tau for first_retained() <= tau <= round().
  const SimplexWeights& posterior(Round tau) const;
  // Smallest tau still stored; always 0 without pruning.
  Round first_retained() const { return base_; }
  double alpha(Round tau) const;
  std::size_t stored_rounds() const { return posteriors_.size(); }

 private:
  std::size_t Slot(Round tau) const { return tau - base_; }
  void Prune();

  SimplexWeights prior_;
  double eta_;
  double h_bound_;
  bool prune_memory_;
  Round round_ = 0;
  // Slot i holds round base_ + i.
  Round base_ = 0;
  std::deque<SimplexWeights> posteriors_;
  std::deque<double> alphas_;
  std::deque<std::optional<LossVector>> losses_;
  // All of rounds 1..revealed_prefix_ have been revealed.
  Round revealed_prefix_ = 0;
};

}  // namespace hedgelab

#endif  // HEDGELAB_FIXED_SHARE_HPP_
