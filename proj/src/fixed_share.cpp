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

#include "hedgelab/fixed_share.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "hedgelab/errors.hpp"

namespace hedgelab {

DelayedFixedShare::DelayedFixedShare(const SimplexWeights& prior, double eta,
                                     double h_bound, bool prune_memory)
    : prior_(prior), eta_(eta), h_bound_(h_bound), prune_memory_(prune_memory) {
  if (prior.size() == 0) throw ParameterError("expert pool must be nonempty");
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw ParameterError("learning rate must be positive");
  }
  if (!(h_bound > 0.0) || !std::isfinite(h_bound)) {
    throw ParameterError("loss bound H must be positive");
  }
  // Round 0 carries u_0 = prior and the conventional alpha_0 = 1.
  posteriors_.push_back(prior_);
  alphas_.push_back(1.0);
  losses_.emplace_back();
}

SimplexWeights DelayedFixedShare::Predict(Round t, double alpha) {
  if (t != round_ + 1) {
    throw ProtocolViolation("predict called for round " + std::to_string(t) +
                            ", expected " + std::to_string(round_ + 1));
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ParameterError("switch probability " + std::to_string(alpha) +
                         " outside [0, 1]");
  }
  SimplexWeights w = posteriors_.back().Mix(prior_, alpha);
  // w_t doubles as the provisional u_t until a sweep revisits it.
  posteriors_.push_back(w);
  alphas_.push_back(alpha);
  losses_.emplace_back();
  round_ = t;
  return w;
}

void DelayedFixedShare::RevealSweep(Round t,
                                    std::span<const RevealedLoss> revealed) {
  if (t != round_ || round_ == 0) {
    throw ProtocolViolation("reveal for round " + std::to_string(t) +
                            " but current round is " + std::to_string(round_));
  }
  if (revealed.empty()) return;

  std::vector<Round> seen;
  seen.reserve(revealed.size());
  for (const auto& [tau, loss] : revealed) {
    if (tau == 0 || tau > t) {
      throw ProtocolViolation("round " + std::to_string(tau) +
                              " revealed at round " + std::to_string(t));
    }
    if (tau <= base_ || losses_[Slot(tau)].has_value() ||
        std::find(seen.begin(), seen.end(), tau) != seen.end()) {
      throw ProtocolViolation("round " + std::to_string(tau) +
                              " revealed twice");
    }
    if (loss.size() != num_experts()) {
      throw ParameterError("loss vector has " + std::to_string(loss.size()) +
                           " entries, expected " +
                           std::to_string(num_experts()));
    }
    loss.CheckBounds(h_bound_, tau);
    seen.push_back(tau);
  }

  Round tau_min = t;
  for (const auto& [tau, loss] : revealed) {
    losses_[Slot(tau)] = loss;
    tau_min = std::min(tau_min, tau);
  }

  std::vector<double> log_u(num_experts());
  for (Round tau = tau_min; tau <= t; ++tau) {
    const std::size_t slot = Slot(tau);
    SimplexWeights v = posteriors_[slot - 1].Mix(prior_, alphas_[slot]);
    const auto& loss = losses_[slot];
    if (loss.has_value()) {
      for (std::size_t n = 0; n < log_u.size(); ++n) {
        log_u[n] = std::log(v[n]) - eta_ * (*loss)[n];
      }
      posteriors_[slot] = SimplexWeights::FromLogWeights(log_u);
    } else {
      posteriors_[slot] = std::move(v);
    }
  }

  while (revealed_prefix_ < round_ &&
         losses_[Slot(revealed_prefix_ + 1)].has_value()) {
    ++revealed_prefix_;
  }
  if (prune_memory_) Prune();
}

void DelayedFixedShare::Prune() {
  // u_{prefix} seeds the next sweep; everything older is dead.
  while (base_ < revealed_prefix_) {
    posteriors_.pop_front();
    alphas_.pop_front();
    losses_.pop_front();
    ++base_;
  }
}

const SimplexWeights& DelayedFixedShare::posterior(Round tau) const {
  if (tau < base_ || tau > round_) {
    throw ParameterError("posterior of round " + std::to_string(tau) +
                         " is not stored");
  }
  return posteriors_[Slot(tau)];
}

double DelayedFixedShare::alpha(Round tau) const {
  if (tau < base_ || tau > round_) {
    throw ParameterError("alpha of round " + std::to_string(tau) +
                         " is not stored");
  }
  return alphas_[Slot(tau)];
}

}  // namespace hedgelab
