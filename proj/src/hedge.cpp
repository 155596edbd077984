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

#include "hedgelab/hedge.hpp"

#include <cmath>

#include "hedgelab/errors.hpp"

namespace hedgelab {

DelayedHedge::DelayedHedge(const SimplexWeights& prior, double eta,
                           double h_bound)
    : log_prior_(prior.LogValues()),
      cumulative_(prior.size(), 0.0),
      eta_(eta),
      h_bound_(h_bound) {
  if (prior.size() == 0) throw ParameterError("expert pool must be nonempty");
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw ParameterError("learning rate must be positive");
  }
  if (!(h_bound > 0.0) || !std::isfinite(h_bound)) {
    throw ParameterError("loss bound H must be positive");
  }
}

SimplexWeights DelayedHedge::Predict() const {
  std::vector<double> log_w(log_prior_.size());
  for (std::size_t n = 0; n < log_w.size(); ++n) {
    log_w[n] = log_prior_[n] - eta_ * cumulative_[n];
  }
  return SimplexWeights::FromLogWeights(log_w);
}

void DelayedHedge::Reveal(const LossVector& loss, Round round) {
  if (loss.size() != num_experts()) {
    throw ParameterError("loss vector has " + std::to_string(loss.size()) +
                         " entries, expected " +
                         std::to_string(num_experts()));
  }
  loss.CheckBounds(h_bound_, round);
  for (std::size_t n = 0; n < cumulative_.size(); ++n) cumulative_[n] += loss[n];
}

}  // namespace hedgelab
