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

#ifndef HEDGELAB_HEDGE_HPP_
#define HEDGELAB_HEDGE_HPP_

#include <span>
#include <vector>

#include "hedgelab/types.hpp"

namespace hedgelab {

// Exponential weights under delayed feedback. The only state is the running
// sum of revealed losses; the decision is
//   w^n ∝ prior^n * exp(-eta * L^n)
// over whatever rounds have been revealed so far, regardless of their order.
class DelayedHedge {
 public:
  DelayedHedge(const SimplexWeights& prior, double eta, double h_bound);

  std::size_t num_experts() const { return log_prior_.size(); }
  double eta() const { return eta_; }
  double h_bound() const { return h_bound_; }
  std::span<const double> cumulative_losses() const { return cumulative_; }

  // Softmax of log(prior) - eta * L.
  SimplexWeights Predict() const;

  // Adds `loss` to the revealed totals. Throws BoundsViolation if an entry
  // lies outside [0, H]; the state is left untouched in that case.
  void Reveal(const LossVector& loss, Round round = 0);

 private:
  std::vector<double> log_prior_;
  std::vector<double> cumulative_;
  double eta_;
  double h_bound_;
};

}  // namespace hedgelab

#endif  // HEDGELAB_HEDGE_HPP_
