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

#ifndef HEDGELAB_ORACLE_HPP_
#define HEDGELAB_ORACLE_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hedgelab/game.hpp"
#include "hedgelab/types.hpp"

// Brute-force references. Nothing here shares code with the incremental
// learners beyond the value types.

namespace hedgelab::oracle {

// Largest N^T the enumeration accepts.
inline constexpr double kMaxEnumeration = 1e7;

// A Markov prior over expert sequences (n_1, ..., n_T).
struct ChainPrior {
  enum class Kind {
    // n_1 ~ prior, then the expert never changes.
    kHedgeChain,
    // n_t = n_{t-1} with prob 1 - alpha_t, else a fresh draw from the prior.
    kFixedShareChain,
  };
  Kind kind = Kind::kHedgeChain;
  SimplexWeights prior;
  // Read for t >= 2 by the fixed-share chain.
  AlphaSchedule alpha = AlphaSchedule::Harmonic();

  // ln p(n_t | n_{t-1}); experts are 0-based here.
  double LogTransition(Round t, std::size_t from, std::size_t to) const;
};

// p(n_target | losses of the rounds in `observed`), summing over every
// sequence of length max(target, max observed). Rounds in `observed` are
// 1-based and each contributes exp(-eta * l_tau^{n_tau}).
SimplexWeights EnumerateMarginal(const ChainPrior& model,
                                 std::span<const LossVector> losses,
                                 std::span<const Round> observed, double eta,
                                 Round target);

// The decision w_t = p(n_t | L over 𝒟_{t-1}) that any learner built on
// `model` must emit at round t of the delayed game.
SimplexWeights EnumeratePosterior(const ChainPrior& model,
                                  std::span<const LossVector> losses,
                                  const DelaySchedule& delays, double eta,
                                  Round t);

// u_tau after round t: p(n_tau | L over {tau' <= tau : tau' + D_tau' <= t}).
SimplexWeights EnumerateSweptPosterior(const ChainPrior& model,
                                       std::span<const LossVector> losses,
                                       const DelaySchedule& delays, double eta,
                                       Round t, Round tau);

struct FixedShareStep {
  SimplexWeights prediction;
  SimplexWeights posterior;
};

// Non-delayed Fixed Share in probability space:
//   w = (1 - alpha) u_prev + alpha prior,  u ∝ w * exp(-eta l).
FixedShareStep ClassicalFixedShareStep(const SimplexWeights& u_prev,
                                       double alpha,
                                       const SimplexWeights& prior,
                                       const LossVector& loss, double eta);

struct SwitchingPath {
  // 0-based expert per round.
  std::vector<std::size_t> experts;
  double loss = 0.0;
  std::size_t switches = 0;
};

// Minimum cumulative loss over expert sequences with at most `max_switches`
// changes. Among optimal sequences the lexicographically smallest is
// returned, which prefers lower expert indices at earlier rounds.
SwitchingPath BestSwitchingSequence(std::span<const LossVector> losses,
                                    std::size_t max_switches);

// Exhaustive version of the above for small N^T; used to check the DP.
SwitchingPath BestSwitchingSequenceBruteForce(
    std::span<const LossVector> losses, std::size_t max_switches);

}  // namespace hedgelab::oracle

#endif  // HEDGELAB_ORACLE_HPP_
