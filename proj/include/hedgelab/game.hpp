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

#ifndef HEDGELAB_GAME_HPP_
#define HEDGELAB_GAME_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hedgelab/types.hpp"

namespace hedgelab {

enum class Algorithm {
  kHedge,
  kFixedShare,
  kBoldHedge,
  kBoldFixedShare,
};

// "hedge", "fs", "bold-hedge", "bold-fs".
std::string_view AlgorithmName(Algorithm algorithm);
// Accepts the names above plus "fixed-share" and "bold-fixed-share".
Algorithm ParseAlgorithm(std::string_view name);

// Switch probabilities alpha_t for Fixed Share.
class AlphaSchedule {
 public:
  // alpha_t = 1/t, so alpha_1 = 1 and w_1 = prior.
  static AlphaSchedule Harmonic();
  static AlphaSchedule Constant(double alpha);
  // values[t - 1] = alpha_t; rounds past the end reuse the last value.
  static AlphaSchedule Explicit(std::vector<double> values);

  double operator()(Round t) const;
  std::string Describe() const;

 private:
  enum class Kind { kHarmonic, kConstant, kExplicit };
  Kind kind_ = Kind::kHarmonic;
  double constant_ = 0.0;
  std::vector<double> values_;
};

enum class EtaPolicy {
  kExplicit,
  // OptimalEta(H, N, T).
  kAuto13,
  // EtaDelayed(H, N, T, expected_delay).
  kAuto14,
};

struct GameConfig {
  double h_bound = 1.0;
  EtaPolicy eta_policy = EtaPolicy::kAuto14;
  // Used when eta_policy == kExplicit.
  double eta = 0.0;
  // The mean delay known to the learner; read by kAuto14.
  double expected_delay = 0.0;
  // Uniform when absent.
  std::optional<SimplexWeights> prior;
  AlphaSchedule alpha = AlphaSchedule::Harmonic();
  bool prune_memory = false;
  // Echoed into the trace, never read by the learners.
  std::uint64_t seed = 0;
};

// The learning rate a non-replicated learner would use under `config`.
// Pools of one expert get 1.0 since every rate yields the same weights.
double ResolveEta(const GameConfig& config, std::size_t num_experts,
                  std::size_t horizon);

struct GameTrace {
  Algorithm algorithm = Algorithm::kHedge;
  std::size_t num_experts = 0;
  // T x N, row t-1 holds w_t.
  std::vector<double> weights;
  // h_t = <w_t, l_t>.
  std::vector<double> round_loss;
  double total_loss = 0.0;
  // L_T^n.
  std::vector<double> expert_loss;
  DelaySchedule delays;
  SimplexWeights prior;
  // Effective rate. For BOLD this is the per-round average of copy rates.
  double eta = 0.0;
  // BOLD only: the copy that played each round, and each copy's rate.
  std::vector<std::size_t> copy_of_round;
  std::vector<double> copy_etas;
  std::uint64_t seed = 0;

  std::size_t horizon() const { return round_loss.size(); }
  std::span<const double> Weights(Round t) const {
    return std::span<const double>(weights).subspan((t - 1) * num_experts,
                                                    num_experts);
  }
};

// Greedy replication of the time line: round t joins the lowest-index copy
// whose last round t' satisfies t' + D_{t'} < t, otherwise it opens a new
// copy. Each returned subsequence is ascending.
std::vector<std::vector<Round>> BoldPartition(const DelaySchedule& delays);

// Plays the delayed-feedback game: at round t the learner emits w_t, then
// the losses of every tau with tau + D_tau = t are revealed in ascending tau.
// BOLD variants run one non-delayed copy per partition subsequence, each with
// rate OptimalEta(H, N, S) for its length S; the eta policy is ignored.
GameTrace RunGame(Algorithm algorithm, std::span<const LossVector> losses,
                  const DelaySchedule& delays, const GameConfig& config);

}  // namespace hedgelab

#endif  // HEDGELAB_GAME_HPP_
