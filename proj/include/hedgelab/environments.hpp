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

#ifndef HEDGELAB_ENVIRONMENTS_HPP_
#define HEDGELAB_ENVIRONMENTS_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hedgelab/types.hpp"

namespace hedgelab {

// Bernoulli means of the two loss profiles used in the simulation study:
// experts of similar quality, and experts far apart.
inline const std::vector<double> kQ1 = {0.35, 0.4, 0.45, 0.5};
inline const std::vector<double> kQ2 = {0.2, 0.4, 0.5, 0.7};

struct LossModel {
  enum class Kind { kIidBernoulli, kSwitchingBernoulli, kFromFile };
  Kind kind = Kind::kIidBernoulli;
  std::vector<double> q;
  // Number of planted switches (switching only).
  std::size_t switches = 0;
  std::string path;
};

struct DelayModel {
  enum class Kind { kZero, kFixed, kPoisson, kFromFile };
  Kind kind = Kind::kZero;
  // D for kFixed, lambda for kPoisson.
  double parameter = 0.0;
  std::string path;
};

// l_t^n ~ Bernoulli(q^n), drawn round by round, expert by expert.
std::vector<LossVector> GenerateIidLosses(std::span<const double> q,
                                          std::size_t horizon,
                                          std::uint64_t seed);

struct SwitchingLosses {
  std::vector<LossVector> losses;
  // Rounds where a new segment starts, strictly increasing, within [2, T].
  std::vector<Round> switch_rounds;
  // permutations[k][n]: index into q for expert n on segment k.
  std::vector<std::vector<std::size_t>> permutations;
  // The expert with the smallest mean on each round, 0-based.
  std::vector<std::size_t> planted_experts;
  double planted_loss = 0.0;
};

// Picks K switch rounds uniformly without replacement from {2, ..., T} and
// one uniform permutation per segment (repeats allowed), then draws
// l_t^n ~ Bernoulli(q^{sigma_k(n)}) on segment k. Requires K < T.
SwitchingLosses GenerateSwitchingLosses(std::span<const double> q,
                                        std::size_t switches,
                                        std::size_t horizon,
                                        std::uint64_t seed);

// Deterministic in (model, horizon, seed). The schedule keeps the raw draws
// alongside the clamped delays.
DelaySchedule GenerateDelays(const DelayModel& model, std::size_t horizon,
                             std::uint64_t seed);

}  // namespace hedgelab

#endif  // HEDGELAB_ENVIRONMENTS_HPP_
