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

#ifndef HEDGELAB_RANDOM_HPP_
#define HEDGELAB_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <vector>

namespace hedgelab {

// Portable random stream. The engine is std::mt19937_64, whose output is
// fixed by the standard, seeded through std::seed_seq (also fully specified)
// from (seed, stream). All variates below are computed here rather than with
// <random> distributions, whose algorithms vary between standard libraries.
class Rng {
 public:
  // Distinct `stream` values give independent sequences for one seed.
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t NextU64() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double Uniform();
  // Uniform on {0, ..., bound - 1}, unbiased. bound > 0.
  std::uint64_t Below(std::uint64_t bound);
  bool Bernoulli(double p) { return Uniform() < p; }
  // Inversion by sequential search for lambda <= 30, Hormann's PTRS
  // transformed rejection above.
  std::int64_t Poisson(double lambda);
  // Uniformly random permutation of {0, ..., n - 1} (Fisher-Yates).
  std::vector<std::size_t> Permutation(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

// Stream tags so loss and delay draws never share a sequence.
inline constexpr std::uint64_t kLossStream = 1;
inline constexpr std::uint64_t kDelayStream = 2;
inline constexpr std::uint64_t kVerifyStream = 3;

}  // namespace hedgelab

#endif  // HEDGELAB_RANDOM_HPP_
