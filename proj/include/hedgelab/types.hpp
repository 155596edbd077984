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

#ifndef HEDGELAB_TYPES_HPP_
#define HEDGELAB_TYPES_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hedgelab {

// Rounds are 1-based throughout the public API, matching the game protocol.
using Round = std::size_t;

// Tolerance on |sum - 1| for anything that claims to be on the simplex.
inline constexpr double kSimplexTolerance = 1e-9;

// log(sum(exp(x))) computed around the maximum. Entries equal to -inf are
// allowed (zero-probability atoms); returns -inf when every entry is.
double LogSumExp(std::span<const double> x);

// Probability vector over N experts.
class SimplexWeights {
 public:
  SimplexWeights() = default;

  static SimplexWeights Uniform(std::size_t n);
  // Normalizes exp(log_weights) by log-sum-exp. At least one entry must be
  // finite.
  static SimplexWeights FromLogWeights(std::span<const double> log_weights);
  // Validates nonnegativity and unit mass (within kSimplexTolerance), then
  // renormalizes exactly.
  static SimplexWeights FromProbabilities(std::span<const double> p);
  // Rescales an arbitrary nonnegative vector with positive mass.
  static SimplexWeights Normalize(std::span<const double> mass);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const { return values_; }
  std::vector<double> LogValues() const;

  // (1 - alpha) * this + alpha * other.
  SimplexWeights Mix(const SimplexWeights& other, double alpha) const;

  friend bool operator==(const SimplexWeights&, const SimplexWeights&) = default;

 private:
  explicit SimplexWeights(std::vector<double> values)
      : values_(std::move(values)) {}
  std::vector<double> values_;
};

// True if every entry is >= 0 and the sum is within tol of 1.
bool OnSimplex(std::span<const double> w, double tol = kSimplexTolerance);

// Per-expert losses of one round.
class LossVector {
 public:
  LossVector() = default;
  explicit LossVector(std::vector<double> losses) : losses_(std::move(losses)) {}

  std::size_t size() const { return losses_.size(); }
  double operator[](std::size_t i) const { return losses_[i]; }
  std::span<const double> values() const { return losses_; }

  // Throws BoundsViolation unless every entry lies in [0, h_bound].
  void CheckBounds(double h_bound, Round round) const;

  friend bool operator==(const LossVector&, const LossVector&) = default;

 private:
  std::vector<double> losses_;
};

// <w, l>.
double Dot(const SimplexWeights& w, const LossVector& l);

// Integer delays D_1..D_T, clamped to t + D_t <= T at construction.
class DelaySchedule {
 public:
  DelaySchedule() = default;
  // Negative entries are rejected with ParameterError.
  explicit DelaySchedule(std::span<const std::int64_t> raw_delays);
  static DelaySchedule Zero(std::size_t horizon);

  std::size_t horizon() const { return delays_.size(); }
  std::size_t delay(Round t) const { return delays_[t - 1]; }
  std::int64_t raw_delay(Round t) const { return raw_[t - 1]; }
  std::span<const std::size_t> delays() const { return delays_; }
  std::span<const std::int64_t> raw_delays() const { return raw_; }
  // Number of rounds whose delay was reduced by clamping.
  std::size_t clamped_count() const { return clamped_count_; }

  // t + D_t.
  Round reveal_round(Round t) const { return t + delays_[t - 1]; }
  // The arrivals d𝒟_t at the end of round t, ascending.
  std::span<const Round> RevealedAt(Round t) const;
  // |𝒟_t|.
  std::size_t RevealedCount(Round t) const { return revealed_count_[t - 1]; }
  std::uint64_t SumDelays() const;
  double MeanRawDelay() const;

 private:
  std::vector<std::int64_t> raw_;
  std::vector<std::size_t> delays_;
  std::size_t clamped_count_ = 0;
  // arrivals_[offsets_[t-1] .. offsets_[t]) are the rounds revealed at t.
  std::vector<Round> arrivals_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> revealed_count_;
};

}  // namespace hedgelab

#endif  // HEDGELAB_TYPES_HPP_
