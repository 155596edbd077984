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

#include "hedgelab/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "hedgelab/errors.hpp"

namespace hedgelab {

double LogSumExp(std::span<const double> x) {
  const double neg_inf = -std::numeric_limits<double>::infinity();
  double max = neg_inf;
  for (double v : x) max = std::max(max, v);
  if (max == neg_inf) return neg_inf;
  double sum = 0.0;
  for (double v : x) sum += std::exp(v - max);
  return max + std::log(sum);
}

SimplexWeights SimplexWeights::Uniform(std::size_t n) {
  if (n == 0) throw ParameterError("expert pool must be nonempty");
  return SimplexWeights(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

SimplexWeights SimplexWeights::FromLogWeights(
    std::span<const double> log_weights) {
  if (log_weights.empty()) throw ParameterError("expert pool must be nonempty");
  const double lse = LogSumExp(log_weights);
  if (!std::isfinite(lse)) {
    throw ParameterError("log-weights have no finite mass");
  }
  std::vector<double> w(log_weights.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = std::exp(log_weights[i] - lse);
  }
  return SimplexWeights(std::move(w));
}

SimplexWeights SimplexWeights::FromProbabilities(std::span<const double> p) {
  if (!OnSimplex(p)) {
    throw ParameterError("weights are not a probability vector");
  }
  return Normalize(p);
}

SimplexWeights SimplexWeights::Normalize(std::span<const double> mass) {
  if (mass.empty()) throw ParameterError("expert pool must be nonempty");
  double total = 0.0;
  for (double m : mass) {
    if (!(m >= 0.0) || !std::isfinite(m)) {
      throw ParameterError("mass must be finite and nonnegative");
    }
    total += m;
  }
  if (!(total > 0.0)) throw ParameterError("mass must be positive");
  std::vector<double> w(mass.begin(), mass.end());
  for (double& v : w) v /= total;
  return SimplexWeights(std::move(w));
}

std::vector<double> SimplexWeights::LogValues() const {
  std::vector<double> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(),
                 [](double v) { return std::log(v); });
  return out;
}

SimplexWeights SimplexWeights::Mix(const SimplexWeights& other,
                                   double alpha) const {
  std::vector<double> w(values_.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = (1.0 - alpha) * values_[i] + alpha * other.values_[i];
  }
  return SimplexWeights(std::move(w));
}

bool OnSimplex(std::span<const double> w, double tol) {
  if (w.empty()) return false;
  double sum = 0.0;
  for (double v : w) {
    if (!(v >= 0.0)) return false;
    sum += v;
  }
  return std::abs(sum - 1.0) <= tol;
}

void LossVector::CheckBounds(double h_bound, Round round) const {
  for (std::size_t n = 0; n < losses_.size(); ++n) {
    const double l = losses_[n];
    if (!(l >= 0.0 && l <= h_bound)) {
      throw BoundsViolation("loss " + std::to_string(l) + " of expert " +
                            std::to_string(n + 1) + " at round " +
                            std::to_string(round) + " outside [0, " +
                            std::to_string(h_bound) + "]");
    }
  }
}

double Dot(const SimplexWeights& w, const LossVector& l) {
  double h = 0.0;
  for (std::size_t n = 0; n < w.size(); ++n) h += w[n] * l[n];
  return h;
}

DelaySchedule::DelaySchedule(std::span<const std::int64_t> raw_delays)
    : raw_(raw_delays.begin(), raw_delays.end()) {
  const std::size_t horizon = raw_.size();
  delays_.resize(horizon);
  for (std::size_t i = 0; i < horizon; ++i) {
    if (raw_[i] < 0) {
      throw ParameterError("negative delay at round " + std::to_string(i + 1));
    }
    const std::size_t cap = horizon - (i + 1);
    const auto d = static_cast<std::size_t>(raw_[i]);
    delays_[i] = std::min(d, cap);
    if (d > cap) ++clamped_count_;
  }
  // Counting sort of rounds by reveal time; stable, so each bucket is
  // ascending in the revealed round.
  offsets_.assign(horizon + 1, 0);
  for (std::size_t i = 0; i < horizon; ++i) ++offsets_[i + delays_[i] + 1];
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  arrivals_.resize(horizon);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < horizon; ++i) {
    arrivals_[cursor[i + delays_[i]]++] = i + 1;
  }
  revealed_count_.resize(horizon);
  for (std::size_t t = 0; t < horizon; ++t) revealed_count_[t] = offsets_[t + 1];
}

DelaySchedule DelaySchedule::Zero(std::size_t horizon) {
  std::vector<std::int64_t> zeros(horizon, 0);
  return DelaySchedule(zeros);
}

std::span<const Round> DelaySchedule::RevealedAt(Round t) const {
  return std::span<const Round>(arrivals_).subspan(offsets_[t - 1],
                                                    offsets_[t] - offsets_[t - 1]);
}

std::uint64_t DelaySchedule::SumDelays() const {
  std::uint64_t s = 0;
  for (std::size_t d : delays_) s += d;
  return s;
}

double DelaySchedule::MeanRawDelay() const {
  if (raw_.empty()) return 0.0;
  double s = 0.0;
  for (std::int64_t d : raw_) s += static_cast<double>(d);
  return s / static_cast<double>(raw_.size());
}

}  // namespace hedgelab
