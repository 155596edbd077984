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

#include "hedgelab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hedgelab/errors.hpp"

namespace hedgelab::oracle {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Streaming log-sum-exp accumulator.
struct LogAccumulator {
  double max = kNegInf;
  double scaled_sum = 0.0;

  void Add(double x) {
    if (x == kNegInf) return;
    if (x > max) {
      scaled_sum = scaled_sum * std::exp(max - x) + 1.0;
      max = x;
    } else {
      scaled_sum += std::exp(x - max);
    }
  }
  double Value() const {
    return max == kNegInf ? kNegInf : max + std::log(scaled_sum);
  }
};

void CheckEnumerable(std::size_t n, std::size_t length) {
  if (std::pow(static_cast<double>(n), static_cast<double>(length)) >
      kMaxEnumeration) {
    throw CapacityError("enumeration of " + std::to_string(n) + "^" +
                        std::to_string(length) + " sequences exceeds 1e7");
  }
}

}  // namespace

double ChainPrior::LogTransition(Round t, std::size_t from,
                                 std::size_t to) const {
  const double stay = from == to ? 1.0 : 0.0;
  if (kind == Kind::kHedgeChain) return std::log(stay);
  const double a = alpha(t);
  return std::log(a * prior[to] + (1.0 - a) * stay);
}

SimplexWeights EnumerateMarginal(const ChainPrior& model,
                                 std::span<const LossVector> losses,
                                 std::span<const Round> observed, double eta,
                                 Round target) {
  const std::size_t n = model.prior.size();
  if (n == 0) throw ParameterError("expert pool must be nonempty");
  if (target == 0) throw ParameterError("target round must be >= 1");
  std::size_t length = target;
  for (Round tau : observed) {
    if (tau == 0 || tau > losses.size()) {
      throw ParameterError("observed round " + std::to_string(tau) +
                           " has no loss");
    }
    length = std::max(length, tau);
  }
  CheckEnumerable(n, length);

  std::vector<double> log_prior(n);
  for (std::size_t i = 0; i < n; ++i) log_prior[i] = std::log(model.prior[i]);

  std::vector<LogAccumulator> marginal(n);
  std::vector<std::size_t> seq(length, 0);
  while (true) {
    double log_joint = log_prior[seq[0]];
    for (Round t = 2; t <= length && log_joint != kNegInf; ++t) {
      log_joint += model.LogTransition(t, seq[t - 2], seq[t - 1]);
    }
    if (log_joint != kNegInf) {
      for (Round tau : observed) {
        log_joint -= eta * losses[tau - 1][seq[tau - 1]];
      }
      marginal[seq[target - 1]].Add(log_joint);
    }
    // Odometer, last position fastest.
    std::size_t pos = length;
    while (pos > 0 && ++seq[pos - 1] == n) seq[--pos] = 0;
    if (pos == 0) break;
  }

  std::vector<double> log_w(n);
  for (std::size_t i = 0; i < n; ++i) log_w[i] = marginal[i].Value();
  return SimplexWeights::FromLogWeights(log_w);
}

SimplexWeights EnumeratePosterior(const ChainPrior& model,
                                  std::span<const LossVector> losses,
                                  const DelaySchedule& delays, double eta,
                                  Round t) {
  std::vector<Round> observed;
  for (Round tau = 1; tau <= delays.horizon(); ++tau) {
    if (tau + delays.delay(tau) <= t - 1) observed.push_back(tau);
  }
  return EnumerateMarginal(model, losses, observed, eta, t);
}

SimplexWeights EnumerateSweptPosterior(const ChainPrior& model,
                                       std::span<const LossVector> losses,
                                       const DelaySchedule& delays, double eta,
                                       Round t, Round tau) {
  if (tau == 0) return model.prior;
  std::vector<Round> observed;
  for (Round s = 1; s <= tau; ++s) {
    if (s + delays.delay(s) <= t) observed.push_back(s);
  }
  return EnumerateMarginal(model, losses, observed, eta, tau);
}

FixedShareStep ClassicalFixedShareStep(const SimplexWeights& u_prev,
                                       double alpha,
                                       const SimplexWeights& prior,
                                       const LossVector& loss, double eta) {
  const std::size_t n = prior.size();
  if (u_prev.size() != n || loss.size() != n) {
    throw ParameterError("dimension mismatch in fixed share step");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ParameterError("switch probability outside [0, 1]");
  }
  if (!(eta > 0.0)) throw ParameterError("learning rate must be positive");
  std::vector<double> w(n), u(n);
  double mass = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = (1.0 - alpha) * u_prev[i] + alpha * prior[i];
    u[i] = w[i] * std::exp(-eta * loss[i]);
    mass += u[i];
  }
  for (double& x : u) x /= mass;
  return {SimplexWeights::Normalize(w), SimplexWeights::Normalize(u)};
}

SwitchingPath BestSwitchingSequence(std::span<const LossVector> losses,
                                    std::size_t max_switches) {
  SwitchingPath path;
  const std::size_t horizon = losses.size();
  if (horizon == 0) return path;
  const std::size_t n = losses.front().size();
  const std::size_t k_max = std::min(max_switches, horizon - 1);
  const std::size_t layer = n * (k_max + 1);

  // best[(t-1)*layer + k*n + e]: least loss of rounds t..T with n_t = e and
  // at most k switches after t.
  std::vector<double> best(horizon * layer);
  auto at = [&](Round t, std::size_t k, std::size_t e) -> double& {
    return best[(t - 1) * layer + k * n + e];
  };
  for (std::size_t k = 0; k <= k_max; ++k) {
    for (std::size_t e = 0; e < n; ++e) at(horizon, k, e) = losses[horizon - 1][e];
  }
  const double inf = std::numeric_limits<double>::infinity();
  for (Round t = horizon - 1; t >= 1; --t) {
    for (std::size_t k = 0; k <= k_max; ++k) {
      // Two smallest continuations at layer k - 1 give min over e' != e.
      double first = inf, second = inf;
      std::size_t first_e = n;
      if (k > 0) {
        for (std::size_t e = 0; e < n; ++e) {
          const double v = at(t + 1, k - 1, e);
          if (v < first) {
            second = first;
            first = v;
            first_e = e;
          } else if (v < second) {
            second = v;
          }
        }
      }
      for (std::size_t e = 0; e < n; ++e) {
        const double other = e == first_e ? second : first;
        at(t, k, e) = losses[t - 1][e] + std::min(at(t + 1, k, e), other);
      }
    }
  }

  std::size_t e = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (at(1, k_max, i) < at(1, k_max, e)) e = i;
  }
  std::size_t k = k_max;
  path.experts.push_back(e);
  for (Round t = 1; t < horizon; ++t) {
    double target = at(t + 1, k, e);
    if (k > 0) {
      for (std::size_t i = 0; i < n; ++i) {
        if (i != e) target = std::min(target, at(t + 1, k - 1, i));
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double v = i == e ? at(t + 1, k, e) : (k > 0 ? at(t + 1, k - 1, i) : inf);
      if (v == target) {
        if (i != e) {
          --k;
          ++path.switches;
        }
        e = i;
        break;
      }
    }
    path.experts.push_back(e);
  }
  for (Round t = 1; t <= horizon; ++t) path.loss += losses[t - 1][path.experts[t - 1]];
  return path;
}

SwitchingPath BestSwitchingSequenceBruteForce(
    std::span<const LossVector> losses, std::size_t max_switches) {
  SwitchingPath best;
  const std::size_t horizon = losses.size();
  if (horizon == 0) return best;
  const std::size_t n = losses.front().size();
  CheckEnumerable(n, horizon);
  best.loss = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> seq(horizon, 0);
  while (true) {
    std::size_t switches = 0;
    for (std::size_t t = 1; t < horizon; ++t) switches += seq[t] != seq[t - 1];
    if (switches <= max_switches) {
      double loss = 0.0;
      for (std::size_t t = 0; t < horizon; ++t) loss += losses[t][seq[t]];
      if (loss < best.loss) {
        best.loss = loss;
        best.experts = seq;
        best.switches = switches;
      }
    }
    std::size_t pos = horizon;
    while (pos > 0 && ++seq[pos - 1] == n) seq[--pos] = 0;
    if (pos == 0) break;
  }
  return best;
}

}  // namespace hedgelab::oracle
