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

#include "hedgelab/environments.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hedgelab/csv_io.hpp"
#include "hedgelab/errors.hpp"
#include "hedgelab/random.hpp"

namespace hedgelab {
namespace {

void CheckMeans(std::span<const double> q) {
  if (q.empty()) throw ParameterError("q must name at least one expert");
  for (double v : q) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw ParameterError("Bernoulli mean " + std::to_string(v) +
                           " outside [0, 1]");
    }
  }
}

}  // namespace

std::vector<LossVector> GenerateIidLosses(std::span<const double> q,
                                          std::size_t horizon,
                                          std::uint64_t seed) {
  CheckMeans(q);
  Rng rng(seed, kLossStream);
  std::vector<LossVector> losses;
  losses.reserve(horizon);
  std::vector<double> row(q.size());
  for (std::size_t t = 0; t < horizon; ++t) {
    for (std::size_t n = 0; n < q.size(); ++n) {
      row[n] = rng.Bernoulli(q[n]) ? 1.0 : 0.0;
    }
    losses.emplace_back(row);
  }
  return losses;
}

SwitchingLosses GenerateSwitchingLosses(std::span<const double> q,
                                        std::size_t switches,
                                        std::size_t horizon,
                                        std::uint64_t seed) {
  CheckMeans(q);
  if (switches >= horizon) {
    throw ParameterError("switch count " + std::to_string(switches) +
                         " must be below the horizon " +
                         std::to_string(horizon));
  }
  Rng rng(seed, kLossStream);
  SwitchingLosses out;

  // Floyd's sampling of K values from the T - 1 candidates {2, ..., T}.
  const std::size_t candidates = horizon - 1;
  std::set<std::size_t> picked;
  for (std::size_t j = candidates - switches; j < candidates; ++j) {
    const std::size_t r = rng.Below(j + 1);
    picked.insert(picked.contains(r) ? j : r);
  }
  for (std::size_t r : picked) out.switch_rounds.push_back(r + 2);

  for (std::size_t k = 0; k <= switches; ++k) {
    out.permutations.push_back(rng.Permutation(q.size()));
  }

  const std::size_t best_q = static_cast<std::size_t>(
      std::min_element(q.begin(), q.end()) - q.begin());
  out.losses.reserve(horizon);
  out.planted_experts.reserve(horizon);
  std::vector<double> row(q.size());
  std::size_t segment = 0;
  for (Round t = 1; t <= horizon; ++t) {
    while (segment < out.switch_rounds.size() &&
           out.switch_rounds[segment] <= t) {
      ++segment;
    }
    const auto& sigma = out.permutations[segment];
    std::size_t planted = 0;
    for (std::size_t n = 0; n < q.size(); ++n) {
      row[n] = rng.Bernoulli(q[sigma[n]]) ? 1.0 : 0.0;
      if (sigma[n] == best_q) planted = n;
    }
    out.planted_experts.push_back(planted);
    out.planted_loss += row[planted];
    out.losses.emplace_back(row);
  }
  return out;
}

DelaySchedule GenerateDelays(const DelayModel& model, std::size_t horizon,
                             std::uint64_t seed) {
  if (!(model.parameter >= 0.0) || !std::isfinite(model.parameter)) {
    throw ParameterError("delay parameter must be finite and nonnegative");
  }
  std::vector<std::int64_t> raw(horizon, 0);
  switch (model.kind) {
    case DelayModel::Kind::kZero:
      break;
    case DelayModel::Kind::kFixed: {
      if (model.parameter != std::floor(model.parameter)) {
        throw ParameterError("fixed delay must be an integer");
      }
      std::fill(raw.begin(), raw.end(),
                static_cast<std::int64_t>(model.parameter));
      break;
    }
    case DelayModel::Kind::kPoisson: {
      Rng rng(seed, kDelayStream);
      for (auto& d : raw) d = rng.Poisson(model.parameter);
      break;
    }
    case DelayModel::Kind::kFromFile: {
      DelaySchedule loaded = LoadDelays(model.path);
      if (loaded.horizon() != horizon) {
        throw ParameterError("delay file horizon " +
                             std::to_string(loaded.horizon()) +
                             " differs from " + std::to_string(horizon));
      }
      return loaded;
    }
  }
  return DelaySchedule(raw);
}

}  // namespace hedgelab
