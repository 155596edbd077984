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

#include "hedgelab/learning_rate.hpp"

#include <cmath>

#include "hedgelab/errors.hpp"

namespace hedgelab {
namespace {

void CheckCommon(double h_bound, std::size_t num_experts, double length) {
  if (!(h_bound > 0.0) || !std::isfinite(h_bound)) {
    throw ParameterError("loss bound H must be positive");
  }
  if (num_experts < 2) throw ParameterError("learning rate needs N >= 2");
  if (!(length >= 1.0)) throw ParameterError("horizon must be >= 1");
}

}  // namespace

double OptimalEta(double h_bound, std::size_t num_experts, double length) {
  CheckCommon(h_bound, num_experts, length);
  const double log_n = std::log(static_cast<double>(num_experts));
  return (2.0 / h_bound) * std::sqrt(2.0 * log_n / length);
}

double EtaDelayed(double h_bound, std::size_t num_experts, double horizon,
                  double expected_delay) {
  CheckCommon(h_bound, num_experts, horizon);
  if (!(expected_delay >= 0.0)) {
    throw ParameterError("expected delay must be nonnegative");
  }
  const double log_n = std::log(static_cast<double>(num_experts));
  return (2.0 / h_bound) *
         std::sqrt(2.0 * log_n / (horizon * (1.0 + expected_delay)));
}

double OptimalEtaFixedShare(double h_bound, std::size_t num_experts,
                            double horizon, double expected_delay,
                            std::size_t switches) {
  CheckCommon(h_bound, num_experts, horizon);
  if (!(expected_delay >= 0.0)) {
    throw ParameterError("expected delay must be nonnegative");
  }
  const double complexity =
      static_cast<double>(switches + 1) *
      (std::log(static_cast<double>(num_experts)) + std::log(horizon));
  return (2.0 / h_bound) *
         std::sqrt(2.0 * complexity / (horizon * (1.0 + expected_delay)));
}

}  // namespace hedgelab
