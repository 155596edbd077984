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

#ifndef HEDGELAB_LEARNING_RATE_HPP_
#define HEDGELAB_LEARNING_RATE_HPP_

#include <cstddef>

namespace hedgelab {

// Minimizer of ln(N)/eta + eta*H^2*S/8, i.e. (2/H) * sqrt(2 ln N / S).
// S is a length but is accepted as a real so the rate can be evaluated at
// non-integer horizons. Requires H > 0, N >= 2, S >= 1.
double OptimalEta(double h_bound, std::size_t num_experts, double length);

// The delay-discounted rate (2/H) * sqrt(2 ln N / (T (1 + E[D]))), which is
// OptimalEta scaled down by sqrt(1 + E[D]) relative to the per-copy rate a
// replicating learner would use.
double EtaDelayed(double h_bound, std::size_t num_experts, double horizon,
                  double expected_delay);

// Tracking rate for Fixed Share: minimizer of
//   (K + 1)(ln N + ln T)/eta + eta*H^2*T(1 + E[D])/8.
// Not used by the experiments by default.
double OptimalEtaFixedShare(double h_bound, std::size_t num_experts,
                            double horizon, double expected_delay,
                            std::size_t switches);

}  // namespace hedgelab

#endif  // HEDGELAB_LEARNING_RATE_HPP_
