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

#ifndef HEDGELAB_VERIFY_HPP_
#define HEDGELAB_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hedgelab {

enum class VerifySuite { kOracle, kBounds, kLemmas, kAll };

// "oracle", "bounds", "lemmas", "all"; ConfigError otherwise.
VerifySuite ParseVerifySuite(std::string_view name);

struct CheckOutcome {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  // "max_error" (want <= tolerance) or "min_slack" (want >= -tolerance).
  std::string metric;
  double worst = 0.0;
  double tolerance = 0.0;

  bool passed() const { return failures == 0; }
  // e.g. "PASS fs-posterior-vs-enumeration cases=200 max_error=3.1e-16 ..."
  std::string Format() const;
};

struct VerifyReport {
  std::vector<CheckOutcome> checks;
  bool passed() const;
};

// Runs the named property battery with fixed seeds.
VerifyReport RunVerify(VerifySuite suite, std::uint64_t seed = 2024);

}  // namespace hedgelab

#endif  // HEDGELAB_VERIFY_HPP_
