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

#include "hedgelab/random.hpp"

#include <cmath>
#include <numeric>
#include <utility>

namespace hedgelab {
namespace {

std::mt19937_64 MakeEngine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{
      static_cast<std::uint32_t>(seed & 0xffffffffu),
      static_cast<std::uint32_t>(seed >> 32),
      static_cast<std::uint32_t>(stream & 0xffffffffu),
      static_cast<std::uint32_t>(stream >> 32),
  };
  return std::mt19937_64(seq);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : engine_(MakeEngine(seed, stream)) {}

double Rng::Uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::Below(std::uint64_t bound) {
  // Rejection on the top of the range keeps every residue equally likely.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::int64_t Rng::Poisson(double lambda) {
  if (lambda <= 0.0) return 0;
  if (lambda <= 30.0) {
    const double u = Uniform();
    double p = std::exp(-lambda);
    double cdf = p;
    std::int64_t k = 0;
    // The cap only matters when u lands in the last ulp below 1.
    while (u >= cdf && k < 1000) {
      ++k;
      p *= lambda / static_cast<double>(k);
      cdf += p;
    }
    return k;
  }
  const double slam = std::sqrt(lambda);
  const double loglam = std::log(lambda);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  while (true) {
    const double u = Uniform() - 0.5;
    const double v = Uniform();
    const double us = 0.5 - std::abs(u);
    if (us == 0.0) continue;
    const auto k = static_cast<std::int64_t>(
        std::floor((2.0 * a / us + b) * u + lambda + 0.43));
    if (us >= 0.07 && v <= vr) return k;
    if (k < 0 || (us < 0.013 && v > us)) continue;
    const double kd = static_cast<double>(k);
    if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
        -lambda + kd * loglam - std::lgamma(kd + 1.0)) {
      return k;
    }
  }
}

std::vector<std::size_t> Rng::Permutation(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    std::swap(p[i - 1], p[Below(i)]);
  }
  return p;
}

}  // namespace hedgelab
