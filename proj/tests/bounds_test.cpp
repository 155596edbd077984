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

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "hedgelab/bounds.hpp"
#include "hedgelab/errors.hpp"
#include "hedgelab/game.hpp"
#include "hedgelab/learning_rate.hpp"
#include "hedgelab/oracle.hpp"

namespace hedgelab {
namespace {

std::vector<LossVector> RandomLosses(std::mt19937_64& gen, std::size_t t,
                                     std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<LossVector> out;
  for (std::size_t i = 0; i < t; ++i) {
    std::vector<double> row(n);
    for (double& x : row) x = u(gen);
    out.emplace_back(row);
  }
  return out;
}

GameConfig ExplicitEta(double eta) {
  GameConfig c;
  c.eta_policy = EtaPolicy::kExplicit;
  c.eta = eta;
  return c;
}

TEST_CASE("mixloss") {
  const auto w = SimplexWeights::Uniform(2);
  CHECK(MixLoss(w, LossVector({0.0, 0.0}), 1.0) == 0.0);
  const auto atom =
      SimplexWeights::FromProbabilities(std::vector<double>{0.0, 1.0, 0.0});
  CHECK(MixLoss(atom, LossVector({0.1, 0.7, 0.3}), 2.0) ==
        doctest::Approx(0.7).epsilon(1e-15));
  const double want = -std::log((1.0 + std::exp(-1.0)) / 2.0);
  CHECK(MixLoss(w, LossVector({0.0, 1.0}), 1.0) == doctest::Approx(want).epsilon(1e-15));
  CHECK(want == doctest::Approx(0.37988).epsilon(1e-5));
}

TEST_CASE("mixloss sits between dot minus eta H^2 / 8 and dot") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 2000; ++rep) {
    const std::size_t n = 2 + rep % 6;
    const double h = 0.5 + 2 * u(gen);
    const double eta = 0.01 + 5 * u(gen);
    std::vector<double> mass(n), loss(n);
    for (std::size_t i = 0; i < n; ++i) {
      mass[i] = u(gen);
      loss[i] = h * u(gen);
    }
    const auto w = SimplexWeights::Normalize(mass);
    const LossVector l(loss);
    const double m = MixLoss(w, l, eta);
    CHECK(m <= Dot(w, l) + 1e-12);
    CHECK(Dot(w, l) - m <= eta * h * h / 8 + 1e-12);
  }
}

TEST_CASE("hedge regret bound") {
  CHECK(HedgeRegretBound(1.0, 1.0, 8, 0, 2) ==
        doctest::Approx(std::log(2.0) + 1.0).epsilon(1e-15));
  CHECK(HedgeRegretBound(1.0, 1.0, 8, 0, 2) == doctest::Approx(1.6931).epsilon(1e-4));
  const double a = HedgeRegretBound(0.3, 2.0, 100, 40, 4);
  const double b = HedgeRegretBound(0.3, 2.0, 100, 80, 4);
  CHECK(b - a == doctest::Approx(0.3 * 4.0 * 40 / 4));
  // ln N / eta* and eta* H^2 T / 8 are both H sqrt(T ln N / 8).
  for (double h : {0.5, 1.0, 3.0}) {
    const double eta = OptimalEta(h, 4, 1000);
    CHECK(HedgeRegretBound(eta, h, 1000, 0, 4) ==
          doctest::Approx(h * std::sqrt(1000 * std::log(4.0) / 2)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(HedgeRegretBound(0.0, 1.0, 8, 0, 2), ParameterError);
  CHECK_THROWS_AS(HedgeRegretBound(-1.0, 1.0, 8, 0, 2), ParameterError);
}

TEST_CASE("fixed share regret bound") {
  const double k0 = FixedShareRegretBound(0.5, 1.0, 100, 30, 4, 0);
  CHECK(k0 == doctest::Approx((std::log(4.0) + std::log(100.0)) / 0.5 + 0.5 * 100 / 8 +
                              0.5 * 30 / 4));
  const double k1 = FixedShareRegretBound(0.5, 1.0, 100, 30, 4, 1);
  CHECK(k1 - k0 == doctest::Approx((std::log(4.0) + std::log(100.0)) / 0.5));
  const double e = std::numbers::e;
  CHECK(FixedShareRegretBound(1.0, 1.0, e * e, 0, e, 1) ==
        doctest::Approx(6.0 + e * e / 8).epsilon(1e-15));
  CHECK(FixedShareRegretBound(1.0, 1.0, e * e, 0, e, 1) ==
        doctest::Approx(6.9236).epsilon(1e-4));
  CHECK_THROWS_AS(FixedShareRegretBound(0.0, 1.0, 8, 0, 2, 1), ParameterError);
}

TEST_CASE("fixed share sequence log probability") {
  const std::vector<std::size_t> constant = {0, 0, 0, 0};
  CHECK(FixedShareSequenceLogProb(constant, 1).log_prob == 0.0);
  const std::vector<std::size_t> single = {2};
  CHECK(FixedShareSequenceLogProb(single, 5).log_prob ==
        doctest::Approx(std::log(0.2)).epsilon(1e-15));

  const std::vector<std::size_t> seq = {0, 0, 1};
  const auto r = FixedShareSequenceLogProb(seq, 2);
  const double want = std::log(0.5) + std::log(1 - 0.5 + 0.25) + std::log((1.0 / 3) / 2);
  CHECK(r.log_prob == doctest::Approx(want).epsilon(1e-15));
  CHECK(r.log_prob == doctest::Approx(-2.7726).epsilon(1e-4));
  CHECK(r.switches == 1);
  CHECK(r.bound == doctest::Approx(2 * (std::log(2.0) + std::log(3.0))));
  CHECK(r.holds);

  // Sum over every sequence is one.
  double total = 0.0;
  std::vector<std::size_t> s(4, 0);
  for (int code = 0; code < 81; ++code) {
    int c = code;
    for (auto& x : s) {
      x = c % 3;
      c /= 3;
    }
    total += std::exp(FixedShareSequenceLogProb(s, 3).log_prob);
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("delay sum identity") {
  const auto zero = DelaySumIdentity(DelaySchedule::Zero(5));
  CHECK(zero.lhs == 10);
  CHECK(zero.rhs == 10);
  CHECK(CheckDelaySumIdentity(DelaySchedule::Zero(1)));

  std::mt19937_64 gen(9);
  std::uniform_int_distribution<int> d(0, 12);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t horizon = 1 + rep % 40;
    std::vector<std::int64_t> raw(horizon);
    for (auto& x : raw) x = d(gen);
    if (rep == 0) raw = {2, 1, 0, 0};
    const DelaySchedule schedule(raw);
    const std::size_t t_max = schedule.horizon();
    // Count |𝒟_t| straight from the definition.
    std::uint64_t lhs = 0;
    for (Round t = 1; t < t_max; ++t) {
      for (Round tau = 1; tau <= t; ++tau) {
        if (tau + schedule.delay(tau) <= t) ++lhs;
      }
      lhs += schedule.delay(t);
    }
    const auto sides = DelaySumIdentity(schedule);
    CHECK(sides.lhs == lhs);
    CHECK(sides.rhs == t_max * (t_max - 1) / 2);
    CHECK(CheckDelaySumIdentity(schedule));
  }
}

TEST_CASE("change bound") {
  const auto p = SimplexWeights::Uniform(2);
  const double c = std::log(4.0);
  const auto ones = CheckChangeBound(p, std::vector<double>{1.0, 1.0}, 1.0, c);
  CHECK(ones.tv == 0.0);
  CHECK(ones.holds);
  const auto flat = CheckChangeBound(p, std::vector<double>{0.25, 0.25}, 1.0, c);
  CHECK(flat.tv == doctest::Approx(0.0));
  const auto r = CheckChangeBound(p, std::vector<double>{1.0, 0.25}, 1.0, c);
  // q = [0.5, 0.125] / 0.625 = [0.8, 0.2].
  CHECK(r.tv == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(r.bound == doctest::Approx(std::log(4.0) / 4).epsilon(1e-15));
  CHECK(r.holds);
  CHECK_THROWS_AS(CheckChangeBound(p, std::vector<double>{1.0, 0.2}, 1.0, c),
                  ParameterError);
  CHECK_THROWS_AS(CheckChangeBound(p, std::vector<double>{1.1, 0.5}, 1.0, c),
                  ParameterError);
}

TEST_CASE("per-step hoeffding") {
  std::vector<LossVector> zeros(20, LossVector({0.0, 0.0, 0.0}));
  const auto z = RunGame(Algorithm::kHedge, zeros, DelaySchedule::Zero(20),
                         ExplicitEta(0.1));
  const auto zc = CheckPerStepHoeffding(z, zeros, 0.1, 1.0);
  CHECK(zc.holds);
  CHECK(zc.worst_excess == doctest::Approx(-0.1 / 8));

  std::mt19937_64 gen(21);
  GameConfig atom = ExplicitEta(0.1);
  atom.prior = SimplexWeights::FromProbabilities(std::vector<double>{0.0, 1.0, 0.0});
  const auto losses = RandomLosses(gen, 50, 3);
  const auto a = RunGame(Algorithm::kHedge, losses, DelaySchedule::Zero(50), atom);
  for (Round t = 1; t <= 50; ++t) {
    CHECK(a.round_loss[t - 1] == losses[t - 1][1]);
  }
  CHECK(CheckPerStepHoeffding(a, losses, 0.1, 1.0).holds);

  for (int rep = 0; rep < 20; ++rep) {
    std::bernoulli_distribution coin(0.4);
    std::vector<LossVector> bern;
    for (int t = 0; t < 300; ++t) {
      bern.emplace_back(std::vector<double>{double(coin(gen)), double(coin(gen)),
                                            double(coin(gen)), double(coin(gen))});
    }
    for (auto algo : {Algorithm::kHedge, Algorithm::kFixedShare}) {
      const auto trace =
          RunGame(algo, bern, DelaySchedule::Zero(300), ExplicitEta(0.1));
      CHECK(CheckPerStepHoeffding(trace, bern, 0.1, 1.0).holds);
    }
  }
}

TEST_CASE("empirical regret respects the bounds") {
  std::mt19937_64 gen(33);
  std::uniform_int_distribution<int> d(0, 30);
  for (int rep = 0; rep < 30; ++rep) {
    const auto losses = RandomLosses(gen, 400, 3);
    std::vector<std::int64_t> raw(400);
    for (auto& x : raw) x = rep % 3 == 0 ? 0 : d(gen);
    const DelaySchedule delays(raw);
    const auto hedge = RunGame(Algorithm::kHedge, losses, delays, ExplicitEta(0.2));
    const auto hr = HedgeBoundReport(hedge, 1.0);
    CHECK(hr.slack >= -1e-9);
    CHECK(hr.eta == 0.2);
    CHECK(hr.sum_delays == delays.SumDelays());
    for (double l : hedge.expert_loss) {
      CHECK(hedge.total_loss - l <= hr.bound + 1e-9);
    }
    const auto fs = RunGame(Algorithm::kFixedShare, losses, delays, ExplicitEta(0.2));
    for (std::size_t k : {0, 2, 5}) {
      const auto fr = FixedShareBoundReport(fs, losses, k, 1.0);
      CHECK(fr.slack >= -1e-9);
      CHECK(fr.empirical ==
            doctest::Approx(fs.total_loss - oracle::BestSwitchingSequence(losses, k).loss));
      CHECK(fr.switches == k);
    }
  }
}

}  // namespace
}  // namespace hedgelab
