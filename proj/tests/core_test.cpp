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
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "hedgelab/errors.hpp"
#include "hedgelab/fixed_share.hpp"
#include "hedgelab/game.hpp"
#include "hedgelab/hedge.hpp"
#include "hedgelab/learning_rate.hpp"
#include "hedgelab/types.hpp"

namespace hedgelab {
namespace {

std::vector<LossVector> RandomLosses(std::mt19937_64& gen, std::size_t t,
                                     std::size_t n, double h = 1.0) {
  std::uniform_real_distribution<double> u(0.0, h);
  std::vector<LossVector> out;
  for (std::size_t i = 0; i < t; ++i) {
    std::vector<double> row(n);
    for (double& x : row) x = u(gen);
    out.emplace_back(row);
  }
  return out;
}

DelaySchedule RandomDelays(std::mt19937_64& gen, std::size_t t, int max_d) {
  std::uniform_int_distribution<int> d(0, max_d);
  std::vector<std::int64_t> raw(t);
  for (auto& x : raw) x = d(gen);
  return DelaySchedule(raw);
}

double MaxAbsDiff(std::span<const double> a, std::span<const double> b) {
  REQUIRE(a.size() == b.size());
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

GameConfig ExplicitEta(double eta) {
  GameConfig c;
  c.eta_policy = EtaPolicy::kExplicit;
  c.eta = eta;
  return c;
}

TEST_CASE("log-sum-exp") {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> x = {std::log(1.0), std::log(3.0)};
  CHECK(LogSumExp(x) == doctest::Approx(std::log(4.0)).epsilon(1e-15));
  std::vector<double> big = {1000.0, 1000.0};
  CHECK(LogSumExp(big) == doctest::Approx(1000.0 + std::log(2.0)));
  std::vector<double> some = {-inf, 0.0};
  CHECK(LogSumExp(some) == 0.0);
  std::vector<double> none = {-inf, -inf};
  CHECK(LogSumExp(none) == -inf);
}

TEST_CASE("simplex weights") {
  CHECK(OnSimplex(SimplexWeights::Uniform(5).values()));
  std::vector<double> bad = {0.6, 0.6};
  CHECK_THROWS_AS(SimplexWeights::FromProbabilities(bad), ParameterError);
  std::vector<double> neg = {1.5, -0.5};
  CHECK_THROWS_AS(SimplexWeights::FromProbabilities(neg), ParameterError);
  std::vector<double> logs = {-2000.0, 0.0};
  const auto w = SimplexWeights::FromLogWeights(logs);
  CHECK(w[0] == 0.0);
  CHECK(w[1] == 1.0);
  const auto a = SimplexWeights::Normalize(std::vector<double>{1, 3});
  const auto m = a.Mix(SimplexWeights::Uniform(2), 0.5);
  CHECK(m[0] == doctest::Approx(0.375));
}

TEST_CASE("delay schedule clamps and counts reveals") {
  std::vector<std::int64_t> raw(10, 3);
  DelaySchedule d(raw);
  std::vector<std::size_t> want = {3, 3, 3, 3, 3, 3, 3, 2, 1, 0};
  CHECK(std::vector<std::size_t>(d.delays().begin(), d.delays().end()) == want);
  CHECK(d.clamped_count() == 3);
  CHECK(d.raw_delay(10) == 3);
  CHECK(d.RevealedAt(3).empty());
  CHECK(d.RevealedAt(4).size() == 1);
  CHECK(d.RevealedAt(10).size() == 4);
  CHECK(d.RevealedCount(10) == 10);
  CHECK(d.SumDelays() == 7 * 3 + 2 + 1);

  std::vector<std::int64_t> negative = {0, -1};
  CHECK_THROWS_AS(DelaySchedule{negative}, ParameterError);
}

TEST_CASE("reveal sets are monotone and end full") {
  std::mt19937_64 gen(11);
  for (int rep = 0; rep < 50; ++rep) {
    const auto d = RandomDelays(gen, 40, 60);
    std::set<Round> seen;
    for (Round t = 1; t <= 40; ++t) {
      CHECK(t + d.delay(t) <= 40);
      const auto arrivals = d.RevealedAt(t);
      CHECK(std::is_sorted(arrivals.begin(), arrivals.end()));
      for (Round tau : arrivals) {
        CHECK(tau + d.delay(tau) == t);
        CHECK(seen.insert(tau).second);
      }
      CHECK(seen.size() == d.RevealedCount(t));
    }
    CHECK(seen.size() == 40);
  }
}

TEST_CASE("hedge predict") {
  DelayedHedge h(SimplexWeights::Uniform(2), 1.0, 1.0);
  CHECK(h.Predict()[0] == 0.5);
  CHECK(h.Predict()[1] == 0.5);

  DelayedHedge big(SimplexWeights::Uniform(2), 1.0, 1.0);
  big.Reveal(LossVector({std::log(2.0), 0.0}));
  const auto w = big.Predict();
  // 0.5 * 1/2 against 0.5 * 1.
  CHECK(w[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(w[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("hedge reveal") {
  DelayedHedge h(SimplexWeights::Uniform(3), 0.7, 1.0);
  h.Reveal(LossVector({0.2, 0.9, 0.4}));
  const auto before = h.Predict();
  h.Reveal(LossVector({0.0, 0.0, 0.0}));
  CHECK(h.Predict() == before);

  LossVector l({0.3, 0.1, 0.8}), lp({0.6, 0.5, 0.2});
  DelayedHedge a(SimplexWeights::Uniform(3), 0.7, 1.0);
  DelayedHedge b(SimplexWeights::Uniform(3), 0.7, 1.0);
  a.Reveal(l);
  a.Reveal(lp);
  b.Reveal(lp);
  b.Reveal(l);
  CHECK(a.Predict() == b.Predict());

  CHECK_THROWS_AS(h.Reveal(LossVector({0.0, 1.5, 0.0})), BoundsViolation);
  CHECK_THROWS_AS(h.Reveal(LossVector({0.0, -0.1, 0.0})), BoundsViolation);
  CHECK(h.Predict() == before);
  CHECK_THROWS_AS(h.Reveal(LossVector({0.0, 0.0})), ParameterError);
}

TEST_CASE("hedge shift invariance") {
  DelayedHedge a(SimplexWeights::Uniform(4), 2.0, 2.0);
  DelayedHedge b(SimplexWeights::Uniform(4), 2.0, 2.0);
  a.Reveal(LossVector({0.1, 0.4, 0.9, 0.3}));
  b.Reveal(LossVector({1.1, 1.4, 1.9, 1.3}));
  CHECK(MaxAbsDiff(a.Predict().values(), b.Predict().values()) <= 1e-15);
}

TEST_CASE("fixed share predict") {
  const std::vector<double> p = {0.2, 0.3, 0.5};
  DelayedFixedShare fs(SimplexWeights::FromProbabilities(p), 1.0, 1.0);
  CHECK(fs.Predict(1, 1.0) == fs.prior());
  fs.RevealSweep(1, std::vector<RevealedLoss>{{1, LossVector({1.0, 0.0, 0.5})}});
  const auto u1 = fs.posterior(1);
  CHECK(fs.Predict(2, 0.0) == u1);
  CHECK_THROWS_AS(fs.Predict(3, 1.5), ParameterError);
  CHECK_THROWS_AS(fs.Predict(3, -0.1), ParameterError);
  CHECK_THROWS_AS(fs.Predict(5, 0.5), ProtocolViolation);
}

TEST_CASE("fixed share hand example") {
  // Steer u_1 to [0.9, 0.1]: exp(-eta x) = 1/9 with eta = ln 2.
  const double eta = std::log(2.0);
  DelayedFixedShare fs(SimplexWeights::Uniform(2), eta, 4.0);
  fs.Predict(1, 1.0);
  fs.RevealSweep(1,
                 std::vector<RevealedLoss>{{1, LossVector({0.0, std::log2(9.0)})}});
  CHECK(fs.posterior(1)[0] == doctest::Approx(0.9).epsilon(1e-14));

  const auto w = fs.Predict(2, 0.5);
  CHECK(w[0] == doctest::Approx(0.7).epsilon(1e-14));
  CHECK(w[1] == doctest::Approx(0.3).epsilon(1e-14));

  fs.RevealSweep(2, std::vector<RevealedLoss>{{2, LossVector({1.0, 0.0})}});
  // [0.7 / 2, 0.3] normalized.
  CHECK(fs.posterior(2)[0] == doctest::Approx(7.0 / 13.0).epsilon(1e-14));
  CHECK(fs.posterior(2)[1] == doctest::Approx(6.0 / 13.0).epsilon(1e-14));
}

TEST_CASE("fixed share reveal protocol") {
  DelayedFixedShare fs(SimplexWeights::Uniform(2), 1.0, 1.0);
  fs.Predict(1, 1.0);
  fs.Predict(2, 0.5);
  const auto before = fs.posterior(2);
  fs.RevealSweep(2, {});
  CHECK(fs.posterior(2) == before);

  const std::vector<RevealedLoss> ahead = {{3, LossVector({0.0, 1.0})}};
  CHECK_THROWS_AS(fs.RevealSweep(2, ahead), ProtocolViolation);
  const std::vector<RevealedLoss> zero = {{0, LossVector({0.0, 1.0})}};
  CHECK_THROWS_AS(fs.RevealSweep(2, zero), ProtocolViolation);
  const std::vector<RevealedLoss> twice = {{1, LossVector({0.0, 1.0})},
                                           {1, LossVector({0.0, 1.0})}};
  CHECK_THROWS_AS(fs.RevealSweep(2, twice), ProtocolViolation);
  const std::vector<RevealedLoss> once = {{1, LossVector({0.0, 1.0})}};
  fs.RevealSweep(2, once);
  CHECK_THROWS_AS(fs.RevealSweep(2, once), ProtocolViolation);
  CHECK_THROWS_AS(fs.RevealSweep(1, once), ProtocolViolation);
  const std::vector<RevealedLoss> wide = {{2, LossVector({0.0, 2.0})}};
  CHECK_THROWS_AS(fs.RevealSweep(2, wide), BoundsViolation);
}

TEST_CASE("fixed share arrival order is irrelevant") {
  std::mt19937_64 gen(5);
  const auto losses = RandomLosses(gen, 6, 3);
  auto play = [&](bool reversed) {
    DelayedFixedShare fs(SimplexWeights::Uniform(3), 1.3, 1.0);
    for (Round t = 1; t <= 6; ++t) fs.Predict(t, 1.0 / t);
    std::vector<RevealedLoss> batch;
    for (Round tau = 1; tau <= 6; ++tau) batch.emplace_back(tau, losses[tau - 1]);
    if (reversed) std::reverse(batch.begin(), batch.end());
    fs.RevealSweep(6, batch);
    std::vector<double> all;
    for (Round tau = 0; tau <= 6; ++tau) {
      const auto u = fs.posterior(tau).values();
      all.insert(all.end(), u.begin(), u.end());
    }
    return all;
  };
  CHECK(play(false) == play(true));
}

TEST_CASE("fixed share pruning keeps weights") {
  std::mt19937_64 gen(99);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t t_max = 300;
    const auto losses = RandomLosses(gen, t_max, 4);
    const auto delays = RandomDelays(gen, t_max, 12);
    GameConfig plain = ExplicitEta(0.5);
    GameConfig pruned = plain;
    pruned.prune_memory = true;
    const auto a = RunGame(Algorithm::kFixedShare, losses, delays, plain);
    const auto b = RunGame(Algorithm::kFixedShare, losses, delays, pruned);
    CHECK(a.weights == b.weights);
  }
  // Memory stays bounded by the delay window.
  const auto losses = RandomLosses(gen, 500, 2);
  DelayedFixedShare fs(SimplexWeights::Uniform(2), 0.5, 1.0, true);
  for (Round t = 1; t <= 500; ++t) {
    fs.Predict(t, 1.0 / t);
    if (t > 3) {
      fs.RevealSweep(t, std::vector<RevealedLoss>{{t - 3, losses[t - 4]}});
    }
  }
  CHECK(fs.stored_rounds() <= 5);
  CHECK(fs.first_retained() >= 490);
}

TEST_CASE("optimal eta") {
  const double ln4 = std::log(4.0);
  CHECK(OptimalEta(1.0, 4, 10000) == doctest::Approx(0.0333023).epsilon(1e-6));
  CHECK(OptimalEta(1.0, 4, 10000) ==
        doctest::Approx(2.0 * std::sqrt(2.0 * ln4 / 10000.0)).epsilon(1e-15));
  CHECK(OptimalEta(2.0, 4, 10000) ==
        doctest::Approx(OptimalEta(1.0, 4, 10000) / 2).epsilon(1e-15));
  // (2/H) sqrt(2 ln N / (8 ln N)) = 1/H.
  CHECK(OptimalEta(1.0, 4, 8 * ln4) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(OptimalEta(2.0, 4, 8 * ln4) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(OptimalEta(1.0, 1, 10), ParameterError);
  CHECK_THROWS_AS(OptimalEta(1.0, 4, 0.5), ParameterError);
  CHECK_THROWS_AS(OptimalEta(0.0, 4, 10), ParameterError);
}

TEST_CASE("delay-discounted eta") {
  CHECK(EtaDelayed(1.0, 4, 10000, 0.0) == OptimalEta(1.0, 4, 10000));
  CHECK(EtaDelayed(1.0, 4, 10000, 3.0) ==
        doctest::Approx(OptimalEta(1.0, 4, 10000) / 2).epsilon(1e-15));
  double last = EtaDelayed(1.0, 4, 10000, 0.0);
  for (double ed = 0.5; ed < 300; ed *= 1.7) {
    const double eta = EtaDelayed(1.0, 4, 10000, ed);
    CHECK(eta < last);
    last = eta;
  }
  CHECK_THROWS_AS(EtaDelayed(1.0, 4, 100, -1.0), ParameterError);
  CHECK(OptimalEtaFixedShare(1.0, 4, 1000, 0.0, 0) ==
        doctest::Approx(2.0 * std::sqrt(2.0 * (std::log(4.0) + std::log(1000.0)) /
                                        1000.0)));
}

TEST_CASE("alpha schedules") {
  const auto h = AlphaSchedule::Harmonic();
  CHECK(h(1) == 1.0);
  CHECK(h(4) == 0.25);
  CHECK(AlphaSchedule::Constant(0.3)(17) == 0.3);
  const auto e = AlphaSchedule::Explicit({1.0, 0.5, 0.2});
  CHECK(e(2) == 0.5);
  CHECK(e(9) == 0.2);
  CHECK_THROWS_AS(AlphaSchedule::Constant(1.2), ParameterError);
}

TEST_CASE("single expert") {
  std::vector<LossVector> losses = {LossVector({0.3}), LossVector({0.9}),
                                    LossVector({0.0})};
  for (auto algo : {Algorithm::kHedge, Algorithm::kFixedShare,
                    Algorithm::kBoldHedge, Algorithm::kBoldFixedShare}) {
    const auto trace = RunGame(algo, losses, DelaySchedule::Zero(3), GameConfig{});
    for (double w : trace.weights) CHECK(w == 1.0);
    CHECK(trace.total_loss == doctest::Approx(1.2).epsilon(1e-15));
  }
}

TEST_CASE("non-delayed hedge is classical hedge") {
  std::mt19937_64 gen(3);
  const auto losses = RandomLosses(gen, 200, 4);
  const double eta = 0.8;
  const auto trace =
      RunGame(Algorithm::kHedge, losses, DelaySchedule::Zero(200), ExplicitEta(eta));
  std::vector<double> cum(4, 0.0);
  double worst = 0.0;
  for (Round t = 1; t <= 200; ++t) {
    std::vector<double> w(4);
    double z = 0.0;
    for (int n = 0; n < 4; ++n) z += w[n] = std::exp(-eta * cum[n]);
    for (double& x : w) x /= z;
    worst = std::max(worst, MaxAbsDiff(w, trace.Weights(t)));
    for (int n = 0; n < 4; ++n) cum[n] += losses[t - 1][n];
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("game trace invariants") {
  std::mt19937_64 gen(17);
  for (auto algo : {Algorithm::kHedge, Algorithm::kFixedShare,
                    Algorithm::kBoldHedge, Algorithm::kBoldFixedShare}) {
    const auto losses = RandomLosses(gen, 150, 3, 2.0);
    const auto delays = RandomDelays(gen, 150, 9);
    GameConfig config;
    config.h_bound = 2.0;
    config.expected_delay = 4.5;
    const auto trace = RunGame(algo, losses, delays, config);
    double sum = 0.0;
    for (Round t = 1; t <= 150; ++t) {
      CHECK(OnSimplex(trace.Weights(t)));
      CHECK(trace.round_loss[t - 1] >= 0.0);
      CHECK(trace.round_loss[t - 1] <= 2.0);
      sum += trace.round_loss[t - 1];
    }
    CHECK(std::abs(sum - trace.total_loss) <= 1e-9);
  }
}

TEST_CASE("weights depend only on revealed losses") {
  std::mt19937_64 gen(23);
  for (auto algo : {Algorithm::kHedge, Algorithm::kFixedShare}) {
    for (int rep = 0; rep < 10; ++rep) {
      auto losses = RandomLosses(gen, 60, 3);
      const auto delays = RandomDelays(gen, 60, 8);
      const auto base = RunGame(algo, losses, delays, ExplicitEta(1.0));
      // Perturb round 20; nothing before its reveal may move.
      losses[19] = LossVector({1.0, 0.0, 0.5});
      const auto moved = RunGame(algo, losses, delays, ExplicitEta(1.0));
      for (Round t = 1; t <= delays.reveal_round(20); ++t) {
        CHECK(MaxAbsDiff(base.Weights(t), moved.Weights(t)) == 0.0);
      }
    }
  }
}

TEST_CASE("shift invariance of the game") {
  std::mt19937_64 gen(29);
  for (auto algo : {Algorithm::kHedge, Algorithm::kFixedShare}) {
    const auto losses = RandomLosses(gen, 80, 3, 0.5);
    auto shifted = losses;
    shifted[13] = LossVector({losses[13][0] + 0.5, losses[13][1] + 0.5,
                              losses[13][2] + 0.5});
    const auto delays = RandomDelays(gen, 80, 6);
    const auto a = RunGame(algo, losses, delays, ExplicitEta(1.5));
    const auto b = RunGame(algo, shifted, delays, ExplicitEta(1.5));
    CHECK(MaxAbsDiff(a.weights, b.weights) <= 1e-12);
  }
}

TEST_CASE("fixed share without switching is hedge") {
  std::mt19937_64 gen(31);
  for (int rep = 0; rep < 10; ++rep) {
    const auto losses = RandomLosses(gen, 200, 4);
    const auto delays = RandomDelays(gen, 200, 15);
    GameConfig config = ExplicitEta(0.4);
    config.alpha = AlphaSchedule::Constant(0.0);
    const auto fs = RunGame(Algorithm::kFixedShare, losses, delays, config);
    const auto hedge = RunGame(Algorithm::kHedge, losses, delays, config);
    CHECK(MaxAbsDiff(fs.weights, hedge.weights) <= 1e-12);
  }
}

TEST_CASE("game validation") {
  std::vector<LossVector> none;
  CHECK_THROWS_AS(RunGame(Algorithm::kHedge, none, DelaySchedule::Zero(0),
                          GameConfig{}),
                  ParameterError);
  std::vector<LossVector> two = {LossVector({0.1, 0.2}), LossVector({0.3, 0.4})};
  CHECK_THROWS_AS(RunGame(Algorithm::kHedge, two, DelaySchedule::Zero(3),
                          GameConfig{}),
                  ParameterError);
  std::vector<LossVector> ragged = {LossVector({0.1, 0.2}), LossVector({0.3})};
  CHECK_THROWS_AS(RunGame(Algorithm::kHedge, ragged, DelaySchedule::Zero(2),
                          GameConfig{}),
                  ParameterError);
  std::vector<LossVector> high = {LossVector({0.1, 0.2}), LossVector({0.3, 1.2})};
  CHECK_THROWS_AS(RunGame(Algorithm::kHedge, high, DelaySchedule::Zero(2),
                          GameConfig{}),
                  BoundsViolation);
}

TEST_CASE("bold partition") {
  const auto flat = BoldPartition(DelaySchedule::Zero(9));
  REQUIRE(flat.size() == 1);
  CHECK(flat[0].size() == 9);

  std::vector<std::int64_t> two(7, 2);
  const auto parts = BoldPartition(DelaySchedule(two));
  const std::vector<std::vector<Round>> want = {{1, 4, 7}, {2, 5}, {3, 6}};
  CHECK(parts == want);

  for (std::int64_t d = 0; d < 12; ++d) {
    std::vector<std::int64_t> fixed(100, d);
    CHECK(BoldPartition(DelaySchedule(fixed)).size() == static_cast<std::size_t>(d + 1));
  }

  std::mt19937_64 gen(41);
  for (int rep = 0; rep < 100; ++rep) {
    const auto delays = RandomDelays(gen, 120, 20);
    std::vector<int> hits(121, 0);
    for (const auto& seq : BoldPartition(delays)) {
      for (std::size_t s = 0; s < seq.size(); ++s) {
        ++hits[seq[s]];
        if (s + 1 < seq.size()) CHECK(seq[s] + delays.delay(seq[s]) < seq[s + 1]);
      }
    }
    for (Round t = 1; t <= 120; ++t) CHECK(hits[t] == 1);
  }
}

TEST_CASE("bold run") {
  std::mt19937_64 gen(43);
  const auto losses = RandomLosses(gen, 7, 3);
  const auto flat = RunGame(Algorithm::kBoldHedge, losses, DelaySchedule::Zero(7),
                            GameConfig{});
  GameConfig auto13;
  auto13.eta_policy = EtaPolicy::kAuto13;
  const auto plain =
      RunGame(Algorithm::kHedge, losses, DelaySchedule::Zero(7), auto13);
  CHECK(flat.weights == plain.weights);
  CHECK(flat.eta == plain.eta);

  std::vector<std::int64_t> two(7, 2);
  const auto bold = RunGame(Algorithm::kBoldHedge, losses, DelaySchedule(two),
                            GameConfig{});
  REQUIRE(bold.copy_etas.size() == 3);
  CHECK(bold.copy_etas[0] == OptimalEta(1.0, 3, 3));
  CHECK(bold.copy_etas[1] == OptimalEta(1.0, 3, 2));
  CHECK(bold.copy_etas[2] == OptimalEta(1.0, 3, 2));
  const std::vector<std::size_t> copies = {0, 1, 2, 0, 1, 2, 0};
  CHECK(bold.copy_of_round == copies);
  for (Round t = 1; t <= 3; ++t) {
    for (double w : bold.Weights(t)) CHECK(w == doctest::Approx(1.0 / 3.0));
  }
  // Round 4 is copy 0's second round and has seen only round 1.
  DelayedHedge ref(SimplexWeights::Uniform(3), OptimalEta(1.0, 3, 3), 1.0);
  ref.Reveal(losses[0]);
  CHECK(MaxAbsDiff(ref.Predict().values(), bold.Weights(4)) <= 1e-15);

  const auto bold_fs = RunGame(Algorithm::kBoldFixedShare, losses,
                               DelaySchedule(two), GameConfig{});
  for (Round t = 1; t <= 3; ++t) {
    for (double w : bold_fs.Weights(t)) CHECK(w == doctest::Approx(1.0 / 3.0));
  }
}

TEST_CASE("algorithm names") {
  for (auto algo : {Algorithm::kHedge, Algorithm::kFixedShare,
                    Algorithm::kBoldHedge, Algorithm::kBoldFixedShare}) {
    CHECK(ParseAlgorithm(AlgorithmName(algo)) == algo);
  }
  CHECK(ParseAlgorithm("fixed-share") == Algorithm::kFixedShare);
  CHECK_THROWS_AS(ParseAlgorithm("exp3"), ParameterError);
}

}  // namespace
}  // namespace hedgelab
