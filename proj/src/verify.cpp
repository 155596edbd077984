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

#include "hedgelab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hedgelab/bounds.hpp"
#include "hedgelab/csv_io.hpp"
#include "hedgelab/environments.hpp"
#include "hedgelab/experiment.hpp"
#include "hedgelab/fixed_share.hpp"
#include "hedgelab/game.hpp"
#include "hedgelab/oracle.hpp"
#include "hedgelab/random.hpp"

namespace hedgelab {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

CheckOutcome ErrorCheck(std::string name, double tolerance) {
  return {std::move(name), 0, 0, "max_error", 0.0, tolerance};
}

CheckOutcome SlackCheck(std::string name, double tolerance) {
  return {std::move(name), 0, 0, "min_slack", kInf, tolerance};
}

void RecordError(CheckOutcome& c, double error) {
  c.worst = std::max(c.worst, error);
  if (!(error <= c.tolerance)) ++c.failures;
}

void RecordSlack(CheckOutcome& c, double slack) {
  c.worst = std::min(c.worst, slack);
  if (!(slack >= -c.tolerance)) ++c.failures;
}

double MaxAbsDiff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

std::vector<LossVector> UniformLosses(Rng& rng, std::size_t n, std::size_t horizon) {
  std::vector<LossVector> out;
  std::vector<double> row(n);
  for (std::size_t t = 0; t < horizon; ++t) {
    for (double& l : row) l = rng.Uniform();
    out.emplace_back(row);
  }
  return out;
}

DelaySchedule RandomDelays(Rng& rng, std::size_t horizon, std::size_t max_delay) {
  std::vector<std::int64_t> raw(horizon);
  for (auto& d : raw) d = static_cast<std::int64_t>(rng.Below(max_delay + 1));
  return DelaySchedule(raw);
}

void OracleChecks(std::uint64_t seed, std::vector<CheckOutcome>& out) {
  Rng rng(seed, kVerifyStream);

  // Delayed Fixed Share keeps exact posteriors at every step.
  auto fs = ErrorCheck("fs-posterior-vs-enumeration", 1e-9);
  auto hedge = ErrorCheck("hedge-vs-enumeration", 1e-12);
  const double etas[] = {0.1, 1.0, 3.0};
  for (int instance = 0; instance < 200; ++instance) {
    const std::size_t n = 2 + rng.Below(2);
    const std::size_t horizon = 4 + rng.Below(5);
    const double eta = etas[rng.Below(3)];
    const auto losses = UniformLosses(rng, n, horizon);
    const auto delays = RandomDelays(rng, horizon, horizon);
    const auto prior = SimplexWeights::Uniform(n);
    const oracle::ChainPrior fs_chain{oracle::ChainPrior::Kind::kFixedShareChain,
                                      prior, AlphaSchedule::Harmonic()};
    const oracle::ChainPrior hedge_chain{oracle::ChainPrior::Kind::kHedgeChain,
                                         prior, AlphaSchedule::Harmonic()};

    DelayedFixedShare learner(prior, eta, 1.0);
    std::vector<RevealedLoss> arrivals;
    double worst = 0.0;
    for (Round t = 1; t <= horizon; ++t) {
      learner.Predict(t, 1.0 / static_cast<double>(t));
      arrivals.clear();
      for (Round tau : delays.RevealedAt(t)) arrivals.emplace_back(tau, losses[tau - 1]);
      learner.RevealSweep(t, arrivals);
      for (Round tau = 0; tau <= t; ++tau) {
        const auto exact =
            oracle::EnumerateSweptPosterior(fs_chain, losses, delays, eta, t, tau);
        worst = std::max(worst, MaxAbsDiff(learner.posterior(tau).values(),
                                           exact.values()));
      }
    }
    ++fs.cases;
    RecordError(fs, worst);

    GameConfig config;
    config.eta_policy = EtaPolicy::kExplicit;
    config.eta = eta;
    const GameTrace trace = RunGame(Algorithm::kHedge, losses, delays, config);
    worst = 0.0;
    for (Round t = 1; t <= horizon; ++t) {
      const auto exact = oracle::EnumeratePosterior(hedge_chain, losses, delays, eta, t);
      worst = std::max(worst, MaxAbsDiff(trace.Weights(t), exact.values()));
    }
    ++hedge.cases;
    RecordError(hedge, worst);
  }
  out.push_back(fs);
  out.push_back(hedge);

  // Non-delayed Fixed Share equals the classical two-step recursion.
  auto classical = ErrorCheck("fs-nondelayed-vs-classical", 1e-12);
  for (int instance = 0; instance < 5; ++instance) {
    const std::size_t n = 4, horizon = 1000;
    const double eta = 0.05 + rng.Uniform();
    const auto losses = UniformLosses(rng, n, horizon);
    GameConfig config;
    config.eta_policy = EtaPolicy::kExplicit;
    config.eta = eta;
    const GameTrace trace = RunGame(Algorithm::kFixedShare, losses,
                                    DelaySchedule::Zero(horizon), config);
    const auto prior = SimplexWeights::Uniform(n);
    SimplexWeights u = prior;
    double worst = 0.0;
    for (Round t = 1; t <= horizon; ++t) {
      const auto step = oracle::ClassicalFixedShareStep(
          u, 1.0 / static_cast<double>(t), prior, losses[t - 1], eta);
      worst = std::max(worst, MaxAbsDiff(trace.Weights(t), step.prediction.values()));
      u = step.posterior;
    }
    ++classical.cases;
    RecordError(classical, worst);
  }
  out.push_back(classical);

  // alpha = 0 collapses Fixed Share onto Hedge.
  auto degenerate = ErrorCheck("fs-alpha0-vs-hedge", 1e-12);
  for (int instance = 0; instance < 50; ++instance) {
    const std::size_t n = 4, horizon = 500;
    const auto losses = UniformLosses(rng, n, horizon);
    const auto delays = RandomDelays(rng, horizon, rng.Below(30));
    GameConfig config;
    config.eta_policy = EtaPolicy::kExplicit;
    config.eta = 0.05 + 2.0 * rng.Uniform();
    config.alpha = AlphaSchedule::Constant(0.0);
    const GameTrace fs_trace = RunGame(Algorithm::kFixedShare, losses, delays, config);
    const GameTrace hedge_trace = RunGame(Algorithm::kHedge, losses, delays, config);
    ++degenerate.cases;
    RecordError(degenerate, MaxAbsDiff(fs_trace.weights, hedge_trace.weights));
  }
  out.push_back(degenerate);

  auto dp = ErrorCheck("switching-dp-vs-bruteforce", 1e-9);
  for (int instance = 0; instance < 200; ++instance) {
    const std::size_t n = 2 + rng.Below(3);
    const std::size_t horizon = 1 + rng.Below(n == 2 ? 12 : (n == 3 ? 8 : 6));
    const std::size_t k = rng.Below(horizon + 1);
    std::vector<LossVector> losses;
    const bool binary = rng.Bernoulli(0.5);
    std::vector<double> row(n);
    for (std::size_t t = 0; t < horizon; ++t) {
      for (double& l : row) l = binary ? (rng.Bernoulli(0.5) ? 1.0 : 0.0) : rng.Uniform();
      losses.emplace_back(row);
    }
    const auto fast = oracle::BestSwitchingSequence(losses, k);
    const auto slow = oracle::BestSwitchingSequenceBruteForce(losses, k);
    ++dp.cases;
    double error = std::abs(fast.loss - slow.loss);
    if (fast.switches > k) error = kInf;
    RecordError(dp, error);
  }
  out.push_back(dp);

  auto bold = ErrorCheck("bold-partition-structure", 0.0);
  for (int instance = 0; instance < 100; ++instance) {
    const std::size_t horizon = 1 + rng.Below(300);
    const bool fixed = rng.Bernoulli(0.3);
    const std::size_t d = rng.Below(20);
    std::vector<std::int64_t> raw(horizon);
    for (auto& x : raw) x = fixed ? static_cast<std::int64_t>(d) : rng.Poisson(10.0 * rng.Uniform());
    const DelaySchedule delays(raw);
    const auto parts = BoldPartition(delays);
    std::vector<int> hits(horizon + 1, 0);
    double violations = 0.0;
    for (const auto& part : parts) {
      for (std::size_t s = 0; s < part.size(); ++s) {
        ++hits[part[s]];
        if (s + 1 < part.size() && !(delays.reveal_round(part[s]) < part[s + 1])) {
          violations += 1.0;
        }
      }
    }
    for (Round t = 1; t <= horizon; ++t) violations += hits[t] != 1;
    ++bold.cases;
    RecordError(bold, violations);
  }
  out.push_back(bold);
}

void BoundChecks(std::uint64_t seed, std::vector<CheckOutcome>& out) {
  Rng rng(seed + 1, kVerifyStream);
  auto hedge = SlackCheck("hedge-regret-bound", 1e-9);
  auto fs = SlackCheck("fs-regret-bound", 1e-9);
  const DelayModel models[] = {{DelayModel::Kind::kZero, 0.0, {}},
                               {DelayModel::Kind::kFixed, 5.0, {}},
                               {DelayModel::Kind::kPoisson, 20.0, {}}};
  for (int instance = 0; instance < 30; ++instance) {
    const std::size_t n = 4, horizon = 1000;
    const auto losses = UniformLosses(rng, n, horizon);
    const auto delays = GenerateDelays(models[instance % 3], horizon, rng.NextU64());
    GameConfig config;
    config.eta_policy = EtaPolicy::kExplicit;
    config.eta = 0.1;
    const GameTrace h = RunGame(Algorithm::kHedge, losses, delays, config);
    const double sum_d = static_cast<double>(delays.SumDelays());
    const double bound = HedgeRegretBound(0.1, 1.0, horizon, sum_d, n);
    for (double l : h.expert_loss) {
      ++hedge.cases;
      RecordSlack(hedge, bound - (h.total_loss - l));
    }
    const GameTrace f = RunGame(Algorithm::kFixedShare, losses, delays, config);
    for (std::size_t k : {0u, 3u}) {
      ++fs.cases;
      RecordSlack(fs, FixedShareBoundReport(f, losses, k, 1.0).slack);
    }
  }
  out.push_back(hedge);
  out.push_back(fs);

  auto hoeffding = SlackCheck("per-step-hoeffding", 1e-12);
  auto jensen = SlackCheck("mixloss-below-dot", 1e-12);
  for (int instance = 0; instance < 50; ++instance) {
    const std::size_t n = 2 + rng.Below(7), horizon = 200;
    const double eta = 0.01 + 3.0 * rng.Uniform();
    const auto losses = UniformLosses(rng, n, horizon);
    GameConfig config;
    config.eta_policy = EtaPolicy::kExplicit;
    config.eta = eta;
    const Algorithm algo = instance % 2 ? Algorithm::kFixedShare : Algorithm::kHedge;
    const GameTrace trace = RunGame(algo, losses, DelaySchedule::Zero(horizon), config);
    const HoeffdingCheck check = CheckPerStepHoeffding(trace, losses, eta, 1.0);
    ++hoeffding.cases;
    RecordSlack(hoeffding, -check.worst_excess);
    for (Round t = 1; t <= horizon; ++t) {
      const double m = MixLoss(trace.Weights(t), losses[t - 1].values(), eta);
      ++jensen.cases;
      RecordSlack(jensen, trace.round_loss[t - 1] - m);
    }
  }
  out.push_back(hoeffding);
  out.push_back(jensen);
}

void LemmaChecks(std::uint64_t seed, std::vector<CheckOutcome>& out) {
  Rng rng(seed + 2, kVerifyStream);

  auto delay_sum = ErrorCheck("delay-sum-identity", 0.0);
  for (int instance = 0; instance < 100; ++instance) {
    const std::size_t horizon = 1 + rng.Below(2000);
    const double lambda = 50.0 * rng.Uniform();
    std::vector<std::int64_t> raw(horizon);
    for (auto& d : raw) d = rng.Poisson(lambda);
    const DelaySumSides sides = DelaySumIdentity(DelaySchedule(raw));
    ++delay_sum.cases;
    RecordError(delay_sum, sides.lhs == sides.rhs ? 0.0 : 1.0);
  }
  out.push_back(delay_sum);

  auto change = SlackCheck("change-bound", 1e-12);
  for (int instance = 0; instance < 10000; ++instance) {
    const std::size_t n = 2 + rng.Below(9);
    std::vector<double> mass(n);
    for (double& m : mass) m = rng.Bernoulli(0.1) ? 0.0 : rng.Uniform();
    mass[rng.Below(n)] += 1e-3;
    const auto p = SimplexWeights::Normalize(mass);
    const double eta = 0.01 + 5.0 * rng.Uniform();
    const double c = 0.01 + 5.0 * rng.Uniform();
    std::vector<double> a(n);
    for (double& x : a) x = std::exp(-eta * c * rng.Uniform());
    const ChangeBoundCheck check = CheckChangeBound(p, a, eta, c);
    ++change.cases;
    RecordSlack(change, check.bound - check.tv);
  }
  out.push_back(change);

  auto sequence = SlackCheck("fs-sequence-probability", 1e-9);
  for (int instance = 0; instance < 10000; ++instance) {
    const std::size_t n = 2 + rng.Below(7);
    const std::size_t horizon = 2 + rng.Below(63);
    const double switch_rate = rng.Uniform();
    std::vector<std::size_t> seq(horizon);
    seq[0] = rng.Below(n);
    for (std::size_t t = 1; t < horizon; ++t) {
      seq[t] = rng.Bernoulli(switch_rate) ? rng.Below(n) : seq[t - 1];
    }
    const SequenceLogProb r = FixedShareSequenceLogProb(seq, n);
    ++sequence.cases;
    RecordSlack(sequence, r.bound + r.log_prob);
  }
  out.push_back(sequence);
}

}  // namespace

VerifySuite ParseVerifySuite(std::string_view name) {
  if (name == "oracle") return VerifySuite::kOracle;
  if (name == "bounds") return VerifySuite::kBounds;
  if (name == "lemmas") return VerifySuite::kLemmas;
  if (name == "all") return VerifySuite::kAll;
  throw ConfigError("suite: unknown verify suite '" + std::string(name) + "'");
}

std::string CheckOutcome::Format() const {
  std::ostringstream s;
  s << (passed() ? "PASS " : "FAIL ") << name << " cases=" << cases
    << " failures=" << failures << ' ' << metric << '=' << FormatDouble(worst)
    << " tolerance=" << FormatDouble(tolerance);
  return s.str();
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckOutcome& c) { return c.passed(); });
}

VerifyReport RunVerify(VerifySuite suite, std::uint64_t seed) {
  VerifyReport report;
  if (suite == VerifySuite::kOracle || suite == VerifySuite::kAll) {
    OracleChecks(seed, report.checks);
  }
  if (suite == VerifySuite::kBounds || suite == VerifySuite::kAll) {
    BoundChecks(seed, report.checks);
  }
  if (suite == VerifySuite::kLemmas || suite == VerifySuite::kAll) {
    LemmaChecks(seed, report.checks);
  }
  return report;
}

}  // namespace hedgelab
