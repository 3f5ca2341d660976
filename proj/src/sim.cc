// Copyright 2026 The Liquidity Games Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "liqgame/sim.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "liqgame/core.h"
#include "liqgame/error.h"

namespace liqgame {
namespace {

// Aggregates over any set of trials; Merge is associative and commutative.
struct TrialTally {
  std::int64_t opportunities = 0;
  std::int64_t trades = 0;
  std::int64_t volume = 0;
  std::int64_t cleared = 0;
  std::int64_t uncleared = 0;
  std::map<std::int64_t, std::int64_t> rounds_to_clear;

  void Merge(const TrialTally& other) {
    opportunities += other.opportunities;
    trades += other.trades;
    volume += other.volume;
    cleared += other.cleared;
    uncleared += other.uncleared;
    for (const auto& [rounds, count] : other.rounds_to_clear) {
      rounds_to_clear[rounds] += count;
    }
  }
};

std::int64_t RoundHalfUp(double x) {
  return static_cast<std::int64_t>(std::floor(x + 0.5 + 1e-9));
}

std::int64_t FractionAction(double fraction, std::int64_t size) {
  return std::clamp<std::int64_t>(RoundHalfUp(fraction * size), 1, size);
}

void RunTrial(const SimConfig& config, std::int64_t trial, TrialTally& tally) {
  SplitMix64 rng(SplitMix64::At(config.seed, trial));
  const std::int64_t b_i = rng.UniformInt(config.balance_range_i.lo,
                                          config.balance_range_i.hi);
  const std::int64_t b_j = rng.UniformInt(config.balance_range_j.lo,
                                          config.balance_range_j.hi);
  GameInstance game = BuildInstance(b_i, b_j, std::max(b_i, -b_j));
  const std::int64_t total = game.balance_i() + game.balance_j();
  const int rounds = config.mode == SimMode::kOneShot ? 1 : config.max_rounds;
  for (int round = 1; round <= rounds; ++round) {
    const Action offer{DeriveAction(config.strategy_i, game.balance_i(), rng)};
    const Action capacity{
        DeriveAction(config.strategy_j, -game.balance_j(), rng)};
    ++tally.opportunities;
    const Payoff payoff = BilateralPayoff(offer, capacity);
    if (payoff.u_i == 0) continue;
    ++tally.trades;
    tally.volume += payoff.u_i;
    if (config.mode == SimMode::kOneShot) return;
    game = ApplyTrade(game, payoff.u_i);
    if (game.balance_i() + game.balance_j() != total || game.balance_i() < 0 ||
        game.balance_j() > 0) {
      throw std::logic_error("trade broke balance conservation");
    }
    if (game.balance_i() == 0 || game.balance_j() == 0) {
      ++tally.cleared;
      ++tally.rounds_to_clear[round];
      return;
    }
  }
  if (config.mode == SimMode::kRepeated) ++tally.uncleared;
}

// Offer distribution: pmf[a] = P(parcel == a) for a player whose |balance| is
// uniform on `range` (absolute values).
std::vector<long double> ActionPmf(const IntRange& range,
                                   const StrategySpec& spec) {
  std::vector<long double> pmf(range.hi + 1, 0.0L);
  const long double w = 1.0L / range.size();
  switch (spec.kind) {
    case StrategyKind::kFullBalance:
      for (std::int64_t b = range.lo; b <= range.hi; ++b) pmf[b] += w;
      break;
    case StrategyKind::kFixedFraction:
      for (std::int64_t b = range.lo; b <= range.hi; ++b) {
        pmf[FractionAction(*spec.fraction, b)] += w;
      }
      break;
    case StrategyKind::kUniformRandom: {
      // P(a) = w * sum_{b >= max(a, lo)} 1/b
      long double tail = 0;
      for (std::int64_t a = range.hi; a >= 1; --a) {
        if (a >= range.lo) tail += 1.0L / a;
        pmf[a] = w * tail;
      }
      break;
    }
    default:
      throw GameError(ErrorCode::kIntractableStrategy, "strategy",
                      "no closed form for this strategy kind");
  }
  return pmf;
}

IntRange Absolute(const IntRange& r) {
  return r.lo > 0 ? r : IntRange{-r.hi, -r.lo};
}

}  // namespace

std::int64_t SplitMix64::UniformInt(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(Next());
  // Reject the low 2^64 mod span values so every residue is equally likely.
  const std::uint64_t reject_below = (0 - span) % span;
  std::uint64_t x;
  do {
    x = Next();
  } while (x < reject_below);
  return lo + static_cast<std::int64_t>(x % span);
}

void StrategySpec::Validate(const std::string& field) const {
  if (kind == StrategyKind::kFixedFraction) {
    if (!fraction || !(*fraction > 0.0 && *fraction <= 1.0)) {
      throw GameError(ErrorCode::kInvalidConfig, field + ".fraction",
                      "fraction must lie in (0, 1]");
    }
  } else if (fraction) {
    throw GameError(ErrorCode::kInvalidConfig, field + ".fraction",
                    "fraction is only valid for fixed_fraction");
  }
}

void SimConfig::Validate() const {
  if (trials < 1) {
    throw GameError(ErrorCode::kInvalidConfig, "trials",
                    "trials must be at least 1");
  }
  if (balance_range_i.lo > balance_range_i.hi || balance_range_i.lo < 1) {
    throw GameError(ErrorCode::kInvalidConfig, "balance_range_i",
                    "range must be non-empty and strictly positive");
  }
  if (balance_range_j.lo > balance_range_j.hi || balance_range_j.hi > -1) {
    throw GameError(ErrorCode::kInvalidConfig, "balance_range_j",
                    "range must be non-empty and strictly negative");
  }
  strategy_i.Validate("strategy_i");
  strategy_j.Validate("strategy_j");
  if (max_rounds < 1) {
    throw GameError(ErrorCode::kInvalidConfig, "max_rounds",
                    "max_rounds must be at least 1");
  }
  if (threads < 1) {
    throw GameError(ErrorCode::kInvalidConfig, "threads",
                    "threads must be at least 1");
  }
}

std::int64_t DeriveAction(const StrategySpec& spec, std::int64_t size,
                          SplitMix64& rng) {
  switch (spec.kind) {
    case StrategyKind::kFixedFraction:
      return FractionAction(*spec.fraction, size);
    case StrategyKind::kUniformRandom:
      return rng.UniformInt(1, size);
    case StrategyKind::kFullBalance:
      return size;
  }
  return size;
}

SimReport RunSimulation(const SimConfig& config) {
  config.Validate();
  const int workers = static_cast<int>(
      std::min<std::int64_t>(config.threads, config.trials));
  std::vector<TrialTally> partial(workers);
  auto run_chunk = [&](int w) {
    const std::int64_t begin = config.trials * w / workers;
    const std::int64_t end = config.trials * (w + 1) / workers;
    for (std::int64_t t = begin; t < end; ++t) RunTrial(config, t, partial[w]);
  };
  if (workers == 1) {
    run_chunk(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_chunk, w);
  }
  TrialTally tally;
  for (const auto& p : partial) tally.Merge(p);

  SimReport report;
  report.trials = config.trials;
  report.opportunities = tally.opportunities;
  report.trades_executed = tally.trades;
  report.hit_ratio =
      static_cast<double>(tally.trades) / static_cast<double>(tally.opportunities);
  report.total_volume = tally.volume;
  report.mean_volume_per_trial =
      static_cast<double>(tally.volume) / static_cast<double>(config.trials);
  report.cleared_trials = tally.cleared;
  report.uncleared_trials = tally.uncleared;
  report.rounds_to_clear_histogram = std::move(tally.rounds_to_clear);
  report.seed = config.seed;
  report.mode = config.mode;
  return report;
}

std::int64_t TrialVolume(const SimConfig& config, std::int64_t trial) {
  config.Validate();
  TrialTally tally;
  RunTrial(config, trial, tally);
  return tally.volume;
}

double AnalyticHitRatio(const IntRange& range_i, const IntRange& range_j,
                        const StrategySpec& strategy_i,
                        const StrategySpec& strategy_j) {
  const IntRange abs_i = Absolute(range_i);
  const IntRange abs_j = Absolute(range_j);
  if (abs_i.lo < 1 || abs_i.lo > abs_i.hi || abs_j.lo < 1 ||
      abs_j.lo > abs_j.hi) {
    throw GameError(ErrorCode::kInvalidConfig, "range",
                    "ranges must be non-empty and exclude zero");
  }
  strategy_i.Validate("strategy_i");
  strategy_j.Validate("strategy_j");
  const auto offer = ActionPmf(abs_i, strategy_i);
  const auto capacity = ActionPmf(abs_j, strategy_j);
  // survival[a] = P(capacity >= a)
  std::vector<long double> survival(capacity.size() + 1, 0.0L);
  for (std::int64_t a = static_cast<std::int64_t>(capacity.size()) - 1; a >= 0;
       --a) {
    survival[a] = survival[a + 1] + capacity[a];
  }
  long double hit = 0;
  for (std::size_t a = 1; a < offer.size(); ++a) {
    if (offer[a] == 0) continue;
    hit += offer[a] * (a < survival.size() ? survival[a] : 0.0L);
  }
  return static_cast<double>(hit);
}

}  // namespace liqgame
