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

// Seeded Monte Carlo over sampled holdings.
//
// Each trial draws B_i and B_j uniformly from their ranges, turns them into
// parcel sizes via each player's StrategySpec and plays the bilateral payoff
// rule. In repeated mode a successful parcel is applied to the balances and
// play continues until one side is flat or max_rounds is hit.
//
// Trial t draws from its own SplitMix64 stream, seeded with the t-th output of
// SplitMix64(seed), so results do not depend on how trials are scheduled.

#ifndef LIQGAME_SIM_H_
#define LIQGAME_SIM_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace liqgame {

class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next() {
    state_ += kGamma;
    return Mix(state_);
  }
  // Unbiased uniform integer in [lo, hi].
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi);

  // Output number `index` (0-based) of SplitMix64(seed), without stepping.
  static std::uint64_t At(std::uint64_t seed, std::uint64_t index) {
    return Mix(seed + kGamma * (index + 1));
  }
  static std::uint64_t Mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::int64_t size() const { return hi - lo + 1; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

enum class StrategyKind { kFixedFraction, kUniformRandom, kFullBalance };

struct StrategySpec {
  StrategyKind kind = StrategyKind::kFullBalance;
  std::optional<double> fraction;  // present iff kind == kFixedFraction

  static constexpr double kHighFraction = 0.9;
  static constexpr double kLowFraction = 0.3;

  static StrategySpec FixedFraction(double f) {
    return {StrategyKind::kFixedFraction, f};
  }
  static StrategySpec UniformRandom() {
    return {StrategyKind::kUniformRandom, std::nullopt};
  }
  static StrategySpec FullBalance() {
    return {StrategyKind::kFullBalance, std::nullopt};
  }
  static StrategySpec High() { return FixedFraction(kHighFraction); }
  static StrategySpec Low() { return FixedFraction(kLowFraction); }

  // Throws kInvalidConfig naming `field`.
  void Validate(const std::string& field) const;
  friend bool operator==(const StrategySpec&, const StrategySpec&) = default;
};

enum class SimMode { kOneShot, kRepeated };

struct SimConfig {
  std::int64_t trials = 10000;
  IntRange balance_range_i{1, 1000};
  IntRange balance_range_j{-1000, -1};
  StrategySpec strategy_i = StrategySpec::UniformRandom();
  StrategySpec strategy_j = StrategySpec::UniformRandom();
  std::uint64_t seed = 0;
  SimMode mode = SimMode::kOneShot;
  int max_rounds = 100;
  int threads = 1;

  // Throws kInvalidConfig naming the offending field.
  void Validate() const;
};

struct SimReport {
  std::int64_t trials = 0;
  std::int64_t opportunities = 0;  // rounds played over all trials
  std::int64_t trades_executed = 0;
  double hit_ratio = 0;
  std::int64_t total_volume = 0;
  double mean_volume_per_trial = 0;
  std::int64_t cleared_trials = 0;  // repeated mode: a balance reached zero
  std::int64_t uncleared_trials = 0;
  std::map<std::int64_t, std::int64_t> rounds_to_clear_histogram;
  std::uint64_t seed = 0;
  SimMode mode = SimMode::kOneShot;
};

// Parcel for a player holding |balance| = `size`. fixed_fraction rounds half
// up and never plays less than one bond.
std::int64_t DeriveAction(const StrategySpec& spec, std::int64_t size,
                          SplitMix64& rng);

SimReport RunSimulation(const SimConfig& config);

// Volume traded in trial `trial` alone; RunSimulation's total_volume is the
// sum of this over trials 0..trials-1.
std::int64_t TrialVolume(const SimConfig& config, std::int64_t trial);

// Exact P(offer <= capacity) under uniform balance sampling, by summation over
// the joint discrete distribution of the two parcels.
double AnalyticHitRatio(const IntRange& range_i, const IntRange& range_j,
                        const StrategySpec& strategy_i,
                        const StrategySpec& strategy_j);

}  // namespace liqgame

#endif  // LIQGAME_SIM_H_
