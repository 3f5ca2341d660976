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

#include "liqgame/bayes.h"

#include "generators.h"
#include "gtest/gtest.h"
#include "liqgame/error.h"
#include "liqgame/io.h"

namespace liqgame {
namespace {

BayesDocument Load(const std::string& name) {
  const auto path = FixtureDir() / name;
  return BayesFromJson(ParseJson(ReadFile(path), path.string()));
}

const ResponseMap kHighHigh = {{"a", "high"}, {"b", "high"}};

TEST(DominantStrategyTest, LargeAndSmallTypes) {
  const BayesDocument doc = Load("bayes_large_small.json");
  const auto a = DominantStrategyPerType(doc.game, 0);
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(a->strategy, "high");
  EXPECT_EQ(a->kind, DominanceKind::kStrict);
  const auto b = DominantStrategyPerType(doc.game, 1);
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(b->strategy, "high");
  EXPECT_EQ(b->kind, DominanceKind::kWeak);
  EXPECT_EQ(DominantResponses(doc.game), kHighHigh);
}

TEST(DominantStrategyTest, NoneWhenColumnsCross) {
  ConditionalGame game{{"a"}, {"x", "y"}, {"x", "y"},
                       {{{{0, 1}, {0, 0}}, {{0, 0}, {0, 1}}}}};
  EXPECT_FALSE(DominantStrategyPerType(game, 0).has_value());
  try {
    DominantResponses(game);
    FAIL();
  } catch (const GameError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoDominantStrategy);
  }
}

TEST(ExpectedPayoffTest, AtThreshold) {
  const BayesDocument doc = Load("bayes_large_small.json");
  const TypeSpace space = doc.space.WithFirstTypeWeight(5.0 / 9.0);
  EXPECT_NEAR(ExpectedPayoff(doc.game, space, "high", kHighHigh), 50.0 / 9.0,
              1e-12);
  EXPECT_NEAR(ExpectedPayoff(doc.game, space, "low", kHighHigh), 50.0 / 9.0,
              1e-12);
  // Complement of 5/9 is 4/9.
  EXPECT_NEAR(space.prior[1], 4.0 / 9.0, 1e-15);
}

TEST(IndifferenceThresholdTest, LargeSmallGame) {
  const BayesDocument doc = Load("bayes_large_small.json");
  const BayesianSolution s = IndifferenceThreshold(doc.game, doc.space, kHighHigh);
  EXPECT_NEAR(s.threshold_p, 5.0 / 9.0, 1e-12);
  EXPECT_FALSE(s.exterior);
  EXPECT_EQ(s.strategy_i_above, "high");
  EXPECT_EQ(s.strategy_i_below, "low");
  EXPECT_EQ(s.per_type_strategy_j, kHighHigh);
  EXPECT_EQ(PreferredStrategy(s, 0.9), "high");
  EXPECT_EQ(PreferredStrategy(s, 0.35), "low");
  EXPECT_EQ(PreferredStrategy(s, s.threshold_p), std::nullopt);
}

TEST(IndifferenceThresholdTest, TenPAgainstFive) {
  const BayesDocument doc = Load("bayes_half.json");
  const BayesianSolution s =
      IndifferenceThreshold(doc.game, doc.space, DominantResponses(doc.game));
  EXPECT_NEAR(s.threshold_p, 0.5, 1e-12);
}

TEST(IndifferenceThresholdTest, LowResponseCounterfactual) {
  // high pays 10p and low pays 6p: the payoffs cross only at p = 0.
  const BayesDocument doc = Load("bayes_low_response.json");
  const BayesianSolution s =
      IndifferenceThreshold(doc.game, doc.space, doc.responses);
  EXPECT_EQ(s.threshold_p, 0.0);
  EXPECT_FALSE(s.exterior);
  EXPECT_EQ(s.strategy_i_above, "high");
  EXPECT_EQ(PreferredStrategy(s, 0.35), "high");
}

TEST(IndifferenceThresholdTest, ExteriorIsClampedToOne) {
  // high pays 10 + p, low pays 1: high wins for every prior.
  ConditionalGame game{{"a", "b"}, {"high", "low"}, {"high", "low"},
                       {{{{11, 1}, {0, 0}}, {{1, 0}, {0, 0}}},
                        {{{10, 1}, {0, 0}}, {{1, 0}, {0, 0}}}}};
  const TypeSpace space{{"a", "b"}, {0.5, 0.5}};
  const BayesianSolution s = IndifferenceThreshold(game, space, kHighHigh);
  EXPECT_TRUE(s.exterior);
  EXPECT_EQ(s.threshold_p, 1.0);
  EXPECT_EQ(s.strategy_i_below, "high");
  EXPECT_EQ(PreferredStrategy(s, 0.0), "high");
  EXPECT_EQ(PreferredStrategy(s, 1.0), "high");
}

TEST(IndifferenceThresholdTest, NoDependenceOnPrior) {
  ConditionalGame game{{"a", "b"}, {"high", "low"}, {"high", "low"},
                       {{{{3, 1}, {0, 0}}, {{3, 0}, {0, 0}}},
                        {{{2, 1}, {0, 0}}, {{2, 0}, {0, 0}}}}};
  const TypeSpace space{{"a", "b"}, {0.5, 0.5}};
  try {
    IndifferenceThreshold(game, space, kHighHigh);
    FAIL();
  } catch (const GameError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoDependenceOnPrior);
  }
}

TEST(TypeSpaceTest, Validation) {
  EXPECT_NO_THROW((TypeSpace{{"a", "b"}, {0.35, 0.65}}.Validate()));
  EXPECT_THROW((TypeSpace{{"a", "b"}, {0.5, 0.6}}.Validate()), GameError);
  EXPECT_THROW((TypeSpace{{"a", "b"}, {-0.1, 1.1}}.Validate()), GameError);
  EXPECT_THROW((TypeSpace{{"a", "b"}, {1.0}}.Validate()), GameError);
}

TEST(ConditionalGameTest, UnknownLabels) {
  const BayesDocument doc = Load("bayes_large_small.json");
  EXPECT_THROW(doc.game.TypeIndex("c"), GameError);
  EXPECT_THROW(doc.game.IndexOfJ("medium"), GameError);
  EXPECT_THROW(ExpectedPayoff(doc.game, doc.space, "medium", kHighHigh),
               GameError);
}

// The indifference point does not move when I's payoffs are rescaled, and
// the expected payoff is linear in the prior.
TEST(BayesPropertyTest, ThresholdInvariantUnderScaling) {
  testing::Gen gen(31);
  const BayesDocument doc = Load("bayes_large_small.json");
  const BayesianSolution base =
      IndifferenceThreshold(doc.game, doc.space, kHighHigh);
  for (int iter = 0; iter < 100; ++iter) {
    ConditionalGame scaled = doc.game;
    const double k = gen.Real(0.1, 50.0);
    for (auto& m : scaled.matrices) {
      for (auto& row : m) {
        for (auto& cell : row) cell.u_i *= k;
      }
    }
    const BayesianSolution s = IndifferenceThreshold(scaled, doc.space, kHighHigh);
    EXPECT_NEAR(s.threshold_p, base.threshold_p, 1e-12);
    const double p = gen.Real(0, 1);
    const double q = gen.Real(0, 1);
    const double t = gen.Real(0, 1);
    auto f = [&](double w) {
      return ExpectedPayoff(scaled, doc.space.WithFirstTypeWeight(w), "low",
                            kHighHigh);
    };
    EXPECT_NEAR(f(t * p + (1 - t) * q), t * f(p) + (1 - t) * f(q), 1e-9);
  }
}

}  // namespace
}  // namespace liqgame
