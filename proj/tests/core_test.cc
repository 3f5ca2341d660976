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

#include "liqgame/core.h"

#include <cstdlib>
#include <functional>

#include "generators.h"
#include "gtest/gtest.h"
#include "liqgame/error.h"

namespace liqgame {
namespace {

std::vector<std::int64_t> Quantities(const std::vector<Action>& actions) {
  std::vector<std::int64_t> out;
  for (const Action& a : actions) out.push_back(a.quantity);
  return out;
}

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const GameError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no GameError thrown";
  return ErrorCode::kIoError;
}

TEST(BuildInstanceTest, CanonicalOrientation) {
  const GameInstance g = BuildInstance(-3, 5, 5);
  EXPECT_EQ(g.balance_i(), 5);
  EXPECT_EQ(g.balance_j(), -3);
  EXPECT_EQ(g.holding_i().player, Player::kI);
  EXPECT_EQ(g, BuildInstance(5, -3, 5));
}

TEST(BuildInstanceTest, ActionSetsDescendExcludingZero) {
  const GameInstance g = BuildInstance(3, -2, 3);
  EXPECT_EQ(Quantities(g.action_set_i()), (std::vector<std::int64_t>{3, 2, 1}));
  EXPECT_EQ(Quantities(g.action_set_j()), (std::vector<std::int64_t>{2, 1}));
}

TEST(BuildInstanceTest, Errors) {
  EXPECT_EQ(CodeOf([] { BuildInstance(2, 2, 2); }),
            ErrorCode::kSameSignBalances);
  EXPECT_EQ(CodeOf([] { BuildInstance(-2, -1, 2); }),
            ErrorCode::kSameSignBalances);
  EXPECT_EQ(CodeOf([] { BuildInstance(0, -1, 2); }), ErrorCode::kZeroBalance);
  EXPECT_EQ(CodeOf([] { BuildInstance(5, -1, 4); }), ErrorCode::kCapExceeded);
  EXPECT_EQ(CodeOf([] { BuildInstance(1, -1, 0); }), ErrorCode::kInvalidCap);
  try {
    BuildInstance(2, 2, 2);
  } catch (const GameError& e) {
    EXPECT_EQ(e.field(), "balance_j");
    EXPECT_NE(std::string(e.what()).find("SameSignBalances"),
              std::string::npos);
  }
}

TEST(BilateralPayoffTest, AllOrNothing) {
  EXPECT_EQ(BilateralPayoff({2}, {3}), (Payoff{2, 2}));
  EXPECT_EQ(BilateralPayoff({3}, {3}), (Payoff{3, 3}));
  EXPECT_EQ(BilateralPayoff({4}, {3}), (Payoff{0, 0}));
}

TEST(BuildPayoffMatrixTest, TwoByTwo) {
  const PayoffMatrix m = BuildPayoffMatrix(BuildInstance(2, -2, 2));
  ASSERT_EQ(m.rows(), 2);
  ASSERT_EQ(m.cols(), 2);
  EXPECT_EQ(m.at(0, 0), (Payoff{2, 2}));
  EXPECT_EQ(m.at(0, 1), (Payoff{0, 0}));
  EXPECT_EQ(m.at(1, 0), (Payoff{1, 1}));
  EXPECT_EQ(m.at(1, 1), (Payoff{1, 1}));
}

TEST(BuildPayoffMatrixTest, ThreeByThree) {
  const PayoffMatrix m = BuildPayoffMatrix(BuildInstance(3, -3, 3));
  const std::vector<std::vector<Payoff>> expected = {
      {{3, 3}, {0, 0}, {0, 0}},
      {{2, 2}, {2, 2}, {0, 0}},
      {{1, 1}, {1, 1}, {1, 1}}};
  EXPECT_EQ(m.cells(), PayoffMatrix::FromRows(expected).cells());
}

TEST(PayoffMatrixTest, RejectsRaggedRows) {
  EXPECT_EQ(CodeOf([] { PayoffMatrix::FromRows({{{1, 1}}, {{1, 1}, {2, 2}}}); }),
            ErrorCode::kDimensionMismatch);
}

TEST(ApplyTradeTest, MovesUnitsAndPreservesSigns) {
  const GameInstance g = BuildInstance(5, -3, 5);
  const GameInstance after = ApplyTrade(g, 3);
  EXPECT_EQ(after.balance_i(), 2);
  EXPECT_EQ(after.balance_j(), 0);
  EXPECT_EQ(CodeOf([&] { ApplyTrade(g, 4); }), ErrorCode::kOverTrade);
  EXPECT_EQ(CodeOf([&] { ApplyTrade(g, 0); }),
            ErrorCode::kNonPositiveQuantity);
}

TEST(CorePropertyTest, PayoffRuleOnRandomInstances) {
  testing::Gen gen(11);
  for (int iter = 0; iter < 300; ++iter) {
    const auto [a, b] = gen.Balances(20);
    const std::int64_t cap = std::max(std::abs(a), std::abs(b)) + gen.Int(0, 3);
    const GameInstance g = BuildInstance(a, b, cap);
    ASSERT_GT(g.balance_i(), 0);
    ASSERT_LT(g.balance_j(), 0);
    const PayoffMatrix m = BuildPayoffMatrix(g);
    ASSERT_EQ(m.rows(), g.balance_i());
    ASSERT_EQ(m.cols(), -g.balance_j());
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) {
        const std::int64_t offer = m.row_actions()[r].quantity;
        const std::int64_t capacity = m.col_actions()[c].quantity;
        const Payoff expected =
            offer <= capacity ? Payoff{offer, offer} : Payoff{0, 0};
        ASSERT_EQ(m.at(r, c), expected);
      }
    }
  }
}

TEST(CorePropertyTest, TradesConserveUnits) {
  testing::Gen gen(12);
  for (int iter = 0; iter < 300; ++iter) {
    const auto [a, b] = gen.Balances(50);
    const GameInstance g =
        BuildInstance(a, b, std::max(std::abs(a), std::abs(b)));
    const std::int64_t q =
        gen.Int(1, std::min(g.balance_i(), -g.balance_j()));
    const GameInstance after = ApplyTrade(g, q);
    EXPECT_EQ(after.balance_i() + after.balance_j(),
              g.balance_i() + g.balance_j());
    EXPECT_GE(after.balance_i(), 0);
    EXPECT_LE(after.balance_j(), 0);
  }
}

}  // namespace
}  // namespace liqgame
