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

#include "liqgame/lp.h"

#include "generators.h"
#include "gtest/gtest.h"
#include "liqgame/core.h"
#include "liqgame/error.h"

namespace liqgame {
namespace {

TEST(MaxTransferTest, Examples) {
  EXPECT_EQ(MaxTransfer({10, 20}), 10);
  EXPECT_EQ(MaxTransfer({0, 7}), 0);
  EXPECT_EQ(MaxTransfer({13, 13}), 13);
  EXPECT_THROW(MaxTransfer({-1, 5}), GameError);
}

TEST(MaxTransferPropertyTest, SymmetricFeasibleOptimal) {
  testing::Gen gen(10);
  for (int iter = 0; iter < 10000; ++iter) {
    const std::int64_t a = gen.Int(0, 1'000'000);
    const std::int64_t b = gen.Int(0, 1'000'000);
    const std::int64_t x = MaxTransfer({a, b});
    ASSERT_EQ(x, MaxTransfer({b, a}));
    ASSERT_GE(x, 0);
    ASSERT_LE(x, a);
    ASSERT_LE(x, b);
    ASSERT_TRUE(x == a || x == b);
  }
}

TEST(MaxTransferPropertyTest, ClearsOneSide) {
  testing::Gen gen(20);
  for (int iter = 0; iter < 1000; ++iter) {
    const auto [p, q] = gen.Balances(500);
    const GameInstance g = BuildInstance(p, q, 500);
    const std::int64_t x = MaxTransfer({-g.balance_j(), g.balance_i()});
    const GameInstance after = ApplyTrade(g, x);
    EXPECT_TRUE(after.balance_i() == 0 || after.balance_j() == 0);
  }
}

}  // namespace
}  // namespace liqgame
