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

// Liquidity Game instances and their bilateral payoff matrices.
//
// Two players hold offsetting bond balances: player I is long (B_i > 0) and
// player J is short (B_j < 0). Each plays a parcel size. A parcel is accepted
// all-or-nothing: the long side's offer transfers iff it fits inside the short
// side's capacity, and both players are credited with the transferred size.

#ifndef LIQGAME_CORE_H_
#define LIQGAME_CORE_H_

#include <cstdint>
#include <utility>
#include <vector>

namespace liqgame {

enum class Player { kI, kJ };

struct Holding {
  Player player;
  std::int64_t balance;  // signed bond units

  friend bool operator==(const Holding&, const Holding&) = default;
};

// A parcel size, always stored as the absolute quantity |a|.
struct Action {
  std::int64_t quantity = 0;

  friend auto operator<=>(const Action&, const Action&) = default;
};

struct Payoff {
  std::int64_t u_i = 0;
  std::int64_t u_j = 0;

  friend bool operator==(const Payoff&, const Payoff&) = default;
};

// Immutable game instance in canonical orientation (I long, J short). Action
// sets are {|B|, ..., 1} in descending order; zero plays are not enumerated.
// A side whose balance has been cleared to zero has an empty action set.
class GameInstance {
 public:
  const Holding& holding_i() const { return holding_i_; }
  const Holding& holding_j() const { return holding_j_; }
  std::int64_t balance_i() const { return holding_i_.balance; }
  std::int64_t balance_j() const { return holding_j_.balance; }
  std::int64_t issue_cap() const { return issue_cap_; }
  const std::vector<Action>& action_set_i() const { return action_set_i_; }
  const std::vector<Action>& action_set_j() const { return action_set_j_; }

  friend bool operator==(const GameInstance& a, const GameInstance& b) {
    return a.holding_i_ == b.holding_i_ && a.holding_j_ == b.holding_j_ &&
           a.issue_cap_ == b.issue_cap_;
  }

 private:
  GameInstance(std::int64_t balance_i, std::int64_t balance_j,
               std::int64_t issue_cap);

  friend GameInstance BuildInstance(std::int64_t, std::int64_t, std::int64_t);
  friend GameInstance ApplyTrade(const GameInstance&, std::int64_t);

  Holding holding_i_;
  Holding holding_j_;
  std::int64_t issue_cap_;
  std::vector<Action> action_set_i_;
  std::vector<Action> action_set_j_;
};

// Integer bimatrix. Cells are stored row-major; row r is player I's r-th
// action and column c is player J's c-th action. Payoffs need not be
// symmetric, so the solver can run on arbitrary integer games.
class PayoffMatrix {
 public:
  PayoffMatrix() = default;
  PayoffMatrix(std::vector<Action> row_actions, std::vector<Action> col_actions,
               std::vector<Payoff> cells);
  // Convenience for hand-written games: actions are labelled 1..n.
  static PayoffMatrix FromRows(const std::vector<std::vector<Payoff>>& rows);

  int rows() const { return static_cast<int>(row_actions_.size()); }
  int cols() const { return static_cast<int>(col_actions_.size()); }
  bool empty() const { return cells_.empty(); }
  const Payoff& at(int r, int c) const { return cells_[r * cols() + c]; }
  const std::vector<Action>& row_actions() const { return row_actions_; }
  const std::vector<Action>& col_actions() const { return col_actions_; }
  const std::vector<Payoff>& cells() const { return cells_; }

  friend bool operator==(const PayoffMatrix&, const PayoffMatrix&) = default;

 private:
  std::vector<Action> row_actions_;
  std::vector<Action> col_actions_;
  std::vector<Payoff> cells_;
};

// Accepts the two balances in either order and labels the long side I.
// Throws GameError: kZeroBalance, kSameSignBalances, kCapExceeded, kInvalidCap.
GameInstance BuildInstance(std::int64_t balance_a, std::int64_t balance_b,
                           std::int64_t issue_cap);

// (q, q) when 0 < q <= capacity, (0, 0) otherwise; q = offer.quantity.
Payoff BilateralPayoff(Action offer, Action capacity);

PayoffMatrix BuildPayoffMatrix(const GameInstance& instance);

// Moves `quantity` bonds from I to J. Throws kOverTrade if either balance
// would cross zero and kNonPositiveQuantity for quantity <= 0.
GameInstance ApplyTrade(const GameInstance& instance, std::int64_t quantity);

}  // namespace liqgame

#endif  // LIQGAME_CORE_H_
