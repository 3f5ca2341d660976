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

#include <algorithm>
#include <cstdlib>
#include <string>

#include "liqgame/error.h"

namespace liqgame {
namespace {

std::vector<Action> DescendingActions(std::int64_t balance) {
  std::vector<Action> actions;
  const std::int64_t n = std::abs(balance);
  actions.reserve(static_cast<std::size_t>(n));
  for (std::int64_t q = n; q >= 1; --q) actions.push_back(Action{q});
  return actions;
}

}  // namespace

GameInstance::GameInstance(std::int64_t balance_i, std::int64_t balance_j,
                           std::int64_t issue_cap)
    : holding_i_{Player::kI, balance_i},
      holding_j_{Player::kJ, balance_j},
      issue_cap_(issue_cap),
      action_set_i_(DescendingActions(balance_i)),
      action_set_j_(DescendingActions(balance_j)) {}

PayoffMatrix::PayoffMatrix(std::vector<Action> row_actions,
                           std::vector<Action> col_actions,
                           std::vector<Payoff> cells)
    : row_actions_(std::move(row_actions)),
      col_actions_(std::move(col_actions)),
      cells_(std::move(cells)) {
  if (cells_.size() != row_actions_.size() * col_actions_.size()) {
    throw GameError(ErrorCode::kDimensionMismatch, "cells",
                    "cell count does not match action set sizes");
  }
}

PayoffMatrix PayoffMatrix::FromRows(
    const std::vector<std::vector<Payoff>>& rows) {
  const std::size_t n_cols = rows.empty() ? 0 : rows.front().size();
  std::vector<Action> row_actions, col_actions;
  std::vector<Payoff> cells;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != n_cols) {
      throw GameError(ErrorCode::kDimensionMismatch, "rows",
                      "ragged payoff rows");
    }
    row_actions.push_back(Action{static_cast<std::int64_t>(r + 1)});
    cells.insert(cells.end(), rows[r].begin(), rows[r].end());
  }
  for (std::size_t c = 0; c < n_cols; ++c) {
    col_actions.push_back(Action{static_cast<std::int64_t>(c + 1)});
  }
  return PayoffMatrix(std::move(row_actions), std::move(col_actions),
                      std::move(cells));
}

GameInstance BuildInstance(std::int64_t balance_a, std::int64_t balance_b,
                           std::int64_t issue_cap) {
  if (issue_cap <= 0) {
    throw GameError(ErrorCode::kInvalidCap, "issue_cap",
                    "issue cap must be positive");
  }
  if (balance_a == 0) {
    throw GameError(ErrorCode::kZeroBalance, "balance_i",
                    "balances must be nonzero");
  }
  if (balance_b == 0) {
    throw GameError(ErrorCode::kZeroBalance, "balance_j",
                    "balances must be nonzero");
  }
  if ((balance_a > 0) == (balance_b > 0)) {
    throw GameError(ErrorCode::kSameSignBalances, "balance_j",
                    "balances must have opposite signs (got " +
                        std::to_string(balance_a) + " and " +
                        std::to_string(balance_b) + ")");
  }
  const std::int64_t long_side = std::max(balance_a, balance_b);
  const std::int64_t short_side = std::min(balance_a, balance_b);
  if (long_side > issue_cap) {
    throw GameError(ErrorCode::kCapExceeded, "balance_i",
                    "|balance| exceeds issue cap " + std::to_string(issue_cap));
  }
  if (-short_side > issue_cap) {
    throw GameError(ErrorCode::kCapExceeded, "balance_j",
                    "|balance| exceeds issue cap " + std::to_string(issue_cap));
  }
  return GameInstance(long_side, short_side, issue_cap);
}

Payoff BilateralPayoff(Action offer, Action capacity) {
  if (offer.quantity > 0 && offer.quantity <= capacity.quantity) {
    return Payoff{offer.quantity, offer.quantity};
  }
  return Payoff{0, 0};
}

PayoffMatrix BuildPayoffMatrix(const GameInstance& instance) {
  const auto& rows = instance.action_set_i();
  const auto& cols = instance.action_set_j();
  std::vector<Payoff> cells;
  cells.reserve(rows.size() * cols.size());
  for (const Action& offer : rows) {
    for (const Action& capacity : cols) {
      cells.push_back(BilateralPayoff(offer, capacity));
    }
  }
  return PayoffMatrix(rows, cols, std::move(cells));
}

GameInstance ApplyTrade(const GameInstance& instance, std::int64_t quantity) {
  if (quantity <= 0) {
    throw GameError(ErrorCode::kNonPositiveQuantity, "quantity",
                    "trade quantity must be positive");
  }
  if (quantity > instance.balance_i() || quantity > -instance.balance_j()) {
    throw GameError(ErrorCode::kOverTrade, "quantity",
                    "trade of " + std::to_string(quantity) +
                        " would flip a balance sign");
  }
  return GameInstance(instance.balance_i() - quantity,
                      instance.balance_j() + quantity, instance.issue_cap());
}

}  // namespace liqgame
