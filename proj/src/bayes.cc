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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "liqgame/error.h"

namespace liqgame {
namespace {

int IndexOf(const std::vector<std::string>& labels, const std::string& label,
            const char* field) {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    throw GameError(ErrorCode::kUnknownLabel, field,
                    "unknown label '" + label + "'");
  }
  return static_cast<int>(it - labels.begin());
}

void RequireUnique(const std::vector<std::string>& labels, const char* field) {
  if (std::set<std::string>(labels.begin(), labels.end()).size() !=
      labels.size()) {
    throw GameError(ErrorCode::kInvalidGame, field, "duplicate labels");
  }
}

// Payoff to I of playing `strategy_i` against the response of type `t`.
double PayoffAgainstType(const ConditionalGame& game, int t, int strategy_i,
                         const ResponseMap& response_j) {
  const auto it = response_j.find(game.types[t]);
  if (it == response_j.end()) {
    throw GameError(ErrorCode::kUnknownLabel, "response_j",
                    "no response given for type '" + game.types[t] + "'");
  }
  return game.matrices[t][strategy_i][game.IndexOfJ(it->second)].u_i;
}

void CheckTypesMatch(const ConditionalGame& game, const TypeSpace& space) {
  if (space.types != game.types) {
    throw GameError(ErrorCode::kInvalidGame, "types",
                    "type space labels do not match the game");
  }
}

}  // namespace

void TypeSpace::Validate() const {
  if (types.empty() || types.size() != prior.size()) {
    throw GameError(ErrorCode::kInvalidPrior, "prior",
                    "one prior entry is required per type");
  }
  RequireUnique(types, "types");
  for (double w : prior) {
    if (!(w >= 0) || !std::isfinite(w)) {
      throw GameError(ErrorCode::kInvalidPrior, "prior",
                      "prior entries must be non-negative");
    }
  }
  const double total = std::accumulate(prior.begin(), prior.end(), 0.0);
  if (std::abs(total - 1.0) > kBayesTolerance) {
    throw GameError(ErrorCode::kInvalidPrior, "prior",
                    "prior must sum to 1");
  }
}

TypeSpace TypeSpace::WithFirstTypeWeight(double p) const {
  if (types.size() != 2) {
    throw GameError(ErrorCode::kInvalidGame, "types",
                    "exactly two types are required");
  }
  if (!(p >= 0 && p <= 1)) {
    throw GameError(ErrorCode::kInvalidPrior, "prior",
                    "weight must lie in [0, 1]");
  }
  return TypeSpace{types, {p, 1.0 - p}};
}

void ConditionalGame::Validate() const {
  if (types.empty() || strategies_i.empty() || strategies_j.empty()) {
    throw GameError(ErrorCode::kInvalidGame, "types",
                    "types and strategies must be non-empty");
  }
  RequireUnique(types, "types");
  RequireUnique(strategies_i, "strategies");
  RequireUnique(strategies_j, "strategies");
  if (matrices.size() != types.size()) {
    throw GameError(ErrorCode::kInvalidGame, "matrices",
                    "one matrix is required per type");
  }
  for (std::size_t t = 0; t < matrices.size(); ++t) {
    const RealBimatrix& m = matrices[t];
    bool ok = m.size() == strategies_i.size();
    for (const auto& row : m) ok = ok && row.size() == strategies_j.size();
    if (!ok) {
      throw GameError(ErrorCode::kInvalidGame, "matrices." + types[t],
                      "matrix shape does not match the strategy lists");
    }
  }
}

const RealBimatrix& ConditionalGame::MatrixFor(const std::string& type) const {
  return matrices[TypeIndex(type)];
}

int ConditionalGame::TypeIndex(const std::string& type) const {
  return IndexOf(types, type, "types");
}

int ConditionalGame::IndexOfI(const std::string& label) const {
  return IndexOf(strategies_i, label, "strategy_i");
}

int ConditionalGame::IndexOfJ(const std::string& label) const {
  return IndexOf(strategies_j, label, "strategy_j");
}

std::optional<DominantStrategy> DominantStrategyPerType(
    const ConditionalGame& game, int type_index) {
  if (type_index < 0 || type_index >= static_cast<int>(game.types.size())) {
    throw GameError(ErrorCode::kUnknownLabel, "type_index",
                    "type index out of range");
  }
  const RealBimatrix& m = game.matrices[type_index];
  const int n_rows = static_cast<int>(game.strategies_i.size());
  const int n_cols = static_cast<int>(game.strategies_j.size());
  for (int s = 0; s < n_cols; ++s) {
    bool weak = true;
    bool strict = true;
    for (int other = 0; other < n_cols && weak; ++other) {
      if (other == s) continue;
      for (int r = 0; r < n_rows; ++r) {
        if (m[r][s].u_j < m[r][other].u_j) weak = false;
        if (!(m[r][s].u_j > m[r][other].u_j)) strict = false;
      }
    }
    if (weak) {
      return DominantStrategy{game.strategies_j[s], strict
                                                        ? DominanceKind::kStrict
                                                        : DominanceKind::kWeak};
    }
  }
  return std::nullopt;
}

ResponseMap DominantResponses(const ConditionalGame& game) {
  ResponseMap responses;
  for (int t = 0; t < static_cast<int>(game.types.size()); ++t) {
    const auto dominant = DominantStrategyPerType(game, t);
    if (!dominant) {
      throw GameError(ErrorCode::kNoDominantStrategy,
                      "matrices." + game.types[t],
                      "type '" + game.types[t] +
                          "' has no dominant strategy; supply a response");
    }
    responses[game.types[t]] = dominant->strategy;
  }
  return responses;
}

double ExpectedPayoff(const ConditionalGame& game, const TypeSpace& space,
                      const std::string& strategy_i,
                      const ResponseMap& response_j) {
  CheckTypesMatch(game, space);
  const int s = game.IndexOfI(strategy_i);
  double total = 0;
  for (int t = 0; t < static_cast<int>(game.types.size()); ++t) {
    total += space.prior[t] * PayoffAgainstType(game, t, s, response_j);
  }
  return total;
}

BayesianSolution IndifferenceThreshold(const ConditionalGame& game,
                                       const TypeSpace& space,
                                       const ResponseMap& response_j) {
  CheckTypesMatch(game, space);
  if (game.types.size() != 2) {
    throw GameError(ErrorCode::kInvalidGame, "types",
                    "the threshold needs exactly two types");
  }
  if (game.strategies_i.size() != 2) {
    throw GameError(ErrorCode::kInvalidGame, "strategies",
                    "the threshold needs exactly two strategies for I");
  }
  const std::string& first = game.strategies_i[0];
  const std::string& second = game.strategies_i[1];
  // diff(p) = E[first] - E[second] = alpha + beta * p.
  const double alpha = PayoffAgainstType(game, 1, 0, response_j) -
                       PayoffAgainstType(game, 1, 1, response_j);
  const double beta = PayoffAgainstType(game, 0, 0, response_j) -
                      PayoffAgainstType(game, 0, 1, response_j) - alpha;

  BayesianSolution out;
  for (const auto& type : game.types) {
    out.per_type_strategy_j[type] = response_j.at(type);
  }
  if (std::abs(beta) <= kBayesTolerance) {
    if (std::abs(alpha) <= kBayesTolerance) {
      throw GameError(ErrorCode::kNoDependenceOnPrior, "response_j",
                      "both strategies pay the same for every prior");
    }
    out.threshold_p = 1.0;
    out.exterior = true;
    out.strategy_i_below = alpha > 0 ? first : second;
    out.strategy_i_above = alpha > 0 ? second : first;
    return out;
  }
  const double root = -alpha / beta + 0.0;  // no negative zero
  if (root < 0.0 || root > 1.0) {
    // No crossing in [0, 1]: report the strategy preferred everywhere as the
    // one below a threshold clamped to 1.
    const bool first_wins = alpha + beta * 0.5 > 0;
    out.threshold_p = 1.0;
    out.exterior = true;
    out.strategy_i_below = first_wins ? first : second;
    out.strategy_i_above = first_wins ? second : first;
    return out;
  }
  out.threshold_p = root;
  out.strategy_i_above = beta > 0 ? first : second;
  out.strategy_i_below = beta > 0 ? second : first;
  return out;
}

std::optional<std::string> PreferredStrategy(const BayesianSolution& solution,
                                             double p) {
  if (solution.exterior) return solution.strategy_i_below;
  if (p > solution.threshold_p) return solution.strategy_i_above;
  if (p < solution.threshold_p) return solution.strategy_i_below;
  return std::nullopt;
}

}  // namespace liqgame
