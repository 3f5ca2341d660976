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

// Two-type Bayesian liquidity game. Player J (the column player) knows its own
// type; player I only holds a prior over it. Payoffs here are real-valued
// stylized levels and need not be symmetric.

#ifndef LIQGAME_BAYES_H_
#define LIQGAME_BAYES_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace liqgame {

inline constexpr double kBayesTolerance = 1e-12;

struct RealPayoff {
  double u_i = 0;
  double u_j = 0;
};

// rows = strategies of I, cols = strategies of J.
using RealBimatrix = std::vector<std::vector<RealPayoff>>;

struct TypeSpace {
  std::vector<std::string> types;
  std::vector<double> prior;

  // Throws kInvalidPrior unless entries are >= 0 and sum to 1 within 1e-12.
  void Validate() const;
  // Two-type space with weight p on the first type.
  TypeSpace WithFirstTypeWeight(double p) const;
};

struct ConditionalGame {
  std::vector<std::string> types;  // J's types
  std::vector<std::string> strategies_i;
  std::vector<std::string> strategies_j;
  std::vector<RealBimatrix> matrices;  // one per entry of `types`

  // Throws kInvalidGame when a matrix has the wrong shape or labels repeat.
  void Validate() const;
  const RealBimatrix& MatrixFor(const std::string& type) const;
  // Throw kUnknownLabel.
  int TypeIndex(const std::string& type) const;
  int IndexOfI(const std::string& label) const;
  int IndexOfJ(const std::string& label) const;
};

enum class DominanceKind { kStrict, kWeak };

struct DominantStrategy {
  std::string strategy;
  DominanceKind kind;
};

// J's type -> J's strategy label.
using ResponseMap = std::map<std::string, std::string>;

struct BayesianSolution {
  ResponseMap per_type_strategy_j;
  double threshold_p = 0;       // weight on the first type
  // No crossing inside [0, 1]: threshold_p is clamped to 1 and
  // strategy_i_below is preferred for every prior.
  bool exterior = false;
  std::string strategy_i_above;  // preferred for p > threshold_p
  std::string strategy_i_below;  // preferred for p < threshold_p
};

// J's strategy that weakly dominates every other one in the matrix of
// `type_index`, if any. Ties resolve to the earliest label.
std::optional<DominantStrategy> DominantStrategyPerType(
    const ConditionalGame& game, int type_index);

// Each type's dominant strategy; throws kNoDominantStrategy if a type has none.
ResponseMap DominantResponses(const ConditionalGame& game);

// sum_t prior(t) * u_i(strategy_i, response_j(t) | t).
double ExpectedPayoff(const ConditionalGame& game, const TypeSpace& space,
                      const std::string& strategy_i,
                      const ResponseMap& response_j);

// Prior weight on the first type at which I is indifferent between its two
// strategies. Throws kNoDependenceOnPrior when the two strategies pay the same
// for every prior.
// The prior vector of `space` is not used; only its type labels must match.
BayesianSolution IndifferenceThreshold(const ConditionalGame& game,
                                       const TypeSpace& space,
                                       const ResponseMap& response_j);

// I's strictly preferred strategy at first-type weight p, or nullopt when I is
// indifferent there.
std::optional<std::string> PreferredStrategy(const BayesianSolution& solution,
                                             double p);

}  // namespace liqgame

#endif  // LIQGAME_BAYES_H_
