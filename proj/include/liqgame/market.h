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

// Market-composition analysis over (type, strategy) x (type, strategy)
// matrices: prior weighting, quadrant volume sums and the hit ratio.
//
// Volume in a cell is u_i + u_j. Values are kept at full precision; rounding
// to one decimal happens only when a matrix or report is serialized.

#ifndef LIQGAME_MARKET_H_
#define LIQGAME_MARKET_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liqgame/bayes.h"

namespace liqgame {

struct TypeStrategy {
  std::string type;  // empty for rows that carry no type
  std::string strategy;

  // "L+H", or just the strategy when the type is empty.
  std::string Label() const;
  static TypeStrategy Parse(std::string_view label);

  friend bool operator==(const TypeStrategy&, const TypeStrategy&) = default;
};

struct CompositionMatrix {
  std::vector<TypeStrategy> row_labels;
  std::vector<TypeStrategy> col_labels;
  std::vector<std::vector<RealPayoff>> entries;
  std::vector<double> prior_i;  // empty for published tables
  std::vector<double> prior_j;

  int rows() const { return static_cast<int>(row_labels.size()); }
  int cols() const { return static_cast<int>(col_labels.size()); }
};

// Base payoffs for every (row-type, col-type) pair.
struct TypePairGame {
  std::vector<std::string> types;
  std::vector<std::string> strategies_i;
  std::vector<std::string> strategies_j;
  std::map<std::pair<std::string, std::string>, RealBimatrix> matrices;
};

struct Quadrant {
  std::string row_type;
  std::string col_type;
  double sum = 0;
};

struct QuadrantReport {
  std::vector<Quadrant> quadrants;  // row-major in label order
  double system_total = 0;
  double hit_ratio = 0;
  int nonzero_cells = 0;
  int total_cells = 0;
};

inline constexpr std::string_view kIntermediateTable = "intermediate_2x4";
inline constexpr std::string_view kFinalTable = "final_4x4";

// Half-up rounding to one decimal place, used for all volume output.
double RoundToTenth(double value);

// entry((ti,si),(tj,sj)) = prior_i(ti) * prior_j(tj) * payoff(si,sj | ti,tj).
// Throws kMissingTypePairMatrix, kInvalidPrior.
CompositionMatrix WeightByPriors(const TypePairGame& base,
                                 const std::vector<double>& prior_i,
                                 const std::vector<double>& prior_j);

// Published tables are CSV files named <id>.csv in the fixture directory.
// Throws kUnknownTable.
CompositionMatrix LoadPublishedMatrix(std::string_view id);
CompositionMatrix LoadPublishedMatrix(std::string_view id,
                                      const std::filesystem::path& dir);

// Throws kNotTwoTypes unless rows and columns each carry exactly two types.
QuadrantReport QuadrantAnalysis(const CompositionMatrix& matrix);

// Largest quadrant sum; ties go to the first quadrant in row-major order.
Quadrant BestQuadrant(const QuadrantReport& report);

}  // namespace liqgame

#endif  // LIQGAME_MARKET_H_
