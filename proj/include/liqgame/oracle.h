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

// Grid-search equilibrium oracle. It shares no code with the exact solver and
// exists to corroborate it: every profile on the 1/R simplex grid whose
// largest unilateral deviation gain is below 1/R is reported.

#ifndef LIQGAME_ORACLE_H_
#define LIQGAME_ORACLE_H_

#include <vector>

#include "liqgame/core.h"
#include "liqgame/solver.h"

namespace liqgame {

inline constexpr int kOracleDimensionCap = 4;

// probs_i[r] = counts_i[r] / resolution, likewise for J.
struct GridProfile {
  std::vector<int> counts_i;
  std::vector<int> counts_j;

  friend auto operator<=>(const GridProfile&, const GridProfile&) = default;
};

struct OracleResult {
  int resolution = 1;
  std::vector<GridProfile> profiles;  // sorted

  // True if some grid profile lies within `distance` (per coordinate) of
  // `profile`; the default distance is one grid step.
  bool ContainsNear(const MixedProfile& profile, double distance = -1) const;
};

// Throws kDimensionCapExceeded for matrices wider than kOracleDimensionCap.
OracleResult BruteForceOracle(const PayoffMatrix& matrix, int grid_resolution);

}  // namespace liqgame

#endif  // LIQGAME_ORACLE_H_
