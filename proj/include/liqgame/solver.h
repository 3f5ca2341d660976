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

// Equilibrium computation for integer bimatrix games.
//
// Pure equilibria are found by exhaustive best-response checks. Mixed
// equilibria are found by support enumeration: for each pair of equal-size
// supports the two indifference systems are solved exactly, and a candidate
// is kept only if it is a distribution and no pure deviation outside the
// support pays more. All probabilities are exact rationals.

#ifndef LIQGAME_SOLVER_H_
#define LIQGAME_SOLVER_H_

#include <functional>
#include <utility>
#include <vector>

#include "liqgame/core.h"
#include "liqgame/rational.h"

namespace liqgame {

struct PureEquilibrium {
  int row_index = 0;
  int col_index = 0;
  Payoff payoffs;

  friend bool operator==(const PureEquilibrium&,
                         const PureEquilibrium&) = default;
};

struct MixedProfile {
  std::vector<Rational> probs_i;  // over the matrix rows
  std::vector<Rational> probs_j;  // over the matrix columns

  friend bool operator==(const MixedProfile&, const MixedProfile&) = default;
};

struct SupportPair {
  std::vector<int> support_i;
  std::vector<int> support_j;
};

enum class Strictness { kStrict, kWeak };

struct Dominance {
  int dominated_index = 0;
  int dominating_index = 0;
  Strictness strictness = Strictness::kWeak;

  friend bool operator==(const Dominance&, const Dominance&) = default;
};

inline constexpr int kDefaultDimensionCap = 12;

struct SolverOptions {
  // Support enumeration is exponential in the matrix dimensions.
  int dimension_cap = kDefaultDimensionCap;
};

// Row-major list of every cell where neither player gains by deviating.
std::vector<PureEquilibrium> FindPureEquilibria(const PayoffMatrix& matrix);

// All equilibria reachable by support enumeration, in order of increasing
// support size and lexicographic supports within a size. Pure equilibria
// appear as degenerate profiles; exact duplicates are dropped.
// Throws kDimensionCapExceeded when either side exceeds options.dimension_cap.
std::vector<MixedProfile> SolveMixed(const PayoffMatrix& matrix,
                                     const SolverOptions& options = {});

// True iff no unilateral pure deviation improves either player's expected
// payoff by more than `tolerance`. Throws kDimensionMismatch.
bool VerifyEquilibrium(const PayoffMatrix& matrix, const MixedProfile& profile,
                       const Rational& tolerance = Rational(0));

// Expected payoffs (u_i, u_j) of a profile.
std::pair<Rational, Rational> ExpectedPayoffs(const PayoffMatrix& matrix,
                                              const MixedProfile& profile);

// Every ordered pair (x, y), x != y, where action y is at least as good as x
// against every opponent action. Strict when y is better everywhere.
std::vector<Dominance> DominatedActions(const PayoffMatrix& matrix,
                                        Player player);

// Visits equal-size support pairs in the enumeration order used by SolveMixed.
void ForEachSupportPair(int rows, int cols,
                        const std::function<void(const SupportPair&)>& visit);

MixedProfile DegenerateProfile(const PayoffMatrix& matrix,
                               const PureEquilibrium& eq);

}  // namespace liqgame

#endif  // LIQGAME_SOLVER_H_
