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

#include "liqgame/oracle.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "liqgame/error.h"

namespace liqgame {
namespace {

// Integer form of the gain test. With p = k / R and q = l / R the gain of I is
//   sum_r k_r (Umax - U_r) / R^2  where U = A l,
// so "gain < 1/R" is "sum_r k_r (Umax - U_r) < R". Same for J with V = B^T k.
class GridSearch {
 public:
  GridSearch(const PayoffMatrix& matrix, int resolution)
      : m_(matrix.rows()), n_(matrix.cols()), grid_(resolution) {
    for (int r = 0; r < m_; ++r) {
      for (int c = 0; c < n_; ++c) {
        a_[r][c] = matrix.at(r, c).u_i;
        b_[r][c] = matrix.at(r, c).u_j;
      }
    }
  }

  std::vector<GridProfile> Run() {
    EnumerateColumns(0, static_cast<int>(grid_));
    return std::move(found_);
  }

 private:
  static constexpr int kMax = kOracleDimensionCap;

  void EnumerateColumns(int c, int remaining) {
    if (c == n_ - 1) {
      l_[c] = remaining;
      ScoreColumnMix();
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      l_[c] = k;
      EnumerateColumns(c + 1, remaining - k);
    }
  }

  void ScoreColumnMix() {
    std::int64_t best = INT64_MIN;
    for (int r = 0; r < m_; ++r) {
      std::int64_t u = 0;
      for (int c = 0; c < n_; ++c) u += a_[r][c] * l_[c];
      deficit_[r] = u;
      best = std::max(best, u);
    }
    for (int r = 0; r < m_; ++r) deficit_[r] = best - deficit_[r];

    // For any column t, gain_J >= sum_r k_r w_t[r] with
    // w_t[r] = sum_c l_c (B[r][t] - B[r][c]); suffix minima of w_t bound the
    // rows not yet fixed.
    for (int t = 0; t < n_; ++t) {
      for (int r = 0; r < m_; ++r) {
        std::int64_t w = 0;
        for (int c = 0; c < n_; ++c) w += l_[c] * (b_[r][t] - b_[r][c]);
        weight_[t][r] = w;
      }
      suffix_min_[t][m_ - 1] = weight_[t][m_ - 1];
      for (int r = m_ - 2; r >= 0; --r) {
        suffix_min_[t][r] = std::min(weight_[t][r], suffix_min_[t][r + 1]);
      }
    }
    std::int64_t value[kMax] = {};
    std::int64_t bound[kMax] = {};
    EnumerateRows(0, static_cast<int>(grid_), 0, value, bound);
  }

  bool BoundExceeded(int r, int remaining, const std::int64_t* bound) const {
    for (int t = 0; t < n_; ++t) {
      if (bound[t] + remaining * suffix_min_[t][r] >= grid_) return true;
    }
    return false;
  }

  // `value` holds J's column payoffs against the rows fixed so far.
  void EnumerateRows(int r, int remaining, std::int64_t cost,
                     const std::int64_t* value, const std::int64_t* bound) {
    if (BoundExceeded(r, remaining, bound)) return;
    std::int64_t next[kMax] = {};
    std::int64_t next_bound[kMax];
    if (r == m_ - 1) {
      if (cost + remaining * deficit_[r] >= grid_) return;
      k_[r] = remaining;
      for (int c = 0; c < n_; ++c) next[c] = value[c] + b_[r][c] * remaining;
      CheckColumnGain(next);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      const std::int64_t step = cost + k * deficit_[r];
      if (step >= grid_) break;
      k_[r] = k;
      for (int c = 0; c < n_; ++c) next[c] = value[c] + b_[r][c] * k;
      for (int t = 0; t < n_; ++t) next_bound[t] = bound[t] + weight_[t][r] * k;
      EnumerateRows(r + 1, remaining - k, step, next, next_bound);
    }
  }

  void CheckColumnGain(const std::int64_t* value) {
    const std::int64_t best = *std::max_element(value, value + n_);
    std::int64_t gain = 0;
    for (int c = 0; c < n_; ++c) gain += l_[c] * (best - value[c]);
    if (gain < grid_) {
      found_.push_back(GridProfile{std::vector<int>(k_, k_ + m_),
                                   std::vector<int>(l_, l_ + n_)});
    }
  }

  int m_, n_;
  std::int64_t grid_;
  std::int64_t a_[kMax][kMax] = {};
  std::int64_t b_[kMax][kMax] = {};
  std::int64_t deficit_[kMax] = {};
  std::int64_t weight_[kMax][kMax] = {};
  std::int64_t suffix_min_[kMax][kMax] = {};
  int k_[kMax] = {};
  int l_[kMax] = {};
  std::vector<GridProfile> found_;
};

}  // namespace

bool OracleResult::ContainsNear(const MixedProfile& profile,
                                double distance) const {
  const double steps = distance < 0 ? 1.0 : distance * resolution;
  const double slack = 1e-9;
  auto close = [&](const std::vector<int>& counts,
                   const std::vector<Rational>& probs) {
    if (counts.size() != probs.size()) return false;
    for (std::size_t k = 0; k < counts.size(); ++k) {
      if (std::abs(counts[k] - ToDouble(probs[k]) * resolution) >
          steps + slack) {
        return false;
      }
    }
    return true;
  };
  return std::any_of(profiles.begin(), profiles.end(),
                     [&](const GridProfile& g) {
                       return close(g.counts_i, profile.probs_i) &&
                              close(g.counts_j, profile.probs_j);
                     });
}

OracleResult BruteForceOracle(const PayoffMatrix& matrix, int grid_resolution) {
  if (matrix.empty()) {
    throw GameError(ErrorCode::kEmptyMatrix, "matrix",
                    "payoff matrix has no cells");
  }
  if (matrix.rows() > kOracleDimensionCap ||
      matrix.cols() > kOracleDimensionCap) {
    throw GameError(ErrorCode::kDimensionCapExceeded, "matrix",
                    "oracle supports at most " +
                        std::to_string(kOracleDimensionCap) +
                        " actions per player");
  }
  if (grid_resolution < 1) {
    throw GameError(ErrorCode::kInvalidConfig, "grid_resolution",
                    "grid resolution must be positive");
  }
  OracleResult result;
  result.resolution = grid_resolution;
  result.profiles = GridSearch(matrix, grid_resolution).Run();
  std::sort(result.profiles.begin(), result.profiles.end());
  return result;
}

}  // namespace liqgame
