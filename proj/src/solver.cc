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

#include "liqgame/solver.h"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>

#include "liqgame/error.h"

namespace liqgame {
namespace {

// Fixed-width arithmetic that refuses to wrap; the solver falls back to
// arbitrary precision when it sees this.
struct Overflow {};

std::int64_t Mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
std::int64_t Sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
std::int64_t Add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
BigInt Mul(const BigInt& a, const BigInt& b) { return a * b; }
BigInt Sub(const BigInt& a, const BigInt& b) { return a - b; }
BigInt Add(const BigInt& a, const BigInt& b) { return a + b; }

template <typename Int>
int Sign(const Int& x) {
  return x > 0 ? 1 : (x < 0 ? -1 : 0);
}

// Integer solution y / det of a square system, computed fraction-free
// (Bareiss elimination followed by exact back-substitution).
template <typename Int>
struct ScaledSolution {
  std::vector<Int> y;
  Int det;
};

template <typename Int>
std::optional<ScaledSolution<Int>> SolveFractionFree(
    std::vector<std::vector<Int>> a) {
  const int n = static_cast<int>(a.size());
  Int prev = 1;
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != k) std::swap(a[pivot], a[k]);
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j <= n; ++j) {
        a[i][j] = Sub(Mul(a[i][j], a[k][k]), Mul(a[i][k], a[k][j])) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  ScaledSolution<Int> out{std::vector<Int>(n), a[n - 1][n - 1]};
  for (int i = n - 1; i >= 0; --i) {
    Int acc = Mul(out.det, a[i][n]);
    for (int j = i + 1; j < n; ++j) acc = Sub(acc, Mul(a[i][j], out.y[j]));
    out.y[i] = acc / a[i][i];
  }
  return out;
}

// Indifference system for the player choosing among `own` while the opponent
// mixes over `other`: sum_s payoff(t, s) x_s - v = 0 for t in own, sum x = 1.
// `payoff(t, s)` is the indifferent player's payoff.
template <typename Int, typename PayoffFn>
std::optional<ScaledSolution<Int>> SolveIndifference(
    const std::vector<int>& own, const std::vector<int>& other,
    PayoffFn payoff) {
  const int k = static_cast<int>(other.size());
  std::vector<std::vector<Int>> a(k + 1, std::vector<Int>(k + 2, Int(0)));
  for (int t = 0; t < k; ++t) {
    for (int s = 0; s < k; ++s) a[t][s] = Int(payoff(own[t], other[s]));
    a[t][k] = Int(-1);
  }
  for (int s = 0; s < k; ++s) a[k][s] = Int(1);
  a[k][k + 1] = Int(1);
  return SolveFractionFree<Int>(std::move(a));
}

template <typename Int>
bool IsDistribution(const ScaledSolution<Int>& sol, int k) {
  const int det_sign = Sign(sol.det);
  for (int s = 0; s < k; ++s) {
    if (Sign(sol.y[s]) * det_sign < 0) return false;
  }
  return true;
}

// No action outside `own` beats the indifference value v = y[k] / det against
// the opponent mix y[0..k) / det.
template <typename Int, typename PayoffFn>
bool NoBetterOutside(const ScaledSolution<Int>& sol, int n_own,
                     const std::vector<int>& own,
                     const std::vector<int>& other, PayoffFn payoff) {
  const int k = static_cast<int>(other.size());
  const int det_sign = Sign(sol.det);
  std::size_t next = 0;
  for (int t = 0; t < n_own; ++t) {
    if (next < own.size() && own[next] == t) {
      ++next;
      continue;
    }
    Int lhs = 0;
    for (int s = 0; s < k; ++s) {
      lhs = Add(lhs, Mul(Int(payoff(t, other[s])), sol.y[s]));
    }
    if (Sign(Sub(lhs, sol.y[k])) * det_sign > 0) return false;
  }
  return true;
}

template <typename Int>
std::vector<Rational> Expand(const ScaledSolution<Int>& sol,
                             const std::vector<int>& support, int size) {
  std::vector<Rational> probs(size, Rational(0));
  // boost::rational rejects negative unbounded denominators, so fix the
  // sign here.
  const int sign = Sign(sol.det);
  const BigInt det = sign * BigInt(sol.det);
  for (std::size_t s = 0; s < support.size(); ++s) {
    probs[support[s]] = Rational(sign * BigInt(sol.y[s]), det);
  }
  return probs;
}

template <typename Int>
std::optional<MixedProfile> TrySupportPair(const PayoffMatrix& m,
                                           const SupportPair& pair) {
  auto payoff_i = [&m](int r, int c) { return m.at(r, c).u_i; };
  // Indexed (own = column, other = row) for player J.
  auto payoff_j = [&m](int c, int r) { return m.at(r, c).u_j; };
  const int k = static_cast<int>(pair.support_i.size());

  // Player I indifferent over support_i pins down J's mix q.
  auto q = SolveIndifference<Int>(pair.support_i, pair.support_j, payoff_i);
  if (!q || !IsDistribution(*q, k)) return std::nullopt;
  auto p = SolveIndifference<Int>(pair.support_j, pair.support_i, payoff_j);
  if (!p || !IsDistribution(*p, k)) return std::nullopt;
  if (!NoBetterOutside(*q, m.rows(), pair.support_i, pair.support_j,
                       payoff_i) ||
      !NoBetterOutside(*p, m.cols(), pair.support_j, pair.support_i,
                       payoff_j)) {
    return std::nullopt;
  }
  return MixedProfile{Expand(*p, pair.support_i, m.rows()),
                      Expand(*q, pair.support_j, m.cols())};
}

void ForEachSubset(int n, int k,
                   const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void CheckNonEmpty(const PayoffMatrix& matrix) {
  if (matrix.empty()) {
    throw GameError(ErrorCode::kEmptyMatrix, "matrix",
                    "payoff matrix has no cells");
  }
}

}  // namespace

std::vector<PureEquilibrium> FindPureEquilibria(const PayoffMatrix& matrix) {
  CheckNonEmpty(matrix);
  const int rows = matrix.rows();
  const int cols = matrix.cols();
  std::vector<std::int64_t> best_i(cols, INT64_MIN), best_j(rows, INT64_MIN);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      best_i[c] = std::max(best_i[c], matrix.at(r, c).u_i);
      best_j[r] = std::max(best_j[r], matrix.at(r, c).u_j);
    }
  }
  std::vector<PureEquilibrium> out;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const Payoff& cell = matrix.at(r, c);
      if (cell.u_i == best_i[c] && cell.u_j == best_j[r]) {
        out.push_back(PureEquilibrium{r, c, cell});
      }
    }
  }
  return out;
}

void ForEachSupportPair(int rows, int cols,
                        const std::function<void(const SupportPair&)>& visit) {
  SupportPair pair;
  for (int k = 1; k <= std::min(rows, cols); ++k) {
    ForEachSubset(rows, k, [&](const std::vector<int>& si) {
      pair.support_i = si;
      ForEachSubset(cols, k, [&](const std::vector<int>& sj) {
        pair.support_j = sj;
        visit(pair);
      });
    });
  }
}

std::vector<MixedProfile> SolveMixed(const PayoffMatrix& matrix,
                                     const SolverOptions& options) {
  CheckNonEmpty(matrix);
  if (matrix.rows() > options.dimension_cap ||
      matrix.cols() > options.dimension_cap) {
    throw GameError(ErrorCode::kDimensionCapExceeded, "matrix",
                    std::to_string(matrix.rows()) + "x" +
                        std::to_string(matrix.cols()) +
                        " exceeds dimension cap " +
                        std::to_string(options.dimension_cap));
  }
  std::vector<MixedProfile> out;
  ForEachSupportPair(matrix.rows(), matrix.cols(), [&](const SupportPair& sp) {
    std::optional<MixedProfile> found;
    try {
      found = TrySupportPair<std::int64_t>(matrix, sp);
    } catch (const Overflow&) {
      found = TrySupportPair<BigInt>(matrix, sp);
    }
    if (found && std::find(out.begin(), out.end(), *found) == out.end()) {
      out.push_back(std::move(*found));
    }
  });
  return out;
}

std::pair<Rational, Rational> ExpectedPayoffs(const PayoffMatrix& matrix,
                                              const MixedProfile& profile) {
  if (static_cast<int>(profile.probs_i.size()) != matrix.rows() ||
      static_cast<int>(profile.probs_j.size()) != matrix.cols()) {
    throw GameError(ErrorCode::kDimensionMismatch, "profile",
                    "profile dimensions do not match the matrix");
  }
  Rational u_i(0), u_j(0);
  for (int r = 0; r < matrix.rows(); ++r) {
    if (profile.probs_i[r].numerator() == 0) continue;
    for (int c = 0; c < matrix.cols(); ++c) {
      if (profile.probs_j[c].numerator() == 0) continue;
      const Rational w = profile.probs_i[r] * profile.probs_j[c];
      u_i += w * BigInt(matrix.at(r, c).u_i);
      u_j += w * BigInt(matrix.at(r, c).u_j);
    }
  }
  return {u_i, u_j};
}

bool VerifyEquilibrium(const PayoffMatrix& matrix, const MixedProfile& profile,
                       const Rational& tolerance) {
  const auto [u_i, u_j] = ExpectedPayoffs(matrix, profile);
  for (int r = 0; r < matrix.rows(); ++r) {
    Rational deviation(0);
    for (int c = 0; c < matrix.cols(); ++c) {
      deviation += profile.probs_j[c] * BigInt(matrix.at(r, c).u_i);
    }
    if (deviation - u_i > tolerance) return false;
  }
  for (int c = 0; c < matrix.cols(); ++c) {
    Rational deviation(0);
    for (int r = 0; r < matrix.rows(); ++r) {
      deviation += profile.probs_i[r] * BigInt(matrix.at(r, c).u_j);
    }
    if (deviation - u_j > tolerance) return false;
  }
  return true;
}

std::vector<Dominance> DominatedActions(const PayoffMatrix& matrix,
                                        Player player) {
  CheckNonEmpty(matrix);
  const bool rows = player == Player::kI;
  const int n_own = rows ? matrix.rows() : matrix.cols();
  const int n_other = rows ? matrix.cols() : matrix.rows();
  auto value = [&](int own, int other) {
    return rows ? matrix.at(own, other).u_i : matrix.at(other, own).u_j;
  };
  std::vector<Dominance> out;
  for (int x = 0; x < n_own; ++x) {
    for (int y = 0; y < n_own; ++y) {
      if (x == y) continue;
      bool weak = true;
      bool strict = true;
      for (int o = 0; o < n_other && weak; ++o) {
        weak = value(y, o) >= value(x, o);
        strict = strict && value(y, o) > value(x, o);
      }
      if (weak) {
        out.push_back(Dominance{x, y,
                                strict ? Strictness::kStrict
                                       : Strictness::kWeak});
      }
    }
  }
  return out;
}

MixedProfile DegenerateProfile(const PayoffMatrix& matrix,
                               const PureEquilibrium& eq) {
  MixedProfile profile{std::vector<Rational>(matrix.rows(), Rational(0)),
                       std::vector<Rational>(matrix.cols(), Rational(0))};
  profile.probs_i[eq.row_index] = 1;
  profile.probs_j[eq.col_index] = 1;
  return profile;
}

}  // namespace liqgame
