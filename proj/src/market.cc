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

#include "liqgame/market.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "liqgame/error.h"
#include "liqgame/io.h"

namespace liqgame {
namespace {

std::vector<std::string> DistinctTypes(const std::vector<TypeStrategy>& labels) {
  std::vector<std::string> types;
  for (const auto& label : labels) {
    if (std::find(types.begin(), types.end(), label.type) == types.end()) {
      types.push_back(label.type);
    }
  }
  return types;
}

void CheckPrior(const std::vector<double>& prior, std::size_t n,
                const char* field) {
  if (prior.size() != n) {
    throw GameError(ErrorCode::kInvalidPrior, field,
                    "expected " + std::to_string(n) + " prior entries");
  }
  for (double w : prior) {
    if (!(w >= 0) || !std::isfinite(w)) {
      throw GameError(ErrorCode::kInvalidPrior, field,
                      "prior entries must be non-negative");
    }
  }
  if (std::abs(std::accumulate(prior.begin(), prior.end(), 0.0) - 1.0) >
      1e-9) {
    throw GameError(ErrorCode::kInvalidPrior, field, "prior must sum to 1");
  }
}

}  // namespace

std::string TypeStrategy::Label() const {
  return type.empty() ? strategy : type + "+" + strategy;
}

TypeStrategy TypeStrategy::Parse(std::string_view label) {
  const auto plus = label.find('+');
  if (plus == std::string_view::npos) return {"", std::string(label)};
  return {std::string(label.substr(0, plus)),
          std::string(label.substr(plus + 1))};
}

double RoundToTenth(double value) {
  // The nudge keeps decimal halves such as 0.25 from falling just short.
  return std::floor(value * 10.0 + 0.5 + 1e-9) / 10.0;
}

CompositionMatrix WeightByPriors(const TypePairGame& base,
                                 const std::vector<double>& prior_i,
                                 const std::vector<double>& prior_j) {
  CheckPrior(prior_i, base.types.size(), "prior_i");
  CheckPrior(prior_j, base.types.size(), "prior_j");
  CompositionMatrix out;
  out.prior_i = prior_i;
  out.prior_j = prior_j;
  for (const auto& t : base.types) {
    for (const auto& s : base.strategies_i) out.row_labels.push_back({t, s});
    for (const auto& s : base.strategies_j) out.col_labels.push_back({t, s});
  }
  const std::size_t n_si = base.strategies_i.size();
  const std::size_t n_sj = base.strategies_j.size();
  out.entries.assign(out.row_labels.size(),
                     std::vector<RealPayoff>(out.col_labels.size()));
  for (std::size_t ti = 0; ti < base.types.size(); ++ti) {
    for (std::size_t tj = 0; tj < base.types.size(); ++tj) {
      const auto it = base.matrices.find({base.types[ti], base.types[tj]});
      if (it == base.matrices.end()) {
        throw GameError(ErrorCode::kMissingTypePairMatrix,
                        "matrices." + base.types[ti] + "." + base.types[tj],
                        "no payoff matrix for type pair (" + base.types[ti] +
                            ", " + base.types[tj] + ")");
      }
      const RealBimatrix& m = it->second;
      bool shape_ok = m.size() == n_si;
      for (const auto& row : m) shape_ok = shape_ok && row.size() == n_sj;
      if (!shape_ok) {
        throw GameError(ErrorCode::kInvalidGame,
                        "matrices." + base.types[ti] + "." + base.types[tj],
                        "matrix shape does not match the strategy lists");
      }
      const double w = prior_i[ti] * prior_j[tj];
      for (std::size_t si = 0; si < n_si; ++si) {
        for (std::size_t sj = 0; sj < n_sj; ++sj) {
          out.entries[ti * n_si + si][tj * n_sj + sj] =
              RealPayoff{w * m[si][sj].u_i, w * m[si][sj].u_j};
        }
      }
    }
  }
  return out;
}

CompositionMatrix LoadPublishedMatrix(std::string_view id) {
  return LoadPublishedMatrix(id, FixtureDir());
}

CompositionMatrix LoadPublishedMatrix(std::string_view id,
                                      const std::filesystem::path& dir) {
  if (id != kIntermediateTable && id != kFinalTable) {
    throw GameError(ErrorCode::kUnknownTable, "published",
                    "unknown table '" + std::string(id) + "' (expected " +
                        std::string(kIntermediateTable) + " or " +
                        std::string(kFinalTable) + ")");
  }
  return CompositionFromCsv(ReadFile(dir / (std::string(id) + ".csv")));
}

QuadrantReport QuadrantAnalysis(const CompositionMatrix& matrix) {
  const auto row_types = DistinctTypes(matrix.row_labels);
  const auto col_types = DistinctTypes(matrix.col_labels);
  if (row_types.size() != 2 || col_types.size() != 2) {
    throw GameError(ErrorCode::kNotTwoTypes, "labels",
                    "quadrant analysis needs exactly two row and two column "
                    "types");
  }
  QuadrantReport report;
  for (const auto& rt : row_types) {
    for (const auto& ct : col_types) report.quadrants.push_back({rt, ct, 0});
  }
  for (int r = 0; r < matrix.rows(); ++r) {
    const int qr = matrix.row_labels[r].type == row_types[0] ? 0 : 1;
    for (int c = 0; c < matrix.cols(); ++c) {
      const int qc = matrix.col_labels[c].type == col_types[0] ? 0 : 1;
      const RealPayoff& cell = matrix.entries[r][c];
      const double volume = cell.u_i + cell.u_j;
      report.quadrants[qr * 2 + qc].sum += volume;
      ++report.total_cells;
      if (cell.u_i != 0 || cell.u_j != 0) ++report.nonzero_cells;
    }
  }
  for (const auto& q : report.quadrants) report.system_total += q.sum;
  report.hit_ratio =
      static_cast<double>(report.nonzero_cells) / report.total_cells;
  return report;
}

Quadrant BestQuadrant(const QuadrantReport& report) {
  if (report.quadrants.empty()) {
    throw GameError(ErrorCode::kNotTwoTypes, "quadrants", "empty report");
  }
  const Quadrant* best = &report.quadrants.front();
  for (const auto& q : report.quadrants) {
    if (q.sum > best->sum + 1e-9) best = &q;
  }
  return *best;
}

}  // namespace liqgame
