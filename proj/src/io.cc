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

#include "liqgame/io.h"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "liqgame/error.h"

namespace liqgame {
namespace {

[[noreturn]] void Fail(const std::string& field, const std::string& message) {
  throw GameError(ErrorCode::kParseError, field, message);
}

const Json& Member(const Json& doc, const std::string& key,
                   const std::string& context) {
  if (!doc.is_object()) Fail(context, "expected a JSON object");
  const auto it = doc.find(key);
  if (it == doc.end()) Fail(context.empty() ? key : context + "." + key,
                            "missing field");
  return *it;
}

std::string Join(const std::string& context, const std::string& key) {
  return context.empty() ? key : context + "." + key;
}

std::int64_t AsInt(const Json& v, const std::string& field) {
  if (!v.is_number_integer()) Fail(field, "expected an integer");
  return v.get<std::int64_t>();
}

double AsReal(const Json& v, const std::string& field) {
  if (!v.is_number()) Fail(field, "expected a number");
  return v.get<double>();
}

std::string AsString(const Json& v, const std::string& field) {
  if (!v.is_string()) Fail(field, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> AsStrings(const Json& v, const std::string& field) {
  if (!v.is_array()) Fail(field, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.push_back(AsString(v[k], field + "[" + std::to_string(k) + "]"));
  }
  return out;
}

std::vector<double> AsReals(const Json& v, const std::string& field) {
  if (!v.is_array()) Fail(field, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.push_back(AsReal(v[k], field + "[" + std::to_string(k) + "]"));
  }
  return out;
}

void RejectUnknownKeys(const Json& doc, const std::set<std::string>& allowed,
                       const std::string& context) {
  for (const auto& [key, value] : doc.items()) {
    if (!allowed.count(key)) Fail(Join(context, key), "unknown field");
  }
}

// [[[u_i, u_j], ...], ...]
RealBimatrix AsRealBimatrix(const Json& v, const std::string& field) {
  if (!v.is_array()) Fail(field, "expected a matrix of [u_i, u_j] pairs");
  RealBimatrix m;
  for (std::size_t r = 0; r < v.size(); ++r) {
    const std::string row_field = field + "[" + std::to_string(r) + "]";
    if (!v[r].is_array()) Fail(row_field, "expected a row of pairs");
    std::vector<RealPayoff> row;
    for (std::size_t c = 0; c < v[r].size(); ++c) {
      const std::string cell = row_field + "[" + std::to_string(c) + "]";
      const Json& pair = v[r][c];
      if (!pair.is_array() || pair.size() != 2) Fail(cell, "expected a pair");
      row.push_back({AsReal(pair[0], cell), AsReal(pair[1], cell)});
    }
    m.push_back(std::move(row));
  }
  return m;
}

std::string FormatTenth(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.1f", RoundToTenth(value));
  return buf;
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

IntRange AsRange(const Json& v, const std::string& field) {
  if (!v.is_array() || v.size() != 2) Fail(field, "expected [lo, hi]");
  return IntRange{AsInt(v[0], field), AsInt(v[1], field)};
}

StrategySpec AsStrategy(const Json& v, const std::string& field) {
  auto from_kind = [&](const std::string& kind) -> StrategySpec {
    if (kind == "uniform_random") return StrategySpec::UniformRandom();
    if (kind == "full_balance") return StrategySpec::FullBalance();
    if (kind == "high") return StrategySpec::High();
    if (kind == "low") return StrategySpec::Low();
    if (kind == "fixed_fraction") {
      return StrategySpec{StrategyKind::kFixedFraction, std::nullopt};
    }
    Fail(field, "unknown strategy kind '" + kind + "'");
  };
  if (v.is_string()) return from_kind(v.get<std::string>());
  if (!v.is_object()) Fail(field, "expected a strategy name or object");
  RejectUnknownKeys(v, {"kind", "fraction"}, field);
  StrategySpec spec = from_kind(AsString(Member(v, "kind", field),
                                         Join(field, "kind")));
  if (v.contains("fraction")) {
    spec.fraction = AsReal(v["fraction"], Join(field, "fraction"));
  }
  return spec;
}

Json StrategyToJson(const StrategySpec& spec) {
  switch (spec.kind) {
    case StrategyKind::kFixedFraction:
      return Json{{"kind", "fixed_fraction"}, {"fraction", *spec.fraction}};
    case StrategyKind::kUniformRandom:
      return Json{{"kind", "uniform_random"}};
    case StrategyKind::kFullBalance:
      return Json{{"kind", "full_balance"}};
  }
  return Json();
}

const char* ModeName(SimMode mode) {
  return mode == SimMode::kOneShot ? "one_shot" : "repeated";
}

}  // namespace

std::filesystem::path FixtureDir() {
  if (const char* env = std::getenv("LIQGAME_FIXTURES"); env && *env) {
    return env;
  }
  return LIQGAME_FIXTURE_DIR;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw GameError(ErrorCode::kIoError, path.string(), "cannot open file");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFileAtomic(const std::filesystem::path& path,
                     std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw GameError(ErrorCode::kIoError, path.string(), "write failed");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw GameError(ErrorCode::kIoError, path.string(), "rename failed");
  }
}

Json ParseJson(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    Fail(std::string(source), e.what());
  }
}

Json InstanceToJson(const GameInstance& instance) {
  return Json{{"balance_i", instance.balance_i()},
              {"balance_j", instance.balance_j()},
              {"issue_cap", instance.issue_cap()}};
}

GameInstance InstanceFromJson(const Json& doc) {
  RejectUnknownKeys(doc, {"balance_i", "balance_j", "issue_cap"}, "");
  return BuildInstance(AsInt(Member(doc, "balance_i", ""), "balance_i"),
                       AsInt(Member(doc, "balance_j", ""), "balance_j"),
                       AsInt(Member(doc, "issue_cap", ""), "issue_cap"));
}

Json MatrixToJson(const PayoffMatrix& matrix) {
  Json rows = Json::array();
  for (int r = 0; r < matrix.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < matrix.cols(); ++c) {
      row.push_back(Json::array({matrix.at(r, c).u_i, matrix.at(r, c).u_j}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string MatrixToCsv(const PayoffMatrix& matrix) {
  std::string out;
  for (int r = 0; r < matrix.rows(); ++r) {
    for (int c = 0; c < matrix.cols(); ++c) {
      if (c) out += ',';
      out += std::to_string(matrix.at(r, c).u_i) + "|" +
             std::to_string(matrix.at(r, c).u_j);
    }
    out += '\n';
  }
  return out;
}

Json PureToJson(const PureEquilibrium& eq) {
  return Json{{"row", eq.row_index},
              {"col", eq.col_index},
              {"payoffs", Json::array({eq.payoffs.u_i, eq.payoffs.u_j})}};
}

Json MixedToJson(const MixedProfile& profile) {
  Json probs_i = Json::array(), probs_j = Json::array();
  for (const auto& p : profile.probs_i) probs_i.push_back(ToString(p));
  for (const auto& q : profile.probs_j) probs_j.push_back(ToString(q));
  return Json{{"probs_i", probs_i}, {"probs_j", probs_j}};
}

MixedProfile MixedFromJson(const Json& doc) {
  MixedProfile profile;
  for (const auto& s : AsStrings(Member(doc, "probs_i", ""), "probs_i")) {
    profile.probs_i.push_back(ParseRational(s));
  }
  for (const auto& s : AsStrings(Member(doc, "probs_j", ""), "probs_j")) {
    profile.probs_j.push_back(ParseRational(s));
  }
  return profile;
}

BayesDocument BayesFromJson(const Json& doc) {
  RejectUnknownKeys(doc,
                    {"types", "prior", "strategies", "strategies_j",
                     "matrices", "responses"},
                    "");
  BayesDocument out;
  ConditionalGame& game = out.game;
  game.types = AsStrings(Member(doc, "types", ""), "types");
  game.strategies_i = AsStrings(Member(doc, "strategies", ""), "strategies");
  game.strategies_j = doc.contains("strategies_j")
                          ? AsStrings(doc["strategies_j"], "strategies_j")
                          : game.strategies_i;
  const Json& matrices = Member(doc, "matrices", "");
  if (!matrices.is_object()) Fail("matrices", "expected an object keyed by type");
  for (const auto& type : game.types) {
    const std::string field = "matrices." + type;
    if (!matrices.contains(type)) Fail(field, "missing matrix for type");
    game.matrices.push_back(AsRealBimatrix(matrices[type], field));
  }
  for (const auto& [key, value] : matrices.items()) {
    if (std::find(game.types.begin(), game.types.end(), key) ==
        game.types.end()) {
      Fail("matrices." + key, "matrix for an undeclared type");
    }
  }
  game.Validate();
  out.space.types = game.types;
  out.space.prior = AsReals(Member(doc, "prior", ""), "prior");
  out.space.Validate();
  if (doc.contains("responses")) {
    const Json& responses = doc["responses"];
    if (!responses.is_object()) Fail("responses", "expected an object");
    for (const auto& [type, strategy] : responses.items()) {
      game.TypeIndex(type);
      const std::string label = AsString(strategy, "responses." + type);
      game.IndexOfJ(label);
      out.responses[type] = label;
    }
  }
  return out;
}

std::string CompositionToCsv(const CompositionMatrix& matrix) {
  std::string out = "row_label,col_label,u_i,u_j\n";
  for (int r = 0; r < matrix.rows(); ++r) {
    for (int c = 0; c < matrix.cols(); ++c) {
      out += matrix.row_labels[r].Label() + "," + matrix.col_labels[c].Label() +
             "," + FormatTenth(matrix.entries[r][c].u_i) + "," +
             FormatTenth(matrix.entries[r][c].u_j) + "\n";
    }
  }
  return out;
}

CompositionMatrix CompositionFromCsv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) Fail("csv", "empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "row_label,col_label,u_i,u_j") {
    Fail("csv", "expected header row_label,col_label,u_i,u_j");
  }
  struct Cell {
    std::string row, col;
    RealPayoff payoff;
  };
  std::vector<Cell> cells;
  std::vector<std::string> rows, cols;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = SplitCsvLine(line);
    const std::string where = "csv line " + std::to_string(line_no);
    if (fields.size() != 4) Fail(where, "expected 4 fields");
    Cell cell{fields[0], fields[1], {}};
    try {
      std::size_t used = 0;
      cell.payoff.u_i = std::stod(fields[2], &used);
      if (used != fields[2].size()) throw std::invalid_argument("u_i");
      cell.payoff.u_j = std::stod(fields[3], &used);
      if (used != fields[3].size()) throw std::invalid_argument("u_j");
    } catch (const std::exception&) {
      Fail(where, "payoffs must be numbers");
    }
    if (std::find(rows.begin(), rows.end(), cell.row) == rows.end()) {
      rows.push_back(cell.row);
    }
    if (std::find(cols.begin(), cols.end(), cell.col) == cols.end()) {
      cols.push_back(cell.col);
    }
    cells.push_back(std::move(cell));
  }
  CompositionMatrix out;
  for (const auto& r : rows) out.row_labels.push_back(TypeStrategy::Parse(r));
  for (const auto& c : cols) out.col_labels.push_back(TypeStrategy::Parse(c));
  out.entries.assign(rows.size(), std::vector<RealPayoff>(cols.size()));
  std::vector<std::vector<bool>> seen(rows.size(),
                                      std::vector<bool>(cols.size(), false));
  for (const auto& cell : cells) {
    const auto r = std::find(rows.begin(), rows.end(), cell.row) - rows.begin();
    const auto c = std::find(cols.begin(), cols.end(), cell.col) - cols.begin();
    if (seen[r][c]) Fail(cell.row + "," + cell.col, "duplicate cell");
    seen[r][c] = true;
    out.entries[r][c] = cell.payoff;
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (!seen[r][c]) Fail(rows[r] + "," + cols[c], "missing cell");
    }
  }
  return out;
}

std::string VolumesToCsv(const CompositionMatrix& matrix) {
  std::string out = "row_label,col_label,u_i,u_j,volume\n";
  for (int r = 0; r < matrix.rows(); ++r) {
    for (int c = 0; c < matrix.cols(); ++c) {
      const RealPayoff& cell = matrix.entries[r][c];
      out += matrix.row_labels[r].Label() + "," + matrix.col_labels[c].Label() +
             "," + FormatTenth(cell.u_i) + "," + FormatTenth(cell.u_j) + "," +
             FormatTenth(cell.u_i + cell.u_j) + "\n";
    }
  }
  return out;
}

Json QuadrantReportToJson(const QuadrantReport& report) {
  Json quadrants = Json::object();
  for (const auto& q : report.quadrants) {
    quadrants[q.row_type + "," + q.col_type] = RoundToTenth(q.sum);
  }
  const Quadrant best = BestQuadrant(report);
  return Json{{"quadrants", quadrants},
              {"system_total", RoundToTenth(report.system_total)},
              {"hit_ratio", report.hit_ratio},
              {"nonzero_cells", report.nonzero_cells},
              {"total_cells", report.total_cells},
              {"best_quadrant",
               Json{{"row_type", best.row_type},
                    {"col_type", best.col_type},
                    {"sum", RoundToTenth(best.sum)}}}};
}

TypePairGame TypePairGameFromJson(const Json& doc) {
  RejectUnknownKeys(doc, {"types", "strategies_i", "strategies_j", "matrices"},
                    "");
  TypePairGame game;
  game.types = AsStrings(Member(doc, "types", ""), "types");
  game.strategies_i = AsStrings(Member(doc, "strategies_i", ""), "strategies_i");
  game.strategies_j = AsStrings(Member(doc, "strategies_j", ""), "strategies_j");
  const Json& matrices = Member(doc, "matrices", "");
  if (!matrices.is_object()) Fail("matrices", "expected an object");
  for (const auto& [row_type, by_col] : matrices.items()) {
    if (!by_col.is_object()) Fail("matrices." + row_type, "expected an object");
    for (const auto& [col_type, m] : by_col.items()) {
      game.matrices[{row_type, col_type}] =
          AsRealBimatrix(m, "matrices." + row_type + "." + col_type);
    }
  }
  return game;
}

SimConfig SimConfigFromJson(const Json& doc) {
  RejectUnknownKeys(doc,
                    {"trials", "balance_range_i", "balance_range_j",
                     "strategy_i", "strategy_j", "seed", "mode", "max_rounds",
                     "threads"},
                    "");
  SimConfig config;
  if (doc.contains("trials")) config.trials = AsInt(doc["trials"], "trials");
  if (doc.contains("balance_range_i")) {
    config.balance_range_i = AsRange(doc["balance_range_i"], "balance_range_i");
  }
  if (doc.contains("balance_range_j")) {
    config.balance_range_j = AsRange(doc["balance_range_j"], "balance_range_j");
  }
  if (doc.contains("strategy_i")) {
    config.strategy_i = AsStrategy(doc["strategy_i"], "strategy_i");
  }
  if (doc.contains("strategy_j")) {
    config.strategy_j = AsStrategy(doc["strategy_j"], "strategy_j");
  }
  if (doc.contains("seed")) {
    const Json& seed = doc["seed"];
    if (!seed.is_number_unsigned()) Fail("seed", "expected an unsigned integer");
    config.seed = seed.get<std::uint64_t>();
  }
  if (doc.contains("mode")) {
    const std::string mode = AsString(doc["mode"], "mode");
    if (mode == "one_shot") {
      config.mode = SimMode::kOneShot;
    } else if (mode == "repeated") {
      config.mode = SimMode::kRepeated;
    } else {
      Fail("mode", "expected one_shot or repeated");
    }
  }
  if (doc.contains("max_rounds")) {
    config.max_rounds = static_cast<int>(AsInt(doc["max_rounds"], "max_rounds"));
  }
  if (doc.contains("threads")) {
    config.threads = static_cast<int>(AsInt(doc["threads"], "threads"));
  }
  config.Validate();
  return config;
}

Json SimConfigToJson(const SimConfig& config) {
  return Json{{"trials", config.trials},
              {"balance_range_i",
               Json::array({config.balance_range_i.lo,
                            config.balance_range_i.hi})},
              {"balance_range_j",
               Json::array({config.balance_range_j.lo,
                            config.balance_range_j.hi})},
              {"strategy_i", StrategyToJson(config.strategy_i)},
              {"strategy_j", StrategyToJson(config.strategy_j)},
              {"seed", config.seed},
              {"mode", ModeName(config.mode)},
              {"max_rounds", config.max_rounds},
              {"threads", config.threads}};
}

Json SimReportToJson(const SimReport& report) {
  Json histogram = Json::object();
  for (const auto& [rounds, count] : report.rounds_to_clear_histogram) {
    histogram[std::to_string(rounds)] = count;
  }
  return Json{{"seed", report.seed},
              {"mode", ModeName(report.mode)},
              {"trials", report.trials},
              {"opportunities", report.opportunities},
              {"trades_executed", report.trades_executed},
              {"hit_ratio", report.hit_ratio},
              {"total_volume", report.total_volume},
              {"mean_volume_per_trial", report.mean_volume_per_trial},
              {"cleared_trials", report.cleared_trials},
              {"uncleared_trials", report.uncleared_trials},
              {"rounds_to_clear_histogram", histogram}};
}

std::string HistogramToCsv(const SimReport& report) {
  std::string out = "rounds,count\n";
  for (const auto& [rounds, count] : report.rounds_to_clear_histogram) {
    out += std::to_string(rounds) + "," + std::to_string(count) + "\n";
  }
  return out;
}

}  // namespace liqgame
