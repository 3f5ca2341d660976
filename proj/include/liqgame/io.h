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

// JSON and CSV encodings of the library types, plus file helpers.
// Parse failures raise GameError(kParseError) naming the offending field.

#ifndef LIQGAME_IO_H_
#define LIQGAME_IO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "liqgame/bayes.h"
#include "liqgame/core.h"
#include "liqgame/market.h"
#include "liqgame/sim.h"
#include "liqgame/solver.h"

namespace liqgame {

using Json = nlohmann::ordered_json;

// Bundled fixture directory; LIQGAME_FIXTURES overrides the built-in path.
std::filesystem::path FixtureDir();

std::string ReadFile(const std::filesystem::path& path);
// Writes to a sibling temporary file and renames it into place.
void WriteFileAtomic(const std::filesystem::path& path,
                     std::string_view contents);
Json ParseJson(std::string_view text, std::string_view source);

// core
Json InstanceToJson(const GameInstance& instance);
GameInstance InstanceFromJson(const Json& doc);
Json MatrixToJson(const PayoffMatrix& matrix);
std::string MatrixToCsv(const PayoffMatrix& matrix);

// solver
Json PureToJson(const PureEquilibrium& eq);
Json MixedToJson(const MixedProfile& profile);
MixedProfile MixedFromJson(const Json& doc);

// bayes
struct BayesDocument {
  ConditionalGame game;
  TypeSpace space;
  ResponseMap responses;  // optional "responses" member; may be empty
};
BayesDocument BayesFromJson(const Json& doc);

// market
std::string CompositionToCsv(const CompositionMatrix& matrix);
CompositionMatrix CompositionFromCsv(std::string_view text);
std::string VolumesToCsv(const CompositionMatrix& matrix);
Json QuadrantReportToJson(const QuadrantReport& report);
TypePairGame TypePairGameFromJson(const Json& doc);

// sim
SimConfig SimConfigFromJson(const Json& doc);
Json SimConfigToJson(const SimConfig& config);
Json SimReportToJson(const SimReport& report);
std::string HistogramToCsv(const SimReport& report);

}  // namespace liqgame

#endif  // LIQGAME_IO_H_
