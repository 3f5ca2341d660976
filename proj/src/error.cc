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

#include "liqgame/error.h"

namespace liqgame {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSameSignBalances: return "SameSignBalances";
    case ErrorCode::kZeroBalance: return "ZeroBalance";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kInvalidCap: return "InvalidCap";
    case ErrorCode::kOverTrade: return "OverTrade";
    case ErrorCode::kNonPositiveQuantity: return "NonPositiveQuantity";
    case ErrorCode::kDimensionCapExceeded: return "DimensionCapExceeded";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kEmptyMatrix: return "EmptyMatrix";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kNoDependenceOnPrior: return "NoDependenceOnPrior";
    case ErrorCode::kInvalidPrior: return "InvalidPrior";
    case ErrorCode::kInvalidGame: return "InvalidGame";
    case ErrorCode::kNoDominantStrategy: return "NoDominantStrategy";
    case ErrorCode::kMissingTypePairMatrix: return "MissingTypePairMatrix";
    case ErrorCode::kUnknownTable: return "UnknownTable";
    case ErrorCode::kNotTwoTypes: return "NotTwoTypes";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kIntractableStrategy: return "IntractableStrategy";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

GameError::GameError(ErrorCode code, std::string field,
                     const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code),
      field_(std::move(field)) {}

}  // namespace liqgame
