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

#ifndef LIQGAME_ERROR_H_
#define LIQGAME_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace liqgame {

enum class ErrorCode {
  // core
  kSameSignBalances,
  kZeroBalance,
  kCapExceeded,
  kInvalidCap,
  kOverTrade,
  kNonPositiveQuantity,
  // solver
  kDimensionCapExceeded,
  kDimensionMismatch,
  kEmptyMatrix,
  // bayes
  kUnknownLabel,
  kNoDependenceOnPrior,
  kInvalidPrior,
  kInvalidGame,
  kNoDominantStrategy,
  // market
  kMissingTypePairMatrix,
  kUnknownTable,
  kNotTwoTypes,
  // sim
  kInvalidConfig,
  kIntractableStrategy,
  // io
  kParseError,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every recoverable input problem in the library is reported as a GameError.
// `field` names the offending input (e.g. "balance_j") when one is known.
class GameError : public std::runtime_error {
 public:
  GameError(ErrorCode code, std::string field, const std::string& message);

  ErrorCode code() const { return code_; }
  const std::string& field() const { return field_; }

 private:
  ErrorCode code_;
  std::string field_;
};

}  // namespace liqgame

#endif  // LIQGAME_ERROR_H_
