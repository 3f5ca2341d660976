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

#include "liqgame/lp.h"

#include <algorithm>
#include <stdexcept>

#include "liqgame/error.h"

namespace liqgame {

std::int64_t MaxTransfer(const TransferProblem& problem) {
  const std::int64_t a = problem.capacity_receiver;
  const std::int64_t b = problem.capacity_sender;
  if (a < 0) {
    throw GameError(ErrorCode::kInvalidConfig, "receiver",
                    "capacity must be non-negative");
  }
  if (b < 0) {
    throw GameError(ErrorCode::kInvalidConfig, "sender",
                    "capacity must be non-negative");
  }
  const std::int64_t x = std::min(a, b);
  // Feasible, and x + 1 violates one of the bounds.
  if (!(x >= 0 && x <= a && x <= b) || !(x + 1 > a || x + 1 > b)) {
    throw std::logic_error("transfer optimum failed its feasibility check");
  }
  return x;
}

}  // namespace liqgame
