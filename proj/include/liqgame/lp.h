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

// Largest parcel the long player can pass to the short player:
//   maximize x  subject to  0 <= x <= receiver capacity,  x <= sender holding.

#ifndef LIQGAME_LP_H_
#define LIQGAME_LP_H_

#include <cstdint>

namespace liqgame {

struct TransferProblem {
  std::int64_t capacity_receiver = 0;  // |B_j|
  std::int64_t capacity_sender = 0;    // B_i
};

// Throws kInvalidConfig for negative capacities.
std::int64_t MaxTransfer(const TransferProblem& problem);

}  // namespace liqgame

#endif  // LIQGAME_LP_H_
