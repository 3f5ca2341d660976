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

// Command-line front end. Each subcommand parses its inputs, calls the
// library, and serializes the result with the report builders below, which
// tests call directly to check the CLI output byte for byte.

#ifndef LIQGAME_CLI_H_
#define LIQGAME_CLI_H_

#include <optional>
#include <ostream>
#include <string>

#include "liqgame/io.h"

namespace liqgame {

// Matrix, action sets, dominance, pure and mixed equilibria.
Json SolveReport(const GameInstance& instance, const SolverOptions& options);

// Uses the document's responses when present, else each type's dominant
// strategy.
Json BayesReport(const BayesDocument& doc);
// Expected payoff of each of I's strategies on a grid of first-type weights.
std::string BayesCurveCsv(const BayesDocument& doc, int steps = 100);

// Pretty-printed JSON with a trailing newline; every JSON report goes through
// this.
std::string RenderJson(const Json& doc);

// Returns the process exit code: 0 success, 2 input error, 1 internal error.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace liqgame

#endif  // LIQGAME_CLI_H_
