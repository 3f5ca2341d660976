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

#include "liqgame/cli.h"

#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "CLI11.hpp"
#include "liqgame/error.h"
#include "liqgame/lp.h"

namespace liqgame {
namespace {

Json ActionsToJson(const std::vector<Action>& actions) {
  Json out = Json::array();
  for (const Action& a : actions) out.push_back(a.quantity);
  return out;
}

Json DominanceToJson(const std::vector<Dominance>& list,
                     const std::vector<Action>& actions) {
  Json out = Json::array();
  for (const Dominance& d : list) {
    out.push_back(Json{
        {"dominated", actions[d.dominated_index].quantity},
        {"dominating", actions[d.dominating_index].quantity},
        {"strictness",
         d.strictness == Strictness::kStrict ? "strict" : "weak"}});
  }
  return out;
}

// Given responses first; types without one fall back to their dominant
// strategy.
ResponseMap ResolveResponses(const BayesDocument& doc,
                             std::map<std::string, std::string>* source) {
  ResponseMap responses = doc.responses;
  for (int t = 0; t < static_cast<int>(doc.game.types.size()); ++t) {
    const std::string& type = doc.game.types[t];
    if (responses.count(type)) {
      (*source)[type] = "given";
      continue;
    }
    const auto dominant = DominantStrategyPerType(doc.game, t);
    if (!dominant) {
      throw GameError(ErrorCode::kNoDominantStrategy, "responses." + type,
                      "type '" + type + "' has no dominant strategy for J");
    }
    responses[type] = dominant->strategy;
    (*source)[type] =
        dominant->kind == DominanceKind::kStrict ? "strict" : "weak";
  }
  return responses;
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> parts;
  std::string part;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(part);
      part.clear();
    } else {
      part += ch;
    }
  }
  parts.push_back(part);
  return parts;
}

std::vector<double> ParsePriors(const std::string& text,
                                const std::string& field) {
  std::vector<double> out;
  for (const std::string& part : SplitList(text)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw GameError(ErrorCode::kParseError, field,
                      "expected comma-separated numbers, got '" + text + "'");
    }
  }
  return out;
}

struct GlobalFlags {
  std::string output;
  std::string format = "json";
  std::uint64_t seed = 0;
  CLI::Option* seed_option = nullptr;
};

void Emit(const GlobalFlags& flags, const std::string& payload,
          std::ostream& out) {
  if (flags.output.empty()) {
    out << payload;
  } else {
    WriteFileAtomic(flags.output, payload);
  }
}

}  // namespace

Json SolveReport(const GameInstance& instance, const SolverOptions& options) {
  const PayoffMatrix matrix = BuildPayoffMatrix(instance);
  Json pure = Json::array();
  for (const auto& eq : FindPureEquilibria(matrix)) {
    pure.push_back(PureToJson(eq));
  }
  Json mixed = Json::array();
  for (const auto& profile : SolveMixed(matrix, options)) {
    mixed.push_back(MixedToJson(profile));
  }
  return Json{
      {"instance", InstanceToJson(instance)},
      {"actions_i", ActionsToJson(matrix.row_actions())},
      {"actions_j", ActionsToJson(matrix.col_actions())},
      {"matrix", MatrixToJson(matrix)},
      {"dominance_i", DominanceToJson(DominatedActions(matrix, Player::kI),
                                      matrix.row_actions())},
      {"dominance_j", DominanceToJson(DominatedActions(matrix, Player::kJ),
                                      matrix.col_actions())},
      {"pure", pure},
      {"mixed", mixed}};
}

Json BayesReport(const BayesDocument& doc) {
  std::map<std::string, std::string> source;
  const ResponseMap responses = ResolveResponses(doc, &source);
  const BayesianSolution solution =
      IndifferenceThreshold(doc.game, doc.space, responses);
  Json response_json = Json::object();
  Json source_json = Json::object();
  for (const auto& type : doc.game.types) {
    response_json[type] = responses.at(type);
    source_json[type] = source.at(type);
  }
  Json expected = Json::object();
  for (const auto& s : doc.game.strategies_i) {
    expected[s] = ExpectedPayoff(doc.game, doc.space, s, responses);
  }
  const auto preferred = PreferredStrategy(solution, doc.space.prior.front());
  return Json{{"types", doc.game.types},
              {"prior", doc.space.prior},
              {"responses_j", response_json},
              {"response_source", source_json},
              {"threshold_p", solution.threshold_p},
              {"exterior", solution.exterior},
              {"strategy_i_above", solution.strategy_i_above},
              {"strategy_i_below", solution.strategy_i_below},
              {"expected_payoffs_i", expected},
              {"preferred_i", preferred ? Json(*preferred) : Json(nullptr)}};
}

std::string BayesCurveCsv(const BayesDocument& doc, int steps) {
  std::map<std::string, std::string> source;
  const ResponseMap responses = ResolveResponses(doc, &source);
  std::string out = "p";
  for (const auto& s : doc.game.strategies_i) out += ",payoff_" + s;
  out += '\n';
  char buf[64];
  for (int k = 0; k <= steps; ++k) {
    const double p = static_cast<double>(k) / steps;
    const TypeSpace space = doc.space.WithFirstTypeWeight(p);
    std::snprintf(buf, sizeof(buf), "%.4f", p);
    out += buf;
    for (const auto& s : doc.game.strategies_i) {
      std::snprintf(buf, sizeof(buf), ",%.6f",
                    ExpectedPayoff(doc.game, space, s, responses));
      out += buf;
    }
    out += '\n';
  }
  return out;
}

std::string RenderJson(const Json& doc) { return doc.dump(2) + "\n"; }

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Liquidity game solver", "liqgame"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_option("--output,-o", flags.output, "Write the report to this path");
  app.add_option("--format", flags.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));
  flags.seed_option = app.add_option("--seed", flags.seed, "RNG seed");

  // solve
  auto* solve = app.add_subcommand("solve", "Payoff matrix and equilibria");
  std::int64_t bi = 0, bj = 0, cap = 0;
  int max_dim = kDefaultDimensionCap;
  std::string solve_config;
  auto* bi_opt = solve->add_option("--bi", bi, "Balance of the first player");
  auto* bj_opt = solve->add_option("--bj", bj, "Balance of the second player");
  auto* cap_opt = solve->add_option("--cap", cap, "Issue cap");
  auto* config_opt =
      solve->add_option("--config", solve_config, "Instance JSON file");
  config_opt->excludes(bi_opt)->excludes(bj_opt)->excludes(cap_opt);
  solve->add_option("--max-dim", max_dim, "Per-side dimension cap");

  // bayes
  auto* bayes = app.add_subcommand("bayes", "Bayesian threshold analysis");
  std::string bayes_path;
  std::string bayes_prior;
  std::vector<std::string> bayes_responses;
  bayes->add_option("document", bayes_path, "Bayesian game JSON");
  bayes->add_option("--prior", bayes_prior, "Prior over J's types, e.g. 0.35,0.65");
  bayes->add_option("--response", bayes_responses,
                    "Fix J's response per type, e.g. a=high,b=low")
      ->delimiter(',');

  // market
  auto* market = app.add_subcommand("market", "Market composition analysis");
  std::string published;
  bool constructive = false;
  std::string priors = "0.35,0.65";
  std::string priors_j;
  std::string matrices_path;
  auto* pub_opt =
      market->add_option("--published", published, "Published table id");
  auto* con_opt = market->add_flag("--constructive", constructive,
                                   "Weight type-pair games by priors");
  pub_opt->excludes(con_opt);
  market->add_option("--priors", priors, "Row-type priors")->needs(con_opt);
  market->add_option("--priors-j", priors_j, "Column-type priors")
      ->needs(con_opt);
  market->add_option("--matrices", matrices_path, "Type-pair game JSON")
      ->needs(con_opt);

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo simulation");
  std::string sim_path;
  std::string histogram_path;
  int sim_threads = 0;
  simulate->add_option("config", sim_path, "Simulation config JSON");
  simulate->add_option("--histogram", histogram_path,
                       "Write the rounds-to-clear histogram as CSV");
  simulate->add_option("--threads", sim_threads, "Worker threads");

  // lp
  auto* lp = app.add_subcommand("lp", "Largest feasible transfer");
  std::int64_t receiver = 0, sender = 0;
  lp->add_option("--receiver", receiver, "Receiver capacity")->required();
  lp->add_option("--sender", sender, "Sender holding")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const bool csv = flags.format == "csv";
    if (solve->parsed()) {
      GameInstance instance = [&] {
        if (!solve_config.empty()) {
          return InstanceFromJson(
              ParseJson(ReadFile(solve_config), solve_config));
        }
        if (!bi_opt->count() || !bj_opt->count()) {
          throw GameError(ErrorCode::kInvalidConfig,
                          bi_opt->count() ? "bj" : "bi",
                          "--bi and --bj are required without --config");
        }
        const std::int64_t issue_cap =
            cap_opt->count() ? cap : std::max(std::abs(bi), std::abs(bj));
        return BuildInstance(bi, bj, issue_cap);
      }();
      SolverOptions options;
      options.dimension_cap = max_dim;
      if (csv) {
        const PayoffMatrix matrix = BuildPayoffMatrix(instance);
        SolveMixed(matrix, options);  // same validation as the JSON path
        Emit(flags, MatrixToCsv(matrix), out);
      } else {
        Emit(flags, RenderJson(SolveReport(instance, options)), out);
      }
    } else if (bayes->parsed()) {
      const std::string path =
          bayes_path.empty()
              ? (FixtureDir() / "bayes_large_small.json").string()
              : bayes_path;
      BayesDocument doc = BayesFromJson(ParseJson(ReadFile(path), path));
      if (!bayes_prior.empty()) {
        doc.space.prior = ParsePriors(bayes_prior, "prior");
        doc.space.Validate();
      }
      for (const std::string& entry : bayes_responses) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos) {
          throw GameError(ErrorCode::kParseError, "response",
                          "expected type=strategy, got '" + entry + "'");
        }
        const std::string type = entry.substr(0, eq);
        const std::string strategy = entry.substr(eq + 1);
        doc.game.TypeIndex(type);
        doc.game.IndexOfJ(strategy);
        doc.responses[type] = strategy;
      }
      Emit(flags, csv ? BayesCurveCsv(doc) : RenderJson(BayesReport(doc)),
           out);
    } else if (market->parsed()) {
      CompositionMatrix matrix;
      if (!published.empty()) {
        matrix = LoadPublishedMatrix(published);
      } else if (constructive) {
        const std::string path =
            matrices_path.empty()
                ? (FixtureDir() / "market_type_pairs.json").string()
                : matrices_path;
        const TypePairGame game =
            TypePairGameFromJson(ParseJson(ReadFile(path), path));
        const auto prior_i = ParsePriors(priors, "priors");
        const auto prior_j =
            priors_j.empty() ? prior_i : ParsePriors(priors_j, "priors_j");
        matrix = WeightByPriors(game, prior_i, prior_j);
      } else {
        throw GameError(ErrorCode::kInvalidConfig, "market",
                        "one of --published or --constructive is required");
      }
      Emit(flags,
           csv ? VolumesToCsv(matrix)
               : RenderJson(QuadrantReportToJson(QuadrantAnalysis(matrix))),
           out);
    } else if (simulate->parsed()) {
      const std::string path =
          sim_path.empty() ? (FixtureDir() / "sim_default.json").string()
                           : sim_path;
      const Json doc = ParseJson(ReadFile(path), path);
      SimConfig config = SimConfigFromJson(doc);
      if (flags.seed_option->count()) {
        config.seed = flags.seed;
      } else if (!doc.contains("seed")) {
        config.seed = (static_cast<std::uint64_t>(std::random_device{}()) << 32) ^
                      std::random_device{}();
        err << "seed: " << config.seed << "\n";
      }
      if (sim_threads > 0) config.threads = sim_threads;
      config.Validate();
      const SimReport report = RunSimulation(config);
      if (!histogram_path.empty()) {
        WriteFileAtomic(histogram_path, HistogramToCsv(report));
      }
      Emit(flags,
           csv ? HistogramToCsv(report) : RenderJson(SimReportToJson(report)),
           out);
    } else if (lp->parsed()) {
      Emit(flags,
           std::to_string(MaxTransfer({receiver, sender})) + "\n", out);
    }
  } catch (const GameError& e) {
    err << "error: " << e.field() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace liqgame
