// Copyright 2026 The Eqlab Authors
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
//
// eqlab: equilibrium computation toolkit.
//
// Subcommands: zerosum, dynamics, sparse, tfnp, reduce, ce, market, border.
// Every emitted number is an exact rational "p/q"; identical inputs and
// seeds give byte-identical outputs.  Exit codes: 0 success, 2 input error,
// 3 resource-budget error, 4 internal invariant violation.

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "eqlab/border.h"
#include "eqlab/brouwer.h"
#include "eqlab/correlated.h"
#include "eqlab/dynamics.h"
#include "eqlab/eol.h"
#include "eqlab/errors.h"
#include "eqlab/games.h"
#include "eqlab/json_io.h"
#include "eqlab/markets.h"
#include "eqlab/reductions.h"
#include "eqlab/sparse.h"
#include "eqlab/sperner.h"
#include "eqlab/zerosum.h"

namespace eqlab {
namespace {

struct GlobalOptions {
  uint64_t seed = 0;
  int jobs = 1;
  std::string out;
  long budget_outcomes = 1'000'000;  // <= 10^6 outcome variables
  long budget_bundles = 1L << 16;    // <= 2^16 bundles
  long budget_profiles = 100'000;    // <= 10^5 enumerated profiles
};

void Emit(const GlobalOptions& global, const Json& report) {
  const std::string payload = report.dump(2) + "\n";
  if (global.out.empty()) {
    std::cout << payload;
  } else {
    WriteFile(global.out, payload);
  }
}

void EmitRaw(const GlobalOptions& global, const std::string& payload) {
  if (global.out.empty()) {
    std::cout << payload;
  } else {
    WriteFile(global.out, payload);
  }
}

Json StrategyToJson(const std::vector<Rational>& probabilities) {
  Json array = Json::array();
  for (const Rational& p : probabilities) array.push_back(p.ToString());
  return array;
}

Json BorderInequalityToJson(const BorderInequality& inequality) {
  Json sets = Json::array();
  for (const auto& s : inequality.distinguished) sets.push_back(s);
  Json json;
  json["distinguished_sets"] = std::move(sets);
  json["lhs"] = inequality.lhs.ToString();
  json["rhs"] = inequality.rhs.ToString();
  json["violation"] = inequality.Violation().ToString();
  return json;
}

int RunCli(int argc, char** argv) {
  GlobalOptions global;
  CLI::App app{"eqlab: exact equilibrium computation toolkit"};
  app.require_subcommand(1);
  app.add_option("--seed", global.seed, "PRNG seed (default 0)");
  app.add_option("--jobs", global.jobs, "worker threads where supported");
  app.add_option("--out", global.out, "output path (default stdout)");
  app.add_option("--budget-outcomes", global.budget_outcomes,
                 "max outcome variables");
  app.add_option("--budget-bundles", global.budget_bundles, "max bundles");
  app.add_option("--budget-profiles", global.budget_profiles,
                 "max enumerated profiles");

  if (const char* override_env = std::getenv("EQLAB_BUDGET_OVERRIDE")) {
    const long value = std::strtol(override_env, nullptr, 10);
    if (value > 0) {
      global.budget_outcomes = value;
      global.budget_bundles = value;
      global.budget_profiles = value;
    }
  }

  // zerosum solve <game.json>
  auto* zerosum = app.add_subcommand("zerosum", "zero-sum minimax solving");
  auto* zs_solve = zerosum->add_subcommand("solve", "solve the LP pair");
  std::string zs_game;
  zs_solve->add_option("game", zs_game, "game JSON")->required();
  zs_solve->callback([&]() {
    const BimatrixGame bimatrix = BimatrixFromJson(LoadJsonFile(zs_game));
    const Matrix& a = bimatrix.a();
    for (int r = 0; r < a.rows(); ++r) {
      for (int c = 0; c < a.cols(); ++c) {
        if (a.at(r, c) + bimatrix.b().at(r, c) != Rational(0)) {
          throw InputError("game is not zero-sum");
        }
      }
    }
    const ZeroSumSolution solution = SolveMinimax(ZeroSumGame(a));
    Json results;
    results["value"] = solution.value.ToString();
    results["x"] = StrategyToJson(solution.x.probabilities());
    results["y"] = StrategyToJson(solution.y.probabilities());
    Emit(global, MakeReport("zerosum solve", {zs_game}, results));
  });

  // dynamics run --algo {fp,sfp} --game g.json --steps T ...
  auto* dynamics = app.add_subcommand("dynamics", "learning dynamics");
  auto* dyn_run = dynamics->add_subcommand("run", "run a dynamic");
  std::string dyn_algo = "sfp", dyn_game, dyn_eta = "sqrt_t",
              dyn_feedback = "exact";
  std::string dyn_eta_scale = "1";
  int dyn_steps = 0;
  dyn_run->add_option("--algo", dyn_algo, "fp or sfp")->required();
  dyn_run->add_option("--game", dyn_game, "game JSON")->required();
  dyn_run->add_option("--steps", dyn_steps, "number of steps")->required();
  dyn_run->add_option("--eta", dyn_eta, "sqrt_t or anytime_ew");
  dyn_run->add_option("--eta-scale", dyn_eta_scale,
                      "c in eta^t = c sqrt(t), as p/q");
  dyn_run->add_option("--feedback", dyn_feedback, "exact or sampled");
  dyn_run->callback([&]() {
    const BimatrixGame game = BimatrixFromJson(LoadJsonFile(dyn_game));
    DynamicsConfig config;
    config.seed = global.seed;
    config.eta_scale = Rational::FromString(dyn_eta_scale);
    if (dyn_eta == "sqrt_t") {
      config.schedule = EtaSchedule::kSqrtT;
    } else if (dyn_eta == "anytime_ew") {
      config.schedule = EtaSchedule::kAnytimeEw;
    } else {
      throw InputError("unknown eta schedule: " + dyn_eta);
    }
    if (dyn_feedback == "exact") {
      config.feedback = FeedbackMode::kExactMixed;
    } else if (dyn_feedback == "sampled") {
      config.feedback = FeedbackMode::kSampled;
    } else {
      throw InputError("unknown feedback mode: " + dyn_feedback);
    }
    Trace trace;
    if (dyn_algo == "fp") {
      trace = FictitiousPlayRun(game, dyn_steps, config);
    } else if (dyn_algo == "sfp") {
      trace = SmoothFpRun(game, dyn_steps, config);
    } else {
      throw InputError("unknown algorithm: " + dyn_algo);
    }
    EmitRaw(global, TraceToCsv(trace));
  });

  // sparse qptas --game g.json --epsilon 1/2
  auto* sparse = app.add_subcommand("sparse", "sparse approximate equilibria");
  auto* sparse_qptas =
      sparse->add_subcommand("qptas", "deterministic multiset enumeration");
  std::string sp_game, sp_epsilon;
  sparse_qptas->add_option("--game", sp_game, "game JSON")->required();
  sparse_qptas->add_option("--epsilon", sp_epsilon, "tolerance p/q")
      ->required();
  sparse_qptas->callback([&]() {
    const BimatrixGame game = BimatrixFromJson(LoadJsonFile(sp_game));
    QptasOptions options;
    options.budget = global.budget_profiles;
    options.jobs = global.jobs;
    const SparseNEResult result =
        QptasSearch(game, Rational::FromString(sp_epsilon), options);
    Json results;
    results["row_multiset"] = result.row_multiset.indices();
    results["col_multiset"] = result.col_multiset.indices();
    results["x"] = StrategyToJson(result.x.probabilities());
    results["y"] = StrategyToJson(result.y.probabilities());
    results["epsilon"] = result.epsilon.ToString();
    results["violation_row"] = result.epsilon_report.violation_row.ToString();
    results["violation_column"] =
        result.epsilon_report.violation_column.ToString();
    results["well_supported"] = result.well_supported_report.holds;
    Emit(global, MakeReport("sparse qptas", {sp_game}, results));
  });

  // tfnp eol|sperner|brouwer
  auto* tfnp = app.add_subcommand("tfnp", "total search problems");
  auto* tfnp_eol = tfnp->add_subcommand("eol", "End-of-Line path following");
  std::string eol_file;
  tfnp_eol->add_option("--instance", eol_file, "EoL edge-list file")
      ->required();
  tfnp_eol->callback([&]() {
    const EolInstance instance = LoadEolInstance(eol_file);
    const EolRunResult run = EolSolve(instance);
    Json results;
    results["vertex"] = run.solution.vertex;
    results["case"] = static_cast<int>(run.solution.tag);
    results["queries"] = run.queries;
    results["verified"] = EolVerify(instance, run.solution);
    Emit(global, MakeReport("tfnp eol", {eol_file}, results));
  });
  auto* tfnp_sperner =
      tfnp->add_subcommand("sperner", "trichromatic cell search");
  std::string sperner_file;
  tfnp_sperner->add_option("--coloring", sperner_file, "lattice coloring file")
      ->required();
  tfnp_sperner->callback([&]() {
    const SpernerInstance instance = LoadSpernerInstance(sperner_file);
    const Cell cell = SpernerFind(instance);
    Json results;
    results["cell"] = {{"a", cell.anchor.a},
                       {"b", cell.anchor.b},
                       {"c", cell.anchor.c},
                       {"upward", cell.upward}};
    results["trichromatic_count"] = SpernerCount(instance);
    Emit(global, MakeReport("tfnp sperner", {sperner_file}, results));
  });
  auto* tfnp_brouwer =
      tfnp->add_subcommand("brouwer", "approximate fixed points via the grid");
  std::string brouwer_fn, brouwer_epsilon;
  tfnp_brouwer->add_option("--fn", brouwer_fn, "simplex map JSON")->required();
  tfnp_brouwer->add_option("--epsilon", brouwer_epsilon, "accuracy p/q")
      ->required();
  tfnp_brouwer->callback([&]() {
    const BrouwerFunction f = BrouwerFromJson(LoadJsonFile(brouwer_fn));
    const GridSpec grid =
        GridSpec::ForAccuracy(f, Rational::FromString(brouwer_epsilon));
    const BrouwerResult result = BrouwerFixedPoint(f, grid);
    Json results;
    results["point"] =
        StrategyToJson({result.point.coords[0], result.point.coords[1],
                        result.point.coords[2]});
    results["residual_linf"] = result.residual.ToString();
    results["exact"] = result.exact;
    results["subdivision"] = grid.subdivision;
    Emit(global, MakeReport("tfnp brouwer", {brouwer_fn}, results));
  });

  // reduce mt --fn spec.json --eps 1/4
  auto* reduce = app.add_subcommand("reduce", "fixed-point-to-game gadgets");
  auto* reduce_mt = reduce->add_subcommand("mt", "imitation game builder");
  std::string mt_fn, mt_eps;
  reduce_mt->add_option("--fn", mt_fn, "separable function JSON")->required();
  reduce_mt->add_option("--eps", mt_eps, "grid resolution p/q")->required();
  reduce_mt->callback([&]() {
    const SeparableFunction f = SeparableFromJson(LoadJsonFile(mt_fn));
    const DiscretizedHypercube cube(f.dimension(),
                                    Rational::FromString(mt_eps));
    const MTGame mt =
        BuildMTGame(CubeMapFromSeparable(f), cube, global.budget_profiles);
    Emit(global, GameToJson(mt.game));
  });

  // ce build|check|optimize|poa --game g.json --kind ce|cce
  auto* ce = app.add_subcommand("ce", "correlated equilibrium systems");
  std::string ce_game, ce_kind = "cce", ce_rho, ce_sense = "max",
              ce_epsilon = "0";
  auto add_ce_common = [&](CLI::App* cmd) {
    cmd->add_option("--game", ce_game, "game JSON")->required();
    cmd->add_option("--kind", ce_kind, "ce or cce");
  };
  auto parse_kind = [&]() {
    if (ce_kind == "ce") return EquilibriumKind::kCorrelated;
    if (ce_kind == "cce") return EquilibriumKind::kCoarseCorrelated;
    throw InputError("unknown kind: " + ce_kind);
  };
  auto* ce_build = ce->add_subcommand("build", "emit the linear system");
  add_ce_common(ce_build);
  ce_build->callback([&]() {
    const NormalFormGame game = GameFromJson(LoadJsonFile(ce_game));
    const EquilibriumSystem system =
        BuildSystem(game, parse_kind(), global.budget_outcomes);
    Json rows = Json::array();
    for (const auto& row : system.rows) {
      Json r;
      r["player"] = row.player;
      r["signal"] = row.signal;
      r["deviation"] = row.deviation;
      Json coeffs = Json::array();
      for (const Rational& c : row.coefficients) {
        coeffs.push_back(c.ToString());
      }
      r["coefficients"] = std::move(coeffs);
      rows.push_back(std::move(r));
    }
    Json results;
    results["kind"] = ce_kind;
    results["outcomes"] = game.num_outcomes();
    results["incentive_rows"] = std::move(rows);
    Emit(global, MakeReport("ce build", {ce_game}, results));
  });
  auto* ce_check = ce->add_subcommand("check", "membership of a distribution");
  add_ce_common(ce_check);
  ce_check->add_option("--rho", ce_rho, "joint distribution JSON")->required();
  ce_check->add_option("--epsilon", ce_epsilon, "tolerance p/q");
  ce_check->callback([&]() {
    const NormalFormGame game = GameFromJson(LoadJsonFile(ce_game));
    const JointDistribution rho =
        JointDistributionFromJson(LoadJsonFile(ce_rho));
    const EquilibriumSystem system =
        BuildSystem(game, parse_kind(), global.budget_outcomes);
    const MembershipReport report =
        CheckMembership(system, rho, Rational::FromString(ce_epsilon));
    Json results;
    results["holds"] = report.holds;
    results["worst_gap"] = report.worst_gap.ToString();
    results["worst_row"] = report.worst_row;
    Emit(global, MakeReport("ce check", {ce_game, ce_rho}, results));
  });
  auto* ce_optimize =
      ce->add_subcommand("optimize", "optimize welfare over the polytope");
  add_ce_common(ce_optimize);
  ce_optimize->add_option("--sense", ce_sense, "max or min");
  ce_optimize->callback([&]() {
    const NormalFormGame game = GameFromJson(LoadJsonFile(ce_game));
    const EquilibriumSystem system =
        BuildSystem(game, parse_kind(), global.budget_outcomes);
    std::vector<Rational> welfare(game.num_outcomes());
    for (long s = 0; s < game.num_outcomes(); ++s) {
      welfare[s] = game.Welfare(s);
    }
    const LPSolution solution =
        OptimizeOver(system, welfare,
                     ce_sense == "min" ? Sense::kMinimize : Sense::kMaximize);
    Json results;
    results["value"] = solution.objective_value.ToString();
    results["rho"] = StrategyToJson(solution.point);
    Emit(global, MakeReport("ce optimize", {ce_game}, results));
  });
  auto* ce_poa = ce->add_subcommand("poa", "price of anarchy report");
  add_ce_common(ce_poa);
  ce_poa->callback([&]() {
    const NormalFormGame game = GameFromJson(LoadJsonFile(ce_game));
    const PoAReport report = PoaReport(game, parse_kind());
    Json results;
    results["objective"] = report.objective;
    results["optimal_value"] = report.optimal_value.ToString();
    results["worst_equilibrium_value"] =
        report.worst_equilibrium_value.ToString();
    results["ratio_defined"] = report.ratio_defined;
    if (report.ratio_defined) results["ratio"] = report.ratio.ToString();
    Emit(global, MakeReport("ce poa", {ce_game}, results));
  });

  // market exists|verify|lp --market m.json
  auto* market_cmd = app.add_subcommand("market", "Walrasian equilibria");
  std::string market_file, proposal_file;
  auto* market_exists =
      market_cmd->add_subcommand("exists", "existence via the LP gap");
  market_exists->add_option("--market", market_file, "market JSON")
      ->required();
  market_exists->callback([&]() {
    const Market market = MarketFromJson(LoadJsonFile(market_file));
    const WalrasianCertificate certificate = WalrasianExists(market);
    Json results;
    results["exists"] = certificate.exists;
    results["lp_value"] = certificate.lp_value.ToString();
    results["integral_value"] = certificate.integral_value.ToString();
    if (certificate.exists) {
      Json bundles = Json::array();
      for (Bundle b : certificate.allocation.bundles) bundles.push_back(b);
      results["allocation"] = std::move(bundles);
      results["prices"] = StrategyToJson(certificate.prices.prices);
    } else {
      Json fractional = Json::array();
      for (const auto& row : certificate.fractional_point) {
        fractional.push_back(StrategyToJson(row));
      }
      results["fractional_certificate"] = std::move(fractional);
    }
    Emit(global, MakeReport("market exists", {market_file}, results));
  });
  auto* market_verify =
      market_cmd->add_subcommand("verify", "check a proposed equilibrium");
  market_verify->add_option("--market", market_file, "market JSON")
      ->required();
  market_verify
      ->add_option("--proposal", proposal_file, "allocation and prices JSON")
      ->required();
  market_verify->callback([&]() {
    const Market market = MarketFromJson(LoadJsonFile(market_file));
    const Json proposal = LoadJsonFile(proposal_file);
    auto item_index = [&market](const std::string& name) {
      for (int j = 0; j < market.num_items(); ++j) {
        if (market.item_names()[j] == name) return j;
      }
      throw InputError("unknown item '" + name + "'");
    };
    Allocation alloc;
    for (const Json& bundle : proposal.at("allocation")) {
      Bundle mask = 0;
      for (const Json& name : bundle) {
        mask |= 1u << item_index(name.get<std::string>());
      }
      alloc.bundles.push_back(mask);
    }
    PriceVector prices;
    prices.prices.assign(market.num_items(), Rational(0));
    for (const auto& [name, value] : proposal.at("prices").items()) {
      prices.prices[item_index(name)] = RationalFromJson(value);
    }
    const WalrasianCheck check = VerifyWalrasian(market, alloc, prices);
    Json results;
    results["holds"] = check.holds;
    if (check.violated.has_value()) {
      results["violated"] = static_cast<int>(*check.violated) + 1;  // W1..W3
      results["witness_player"] = check.witness_player;
      results["witness_item"] = check.witness_item;
    }
    Emit(global,
         MakeReport("market verify", {market_file, proposal_file}, results));
  });
  auto* market_lp =
      market_cmd->add_subcommand("lp", "solve the configuration LP");
  market_lp->add_option("--market", market_file, "market JSON")->required();
  market_lp->callback([&]() {
    const Market market = MarketFromJson(LoadJsonFile(market_file));
    const ConfigLPResult lp =
        SolveConfigurationLP(market, global.budget_bundles);
    Json results;
    results["value"] = lp.value.ToString();
    Json x = Json::array();
    for (const auto& row : lp.x) x.push_back(StrategyToJson(row));
    results["x"] = std::move(x);
    results["player_utilities"] = StrategyToJson(lp.player_utilities);
    results["item_prices"] = StrategyToJson(lp.item_prices);
    Emit(global, MakeReport("market lp", {market_file}, results));
  });

  // border check|flow|revenue|monopoly --prior p.json [--rule r.json]
  auto* border = app.add_subcommand("border", "interim feasibility toolkit");
  std::string prior_file, rule_file;
  int monopoly_bidder = 0;
  auto* border_check =
      border->add_subcommand("check", "enumerate violated inequalities");
  border_check->add_option("--prior", prior_file, "prior JSON")->required();
  border_check->add_option("--rule", rule_file, "interim rule JSON")
      ->required();
  border_check->callback([&]() {
    const Prior prior = PriorFromJson(LoadJsonFile(prior_file));
    const InterimRule rule = InterimRuleFromJson(LoadJsonFile(rule_file));
    const std::vector<BorderInequality> violations =
        EnumerateBorderViolations(prior, rule, global.budget_profiles);
    Json list = Json::array();
    for (const BorderInequality& v : violations) {
      list.push_back(BorderInequalityToJson(v));
    }
    Json results;
    results["feasible"] = violations.empty();
    results["violations"] = std::move(list);
    Emit(global, MakeReport("border check", {prior_file, rule_file}, results));
  });
  auto* border_flow = border->add_subcommand("flow", "feasibility via max flow");
  border_flow->add_option("--prior", prior_file, "prior JSON")->required();
  border_flow->add_option("--rule", rule_file, "interim rule JSON")
      ->required();
  border_flow->callback([&]() {
    const Prior prior = PriorFromJson(LoadJsonFile(prior_file));
    const InterimRule rule = InterimRuleFromJson(LoadJsonFile(rule_file));
    const FeasibilityResult result = FeasibilityViaMaxflow(prior, rule);
    Json results;
    results["feasible"] = result.feasible;
    results["flow_value"] = result.flow_value.ToString();
    if (result.witness.has_value()) {
      Json x = Json::array();
      for (const auto& row : result.witness->x) {
        x.push_back(StrategyToJson(row));
      }
      results["ex_post_witness"] = std::move(x);
    }
    if (result.cut_inequality.has_value()) {
      results["violated_inequality"] =
          BorderInequalityToJson(*result.cut_inequality);
    }
    Emit(global, MakeReport("border flow", {prior_file, rule_file}, results));
  });
  auto* border_revenue =
      border->add_subcommand("revenue", "optimal BIC revenue LP");
  border_revenue->add_option("--prior", prior_file, "prior JSON")->required();
  border_revenue->callback([&]() {
    const Prior prior = PriorFromJson(LoadJsonFile(prior_file));
    const BICLPResult result = OptimalBicRevenue(prior, global.budget_profiles);
    Json results;
    results["revenue"] = result.revenue.ToString();
    results["rule"] = InterimRuleToJson(result.rule);
    Emit(global, MakeReport("border revenue", {prior_file}, results));
  });
  auto* border_monopoly =
      border->add_subcommand("monopoly", "single-bidder posted price");
  border_monopoly->add_option("--prior", prior_file, "prior JSON")->required();
  border_monopoly->add_option("--bidder", monopoly_bidder, "bidder index");
  border_monopoly->callback([&]() {
    const Prior prior = PriorFromJson(LoadJsonFile(prior_file));
    if (monopoly_bidder < 0 || monopoly_bidder >= prior.num_bidders()) {
      throw InputError("bidder index out of range");
    }
    const MonopolyResult result = MonopolyPrice(prior.bidder(monopoly_bidder));
    Json results;
    results["price"] = result.price.ToString();
    results["revenue"] = result.revenue.ToString();
    Emit(global, MakeReport("border monopoly", {prior_file}, results));
  });

  // Global options may appear after any subcommand.
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
    cmd->fallthrough();
    for (CLI::App* sub : cmd->get_subcommands([](CLI::App*) { return true; })) {
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage problems are input errors
  }
  return 0;
}

}  // namespace
}  // namespace eqlab

int main(int argc, char** argv) {
  try {
    return eqlab::RunCli(argc, argv);
  } catch (const eqlab::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const eqlab::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const eqlab::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
