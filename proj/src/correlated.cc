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

#include "eqlab/correlated.h"

#include "eqlab/errors.h"

namespace eqlab {

EquilibriumSystem BuildSystem(const NormalFormGame& game, EquilibriumKind kind,
                              long max_outcomes) {
  const long outcomes = game.num_outcomes();
  if (outcomes > max_outcomes) {
    throw ResourceError("outcome count " + std::to_string(outcomes) +
                        " exceeds the budget");
  }
  EquilibriumSystem system{kind, game, {}};

  for (int player = 0; player < game.num_players(); ++player) {
    const int strategies = game.num_strategies(player);
    if (kind == EquilibriumKind::kCorrelated) {
      // sum over outcomes with s_i = j of [u_i(s) - u_i(s', s_-i)] x_s >= 0
      for (int j = 0; j < strategies; ++j) {
        for (int dev = 0; dev < strategies; ++dev) {
          if (dev == j) continue;  // vacuous self-deviation
          EquilibriumSystem::IncentiveRow row{player, j, dev,
                                              std::vector<Rational>(outcomes)};
          for (long s = 0; s < outcomes; ++s) {
            const long with_j = game.FlatWithStrategy(s, player, j);
            if (with_j != s) continue;  // only outcomes where s_i = j
            const long deviated = game.FlatWithStrategy(s, player, dev);
            row.coefficients[s] =
                game.Payoff(player, s) - game.Payoff(player, deviated);
          }
          system.rows.push_back(std::move(row));
        }
      }
    } else {
      // sum over all outcomes of [u_i(s) - u_i(s', s_-i)] x_s >= 0
      for (int dev = 0; dev < strategies; ++dev) {
        EquilibriumSystem::IncentiveRow row{player, dev, dev,
                                            std::vector<Rational>(outcomes)};
        for (long s = 0; s < outcomes; ++s) {
          const long deviated = game.FlatWithStrategy(s, player, dev);
          if (deviated == s) continue;
          row.coefficients[s] =
              game.Payoff(player, s) - game.Payoff(player, deviated);
        }
        system.rows.push_back(std::move(row));
      }
    }
  }
  return system;
}

LinearProgram EquilibriumSystem::ToLinearProgram(
    const std::vector<Rational>& objective, Sense sense) const {
  const long outcomes = game.num_outcomes();
  if (static_cast<long>(objective.size()) != outcomes) {
    throw InputError("objective length must match the outcome count");
  }
  LinearProgram lp(sense, objective);
  for (const IncentiveRow& row : rows) {
    lp.AddConstraint(row.coefficients, Relation::kGreaterEqual, Rational(0));
  }
  lp.AddConstraint(std::vector<Rational>(outcomes, Rational(1)),
                   Relation::kEqual, Rational(1));
  return lp;  // variables already default to x >= 0
}

MembershipReport CheckMembership(const EquilibriumSystem& system,
                                 const JointDistribution& rho,
                                 const Rational& epsilon) {
  if (rho.num_outcomes() != system.game.num_outcomes()) {
    throw InputError("distribution does not match the game's outcomes");
  }
  if (epsilon.Sign() < 0) throw InputError("negative epsilon");
  MembershipReport report;
  report.holds = true;
  for (size_t r = 0; r < system.rows.size(); ++r) {
    Rational value;
    const std::vector<Rational>& coeffs = system.rows[r].coefficients;
    for (long s = 0; s < rho.num_outcomes(); ++s) {
      if (coeffs[s].Sign() != 0 && rho.Probability(s).Sign() != 0) {
        value += coeffs[s] * rho.Probability(s);
      }
    }
    if (value < report.worst_gap) {
      report.worst_gap = value;
      report.worst_row = static_cast<int>(r);
    }
    if (value < -epsilon) report.holds = false;
  }
  return report;
}

LPSolution OptimizeOver(const EquilibriumSystem& system,
                        const std::vector<Rational>& objective, Sense sense) {
  const LPSolution solution =
      SolveLP(system.ToLinearProgram(objective, sense));
  // Every game has a Nash equilibrium, hence a feasible point.
  if (solution.status != LPStatus::kOptimal) {
    throw InternalError("equilibrium polytope unexpectedly empty or unbounded");
  }
  return solution;
}

PoAReport PoaReport(const NormalFormGame& game, EquilibriumKind kind) {
  PoAReport report;
  const long outcomes = game.num_outcomes();
  std::vector<Rational> welfare(outcomes);
  for (long s = 0; s < outcomes; ++s) welfare[s] = game.Welfare(s);
  report.optimal_value = welfare[0];
  for (long s = 1; s < outcomes; ++s) {
    report.optimal_value = Max(report.optimal_value, welfare[s]);
  }
  const EquilibriumSystem system = BuildSystem(game, kind);
  report.worst_equilibrium_value =
      OptimizeOver(system, welfare, Sense::kMinimize).objective_value;
  if (report.worst_equilibrium_value.Sign() > 0) {
    report.ratio_defined = true;
    report.ratio = report.optimal_value / report.worst_equilibrium_value;
  }
  return report;
}

bool CertifySfpCce(const BimatrixGame& game, const Trace& trace,
                   const Rational& epsilon) {
  const JointDistribution rho = CceFromTrace(trace);
  if (rho.strategy_counts() !=
      std::vector<int>{game.num_rows(), game.num_cols()}) {
    throw InputError("trace shape does not match the game");
  }
  const NormalFormGame normal_form = NormalFormGame::FromBimatrix(game);
  const EquilibriumSystem system =
      BuildSystem(normal_form, EquilibriumKind::kCoarseCorrelated);
  return CheckMembership(system, rho, epsilon).holds;
}

}  // namespace eqlab
