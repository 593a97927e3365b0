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

#ifndef EQLAB_CORRELATED_H_
#define EQLAB_CORRELATED_H_

#include <string>
#include <vector>

#include "eqlab/dynamics.h"
#include "eqlab/games.h"
#include "eqlab/linear_program.h"

namespace eqlab {

enum class EquilibriumKind { kCorrelated, kCoarseCorrelated };

// The explicit linear system whose feasible points are exactly the (coarse)
// correlated equilibria of a game: one variable per outcome, the probability
// constraints, and one incentive row per deviation.  Correlated systems use
// the probability-weighted (unconditional) form of the incentive
// constraints, which is linear without case-splitting on zero-probability
// signals; they have sum_i |S_i| (|S_i| - 1) incentive rows.  Coarse systems
// have one row per unilateral deviation, sum_i |S_i|.
struct EquilibriumSystem {
  EquilibriumKind kind;
  NormalFormGame game;
  // Incentive rows only; the simplex constraints are implicit in how the
  // system is solved and checked.  Row r states: coefficients . x >= 0.
  struct IncentiveRow {
    int player;
    int signal;     // the suggested strategy j (== deviation for coarse rows)
    int deviation;  // the alternative strategy
    std::vector<Rational> coefficients;  // length = #outcomes
  };
  std::vector<IncentiveRow> rows;

  // The full LP skeleton (incentive rows plus distribution constraints) with
  // a caller-supplied objective.
  LinearProgram ToLinearProgram(const std::vector<Rational>& objective,
                                Sense sense) const;
};

EquilibriumSystem BuildSystem(const NormalFormGame& game, EquilibriumKind kind,
                              long max_outcomes = 1'000'000);

struct MembershipReport {
  bool holds = false;
  Rational worst_gap;  // most negative incentive-row value (0 if none)
  int worst_row = -1;  // index into EquilibriumSystem::rows
};

// Evaluates every incentive constraint exactly at rho; holds iff every row
// value is at least -epsilon.
MembershipReport CheckMembership(const EquilibriumSystem& system,
                                 const JointDistribution& rho,
                                 const Rational& epsilon);

// Optimizes a linear function of the outcome probabilities over the
// equilibrium polytope.
LPSolution OptimizeOver(const EquilibriumSystem& system,
                        const std::vector<Rational>& objective, Sense sense);

struct PoAReport {
  std::string objective = "welfare";
  Rational optimal_value;            // f(OPT): best outcome by exhaustive scan
  Rational worst_equilibrium_value;  // min of the objective over the polytope
  bool ratio_defined = false;        // requires a positive worst value
  Rational ratio;                    // optimal / worst when defined
};

// Price of anarchy of the welfare objective over the chosen equilibrium
// polytope: the optimal outcome value divided by the worst equilibrium
// value.  A nonpositive worst value flags the ratio undefined; raw values
// are always reported.
PoAReport PoaReport(const NormalFormGame& game, EquilibriumKind kind);

// Prop-style certificate that a smooth-FP trace's time-averaged history is
// an epsilon-coarse-correlated equilibrium of the game it was run on.
bool CertifySfpCce(const BimatrixGame& game, const Trace& trace,
                   const Rational& epsilon);

}  // namespace eqlab

#endif  // EQLAB_CORRELATED_H_
