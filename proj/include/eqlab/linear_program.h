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

#ifndef EQLAB_LINEAR_PROGRAM_H_
#define EQLAB_LINEAR_PROGRAM_H_

#include <optional>
#include <vector>

#include "eqlab/rational.h"

namespace eqlab {

enum class Sense { kMaximize, kMinimize };
enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct LinearConstraint {
  std::vector<Rational> coefficients;  // length = number of variables
  Relation relation;
  Rational rhs;
};

struct VariableBounds {
  std::optional<Rational> lower;  // nullopt = -infinity
  std::optional<Rational> upper;  // nullopt = +infinity
};

// Dense exact linear program.  Variables default to lower bound 0 and no
// upper bound; call MakeFree / SetBounds to override.
class LinearProgram {
 public:
  LinearProgram(Sense sense, std::vector<Rational> objective);

  int num_variables() const { return static_cast<int>(objective_.size()); }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }
  Sense sense() const { return sense_; }
  const std::vector<Rational>& objective() const { return objective_; }
  const std::vector<LinearConstraint>& constraints() const {
    return constraints_;
  }
  const std::vector<VariableBounds>& bounds() const { return bounds_; }

  void AddConstraint(std::vector<Rational> coefficients, Relation relation,
                     Rational rhs);
  void SetBounds(int variable, std::optional<Rational> lower,
                 std::optional<Rational> upper);
  void MakeFree(int variable) { SetBounds(variable, std::nullopt, std::nullopt); }

 private:
  Sense sense_;
  std::vector<Rational> objective_;
  std::vector<LinearConstraint> constraints_;
  std::vector<VariableBounds> bounds_;
};

enum class LPStatus { kOptimal, kInfeasible, kUnbounded };

// Exact optimal basic solution.  When status is kOptimal:
//  - point satisfies every constraint and bound exactly;
//  - dual has one multiplier per declared constraint, with the sign
//    convention (for a maximization problem) y >= 0 on <= rows, y <= 0 on
//    >= rows, free on = rows; reversed for minimization;
//  - reduced_costs[j] = c_j - sum_i dual[i] * a_ij, zero for every variable
//    strictly between its bounds;
//  - objective_value = sum_i dual[i] * rhs_i + sum_j reduced_costs[j] * x_j
//    (strong duality with bound terms), verified internally.
struct LPSolution {
  LPStatus status = LPStatus::kInfeasible;
  std::vector<Rational> point;
  Rational objective_value;
  std::vector<Rational> dual;
  std::vector<Rational> reduced_costs;
};

// Primal simplex over exact rationals with Bland's anti-cycling rule; the
// pivot order is deterministic (lowest eligible index), so identical inputs
// give identical optimal bases.
LPSolution SolveLP(const LinearProgram& lp);

}  // namespace eqlab

#endif  // EQLAB_LINEAR_PROGRAM_H_
