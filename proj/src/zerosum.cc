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

#include "eqlab/zerosum.h"

#include "eqlab/errors.h"
#include "eqlab/linear_program.h"

namespace eqlab {

ZeroSumGame::ZeroSumGame(Matrix a) : a_(std::move(a)) {
  if (a_.rows() == 0 || a_.cols() == 0) throw InputError("empty payoff matrix");
}

BimatrixGame ZeroSumGame::ToBimatrix() const {
  Matrix b(a_.rows(), a_.cols());
  for (int r = 0; r < a_.rows(); ++r) {
    for (int c = 0; c < a_.cols(); ++c) b.at(r, c) = -a_.at(r, c);
  }
  return BimatrixGame(a_, std::move(b));
}

namespace {

// max v subject to v <= sum_i M_ij x_i for every column j, x a distribution.
// Variables: x_1..x_m, then v (free).
std::pair<Rational, std::vector<Rational>> SolveGuaranteeLP(const Matrix& m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<Rational> objective(rows + 1, Rational(0));
  objective[rows] = Rational(1);
  LinearProgram lp(Sense::kMaximize, objective);
  lp.MakeFree(rows);

  for (int j = 0; j < cols; ++j) {
    std::vector<Rational> row(rows + 1, Rational(0));
    for (int i = 0; i < rows; ++i) row[i] = -m.at(i, j);
    row[rows] = Rational(1);
    lp.AddConstraint(std::move(row), Relation::kLessEqual, Rational(0));
  }
  std::vector<Rational> simplex_row(rows + 1, Rational(0));
  for (int i = 0; i < rows; ++i) simplex_row[i] = Rational(1);
  lp.AddConstraint(std::move(simplex_row), Relation::kEqual, Rational(1));

  const LPSolution solution = SolveLP(lp);
  EQLAB_CHECK(solution.status == LPStatus::kOptimal);
  std::vector<Rational> strategy(solution.point.begin(),
                                 solution.point.begin() + rows);
  return {solution.objective_value, std::move(strategy)};
}

Matrix Transposed(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) t.at(c, r) = m.at(r, c);
  }
  return t;
}

Matrix Negated(const Matrix& m) {
  Matrix n(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) n.at(r, c) = -m.at(r, c);
  }
  return n;
}

}  // namespace

ZeroSumSolution SolveMinimax(const ZeroSumGame& game) {
  // Row player's LP on A; the column player's LP (min w s.t. w >= A y) is
  // the same guarantee LP on -A^T, with w = -v.
  auto [value, x] = SolveGuaranteeLP(game.a());
  auto [neg_value, y] = SolveGuaranteeLP(Negated(Transposed(game.a())));
  // Strong duality, exact: v* = w*.
  EQLAB_CHECK(value == -neg_value);
  return {value, MixedStrategy(std::move(x)), MixedStrategy(std::move(y))};
}

MinMaxVerification VerifyMinMaxPair(const ZeroSumGame& game,
                                    const MixedStrategy& x,
                                    const MixedStrategy& y) {
  if (x.size() != game.num_rows() || y.size() != game.num_cols()) {
    throw InputError("strategy dimensions do not match the game");
  }
  const Rational value = SolveMinimax(game).value;

  const std::vector<Rational> against_columns =
      game.a().LeftMultiplyVector(x.probabilities());
  Rational row_min = against_columns[0];
  for (const Rational& v : against_columns) row_min = Min(row_min, v);

  const std::vector<Rational> against_rows =
      game.a().MultiplyVector(y.probabilities());
  Rational col_max = against_rows[0];
  for (const Rational& v : against_rows) col_max = Max(col_max, v);

  MinMaxVerification result;
  result.row_guarantee_gap = value - row_min;
  result.column_guarantee_gap = col_max - value;
  result.is_pair = result.row_guarantee_gap.Sign() <= 0 &&
                   result.column_guarantee_gap.Sign() <= 0;
  return result;
}

}  // namespace eqlab
