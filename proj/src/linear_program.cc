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
// Two-phase primal simplex on the dense tableau, exact rational arithmetic,
// Bland's anti-cycling rule (lowest eligible index enters, lowest basic index
// leaves on ties).  Variable lower bounds are shifted away, free variables are
// split, finite upper bounds become internal rows; duals are recovered by
// solving B^T y = c_B against the unpivoted constraint matrix.

#include "eqlab/linear_program.h"

#include <algorithm>

#include "eqlab/errors.h"

namespace eqlab {

LinearProgram::LinearProgram(Sense sense, std::vector<Rational> objective)
    : sense_(sense), objective_(std::move(objective)) {
  if (objective_.empty()) throw InputError("linear program with no variables");
  bounds_.assign(objective_.size(), VariableBounds{Rational(0), std::nullopt});
}

void LinearProgram::AddConstraint(std::vector<Rational> coefficients,
                                  Relation relation, Rational rhs) {
  if (static_cast<int>(coefficients.size()) != num_variables()) {
    throw InputError("constraint coefficient row has wrong length");
  }
  constraints_.push_back({std::move(coefficients), relation, std::move(rhs)});
}

void LinearProgram::SetBounds(int variable, std::optional<Rational> lower,
                              std::optional<Rational> upper) {
  EQLAB_CHECK(variable >= 0 && variable < num_variables());
  if (lower.has_value() && upper.has_value() && *upper < *lower) {
    throw InputError("variable with empty bound interval");
  }
  bounds_[variable] = {std::move(lower), std::move(upper)};
}

namespace {

// Standard-form program: minimize cost . z  s.t.  rows . z = rhs, z >= 0.
struct StandardForm {
  std::vector<std::vector<Rational>> rows;  // m x n
  std::vector<Rational> rhs;                // m, all >= 0
  std::vector<Rational> cost;               // n (internal minimization)
  // Declared-row bookkeeping: origin[r] = index of the declared constraint
  // this row came from, or -1 for an internal upper-bound row; flip[r] is -1
  // if the row was negated to make the rhs nonnegative.
  std::vector<int> origin;
  std::vector<int> flip;
  // Column map back to declared variables: for variable j, plus_col[j] is the
  // shifted (or positive-part) column and neg_col[j] the negative-part column
  // (-1 when the variable has a finite lower bound).
  std::vector<int> plus_col;
  std::vector<int> neg_col;
  std::vector<Rational> shift;  // x_j = shift[j] + z[plus_col] (- z[neg_col])
  Rational objective_constant;  // cost contribution of the shifts
  int num_structural = 0;       // columns before slacks
};

StandardForm BuildStandardForm(const LinearProgram& lp) {
  const int n = lp.num_variables();
  const bool maximize = lp.sense() == Sense::kMaximize;
  StandardForm sf;
  sf.plus_col.assign(n, -1);
  sf.neg_col.assign(n, -1);
  sf.shift.assign(n, Rational(0));

  int col = 0;
  for (int j = 0; j < n; ++j) {
    const VariableBounds& b = lp.bounds()[j];
    if (b.lower.has_value()) {
      sf.shift[j] = *b.lower;
      sf.plus_col[j] = col++;
    } else {
      sf.plus_col[j] = col++;
      sf.neg_col[j] = col++;
    }
  }
  sf.num_structural = col;

  // Internal cost vector over structural columns (slack costs are zero and
  // appended later).
  sf.cost.assign(col, Rational(0));
  for (int j = 0; j < n; ++j) {
    Rational c = lp.objective()[j];
    if (maximize) c = -c;
    sf.cost[sf.plus_col[j]] += c;
    if (sf.neg_col[j] >= 0) sf.cost[sf.neg_col[j]] -= c;
    sf.objective_constant += lp.objective()[j] * sf.shift[j];
  }

  // Declared constraints, with shifted variables folded into the rhs; rows
  // are built at structural width first, then padded once the slack count is
  // known.
  struct PendingRow {
    std::vector<Rational> coeffs;
    Relation rel;
    Rational rhs;
    int origin;
  };
  std::vector<PendingRow> pending;
  for (int r = 0; r < lp.num_constraints(); ++r) {
    const LinearConstraint& c = lp.constraints()[r];
    std::vector<Rational> row(col);
    Rational rhs = c.rhs;
    for (int j = 0; j < n; ++j) {
      const Rational& a = c.coefficients[j];
      if (a.Sign() == 0) continue;
      row[sf.plus_col[j]] += a;
      if (sf.neg_col[j] >= 0) row[sf.neg_col[j]] -= a;
      rhs -= a * sf.shift[j];
    }
    pending.push_back({std::move(row), c.relation, std::move(rhs), r});
  }
  // Upper bounds become internal rows z_plus (- z_neg) <= upper - shift.
  for (int j = 0; j < n; ++j) {
    const VariableBounds& b = lp.bounds()[j];
    if (!b.upper.has_value()) continue;
    std::vector<Rational> row(col);
    row[sf.plus_col[j]] = Rational(1);
    if (sf.neg_col[j] >= 0) row[sf.neg_col[j]] = Rational(-1);
    pending.push_back({std::move(row), Relation::kLessEqual,
                       *b.upper - sf.shift[j], -1});
  }

  int num_slacks = 0;
  for (const PendingRow& p : pending) {
    if (p.rel != Relation::kEqual) ++num_slacks;
  }
  const int width = col + num_slacks;
  sf.cost.resize(width, Rational(0));

  int next_slack = col;
  for (PendingRow& p : pending) {
    std::vector<Rational> row(width);
    std::copy(p.coeffs.begin(), p.coeffs.end(), row.begin());
    if (p.rel == Relation::kLessEqual) {
      row[next_slack++] = Rational(1);
    } else if (p.rel == Relation::kGreaterEqual) {
      row[next_slack++] = Rational(-1);
    }
    int flip = 1;
    Rational rhs = p.rhs;
    if (rhs < Rational(0)) {
      flip = -1;
      for (Rational& v : row) v = -v;
      rhs = -rhs;
    }
    sf.rows.push_back(std::move(row));
    sf.rhs.push_back(std::move(rhs));
    sf.origin.push_back(p.origin);
    sf.flip.push_back(flip);
  }
  return sf;
}

// Simplex tableau over [A | b] with an explicit reduced-cost row.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs)
      : a_(std::move(rows)), b_(std::move(rhs)) {}

  int num_rows() const { return static_cast<int>(a_.size()); }
  int num_cols() const { return a_.empty() ? 0 : static_cast<int>(a_[0].size()); }

  std::vector<std::vector<Rational>>& a() { return a_; }
  std::vector<Rational>& b() { return b_; }
  std::vector<int>& basis() { return basis_; }

  void Pivot(int row, int col) {
    const Rational pivot = a_[row][col];
    EQLAB_CHECK(pivot.Sign() != 0);
    const Rational inv = Rational(1) / pivot;
    for (Rational& v : a_[row]) v *= inv;
    b_[row] *= inv;
    for (int r = 0; r < num_rows(); ++r) {
      if (r == row || a_[r][col].Sign() == 0) continue;
      const Rational factor = a_[r][col];
      for (int c = 0; c < num_cols(); ++c) {
        if (a_[row][c].Sign() != 0) a_[r][c] -= factor * a_[row][c];
      }
      a_[r][col] = Rational(0);  // cancel exactly
      b_[r] -= factor * b_[row];
    }
    basis_[row] = col;
  }

  // Minimizes cost . z from the current basis with Bland's rule.  Returns
  // false if unbounded.  allowed_cols limits entering candidates.
  bool Minimize(const std::vector<Rational>& cost, int allowed_cols) {
    while (true) {
      // Reduced costs d_j = c_j - c_B . (tableau column j).
      int entering = -1;
      for (int j = 0; j < allowed_cols; ++j) {
        Rational d = cost[j];
        for (int r = 0; r < num_rows(); ++r) {
          const Rational& cb = cost[basis_[r]];
          if (cb.Sign() != 0 && a_[r][j].Sign() != 0) d -= cb * a_[r][j];
        }
        if (d.Sign() < 0) {
          entering = j;
          break;  // Bland: lowest index
        }
      }
      if (entering < 0) return true;

      int leaving = -1;
      Rational best_ratio;
      for (int r = 0; r < num_rows(); ++r) {
        if (a_[r][entering].Sign() <= 0) continue;
        Rational ratio = b_[r] / a_[r][entering];
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return false;  // unbounded direction
      Pivot(leaving, entering);
    }
  }

 private:
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<int> basis_;
};

// Solves transpose(B) y = c_b by Gaussian elimination, exact.
std::vector<Rational> SolveTransposed(std::vector<std::vector<Rational>> bt,
                                      std::vector<Rational> rhs) {
  const int m = static_cast<int>(bt.size());
  for (int c = 0; c < m; ++c) {
    int pivot_row = -1;
    for (int r = c; r < m; ++r) {
      if (bt[r][c].Sign() != 0) {
        pivot_row = r;
        break;
      }
    }
    EQLAB_CHECK(pivot_row >= 0);  // basis matrix is invertible
    std::swap(bt[c], bt[pivot_row]);
    std::swap(rhs[c], rhs[pivot_row]);
    const Rational inv = Rational(1) / bt[c][c];
    for (int k = c; k < m; ++k) bt[c][k] *= inv;
    rhs[c] *= inv;
    for (int r = 0; r < m; ++r) {
      if (r == c || bt[r][c].Sign() == 0) continue;
      const Rational factor = bt[r][c];
      for (int k = c; k < m; ++k) bt[r][k] -= factor * bt[c][k];
      rhs[r] -= factor * rhs[c];
    }
  }
  return rhs;
}

}  // namespace

LPSolution SolveLP(const LinearProgram& lp) {
  StandardForm sf = BuildStandardForm(lp);
  const int m = static_cast<int>(sf.rows.size());
  const int n = static_cast<int>(sf.cost.size());
  const bool maximize = lp.sense() == Sense::kMaximize;

  LPSolution solution;

  // Keep an unpivoted copy for dual recovery.
  const std::vector<std::vector<Rational>> original_rows = sf.rows;

  if (m == 0) {
    // No constraints: optimum is at the bounds, or unbounded.
    solution.point.assign(lp.num_variables(), Rational(0));
    Rational value;
    for (int j = 0; j < lp.num_variables(); ++j) {
      const Rational& c = lp.objective()[j];
      const VariableBounds& b = lp.bounds()[j];
      const bool wants_up = (c.Sign() > 0) == maximize;
      if (c.Sign() == 0) {
        solution.point[j] = b.lower.value_or(Rational(0));
      } else if (wants_up) {
        if (!b.upper.has_value()) {
          solution.status = LPStatus::kUnbounded;
          return solution;
        }
        solution.point[j] = *b.upper;
      } else {
        if (!b.lower.has_value()) {
          solution.status = LPStatus::kUnbounded;
          return solution;
        }
        solution.point[j] = *b.lower;
      }
      value += c * solution.point[j];
    }
    solution.status = LPStatus::kOptimal;
    solution.objective_value = value;
    solution.reduced_costs = lp.objective();
    return solution;
  }

  // Phase 1: artificial columns, one per row.
  std::vector<std::vector<Rational>> work = sf.rows;
  for (int r = 0; r < m; ++r) {
    work[r].resize(n + m, Rational(0));
    work[r][n + r] = Rational(1);
  }
  Tableau tableau(std::move(work), sf.rhs);
  tableau.basis().resize(m);
  for (int r = 0; r < m; ++r) tableau.basis()[r] = n + r;

  std::vector<Rational> phase1_cost(n + m, Rational(0));
  for (int r = 0; r < m; ++r) phase1_cost[n + r] = Rational(1);
  const bool phase1_bounded = tableau.Minimize(phase1_cost, n + m);
  EQLAB_CHECK(phase1_bounded);  // phase-1 objective is bounded below by 0

  Rational artificial_sum;
  for (int r = 0; r < m; ++r) {
    if (tableau.basis()[r] >= n) artificial_sum += tableau.b()[r];
  }
  if (artificial_sum.Sign() > 0) {
    solution.status = LPStatus::kInfeasible;
    return solution;
  }

  // Drive remaining artificials out of the basis; drop redundant rows.
  std::vector<bool> dropped(m, false);
  for (int r = 0; r < m; ++r) {
    if (tableau.basis()[r] < n) continue;
    int col = -1;
    for (int j = 0; j < n; ++j) {
      if (tableau.a()[r][j].Sign() != 0) {
        col = j;
        break;
      }
    }
    if (col >= 0) {
      tableau.Pivot(r, col);
    } else {
      dropped[r] = true;  // redundant constraint
    }
  }

  // Rebuild a compact tableau without artificial columns and dropped rows.
  std::vector<std::vector<Rational>> rows2;
  std::vector<Rational> rhs2;
  std::vector<int> basis2;
  std::vector<int> kept_rows;
  for (int r = 0; r < m; ++r) {
    if (dropped[r]) continue;
    std::vector<Rational> row(tableau.a()[r].begin(),
                              tableau.a()[r].begin() + n);
    rows2.push_back(std::move(row));
    rhs2.push_back(tableau.b()[r]);
    basis2.push_back(tableau.basis()[r]);
    kept_rows.push_back(r);
  }
  Tableau phase2(std::move(rows2), std::move(rhs2));
  phase2.basis() = basis2;

  if (!phase2.Minimize(sf.cost, n)) {
    solution.status = LPStatus::kUnbounded;
    return solution;
  }

  // Primal point in standard-form coordinates.
  std::vector<Rational> z(n, Rational(0));
  for (int r = 0; r < phase2.num_rows(); ++r) {
    z[phase2.basis()[r]] = phase2.b()[r];
  }

  solution.status = LPStatus::kOptimal;
  solution.point.assign(lp.num_variables(), Rational(0));
  for (int j = 0; j < lp.num_variables(); ++j) {
    Rational v = sf.shift[j] + z[sf.plus_col[j]];
    if (sf.neg_col[j] >= 0) v -= z[sf.neg_col[j]];
    solution.point[j] = v;
  }

  Rational internal_value;
  for (int j = 0; j < n; ++j) {
    if (z[j].Sign() != 0 && sf.cost[j].Sign() != 0) {
      internal_value += sf.cost[j] * z[j];
    }
  }
  solution.objective_value =
      (maximize ? -internal_value : internal_value) + sf.objective_constant;

  // Duals: solve transpose(B) y = c_B over the kept original rows.
  const int mk = phase2.num_rows();
  std::vector<std::vector<Rational>> bt(mk, std::vector<Rational>(mk));
  std::vector<Rational> cb(mk);
  for (int i = 0; i < mk; ++i) {
    const int col = phase2.basis()[i];
    cb[i] = sf.cost[col];
    for (int r = 0; r < mk; ++r) {
      // transpose(B)[i][r] = B[r][i] = original_rows[kept_rows[r]][basis[i]]
      bt[i][r] = original_rows[kept_rows[r]][col];
    }
  }
  std::vector<Rational> y_internal = SolveTransposed(std::move(bt), cb);

  solution.dual.assign(lp.num_constraints(), Rational(0));
  for (int i = 0; i < mk; ++i) {
    const int r = kept_rows[i];
    if (sf.origin[r] < 0) continue;  // internal upper-bound row
    Rational y = Rational(sf.flip[r]) * y_internal[i];
    if (maximize) y = -y;
    solution.dual[sf.origin[r]] = y;
  }

  // Reduced costs against declared data.
  solution.reduced_costs.assign(lp.num_variables(), Rational(0));
  for (int j = 0; j < lp.num_variables(); ++j) {
    Rational d = lp.objective()[j];
    for (int r = 0; r < lp.num_constraints(); ++r) {
      const Rational& a = lp.constraints()[r].coefficients[j];
      if (a.Sign() != 0 && solution.dual[r].Sign() != 0) {
        d -= solution.dual[r] * a;
      }
    }
    solution.reduced_costs[j] = d;
  }

  // Strong duality with bound terms: value = y . rhs + d . x, exactly.
  Rational check = solution.objective_value;
  for (int r = 0; r < lp.num_constraints(); ++r) {
    if (solution.dual[r].Sign() != 0) {
      check -= solution.dual[r] * lp.constraints()[r].rhs;
    }
  }
  for (int j = 0; j < lp.num_variables(); ++j) {
    if (solution.reduced_costs[j].Sign() != 0 &&
        solution.point[j].Sign() != 0) {
      check -= solution.reduced_costs[j] * solution.point[j];
    }
  }
  EQLAB_CHECK(check.Sign() == 0);

  return solution;
}

}  // namespace eqlab
