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

#include "eqlab/support_enum.h"

#include <algorithm>
#include <functional>

#include "eqlab/errors.h"
#include "eqlab/linear_program.h"

namespace eqlab {

namespace {

std::vector<int> BitmaskToIndices(unsigned mask, int n) {
  std::vector<int> indices;
  for (int i = 0; i < n; ++i) {
    if (mask & (1u << i)) indices.push_back(i);
  }
  return indices;
}

// Searches for a strategy of `chooser` supported exactly on
// `chooser_support` that makes every strategy in `responder_support` a best
// response for the responder.  `payoff(c, r)` is the responder's payoff when
// the chooser plays c and the responder plays r.
//
// LP variables: p_c for c in chooser_support, the common best-response value
// v (free), and the interior margin t.  Maximize t subject to
//   sum_c p_c payoff(c, r) = v       for r in responder_support,
//   sum_c p_c payoff(c, r) <= v      for r outside,
//   sum_c p_c = 1,  p_c >= t.
// The support is exact iff the optimum has t > 0.
std::optional<std::vector<Rational>> ExactSupportStrategy(
    int chooser_n, int responder_n, const std::vector<int>& chooser_support,
    const std::vector<int>& responder_support,
    const std::function<const Rational&(int, int)>& payoff) {
  const int k = static_cast<int>(chooser_support.size());
  // Variables: p_0..p_{k-1}, v, t.
  std::vector<Rational> objective(k + 2, Rational(0));
  objective[k + 1] = Rational(1);
  LinearProgram lp(Sense::kMaximize, objective);
  lp.MakeFree(k);           // v
  lp.MakeFree(k + 1);       // t (nonnegativity implied at the optimum)

  std::vector<bool> in_responder_support(responder_n, false);
  for (int r : responder_support) in_responder_support[r] = true;

  for (int r = 0; r < responder_n; ++r) {
    std::vector<Rational> row(k + 2, Rational(0));
    for (int c = 0; c < k; ++c) row[c] = payoff(chooser_support[c], r);
    row[k] = Rational(-1);
    lp.AddConstraint(std::move(row),
                     in_responder_support[r] ? Relation::kEqual
                                             : Relation::kLessEqual,
                     Rational(0));
  }
  {
    std::vector<Rational> row(k + 2, Rational(0));
    for (int c = 0; c < k; ++c) row[c] = Rational(1);
    lp.AddConstraint(std::move(row), Relation::kEqual, Rational(1));
  }
  for (int c = 0; c < k; ++c) {
    std::vector<Rational> row(k + 2, Rational(0));
    row[c] = Rational(1);
    row[k + 1] = Rational(-1);
    lp.AddConstraint(std::move(row), Relation::kGreaterEqual, Rational(0));
  }

  const LPSolution sol = SolveLP(lp);
  if (sol.status != LPStatus::kOptimal || sol.objective_value.Sign() <= 0) {
    return std::nullopt;
  }
  std::vector<Rational> strategy(chooser_n, Rational(0));
  for (int c = 0; c < k; ++c) strategy[chooser_support[c]] = sol.point[c];
  return strategy;
}

}  // namespace

std::vector<SupportPairEquilibrium> EnumerateNashEquilibria(
    const BimatrixGame& game, const SupportEnumerationOptions& options) {
  const int m = game.num_rows();
  const int n = game.num_cols();
  if (m > 20 || n > 20) {
    throw ResourceError("support enumeration limited to 20x20 games");
  }
  const int limit = options.max_support_size;

  // Support pairs ordered by (|SA| + |SB|, |SA|, SA mask, SB mask).
  std::vector<unsigned> row_masks, col_masks;
  for (unsigned mask = 1; mask < (1u << m); ++mask) row_masks.push_back(mask);
  for (unsigned mask = 1; mask < (1u << n); ++mask) col_masks.push_back(mask);
  auto size_then_value = [](unsigned a, unsigned b) {
    const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  };
  std::sort(row_masks.begin(), row_masks.end(), size_then_value);
  std::sort(col_masks.begin(), col_masks.end(), size_then_value);

  struct Pair {
    unsigned row_mask, col_mask;
    int total;
  };
  std::vector<Pair> pairs;
  for (unsigned rm : row_masks) {
    const int rs = __builtin_popcount(rm);
    if (limit > 0 && rs > limit) continue;
    for (unsigned cm : col_masks) {
      const int cs = __builtin_popcount(cm);
      if (limit > 0 && cs > limit) continue;
      pairs.push_back({rm, cm, rs + cs});
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Pair& a, const Pair& b) { return a.total < b.total; });

  const Matrix& a = game.a();
  const Matrix& b = game.b();
  std::vector<SupportPairEquilibrium> found;
  for (const Pair& pair : pairs) {
    const std::vector<int> sa = BitmaskToIndices(pair.row_mask, m);
    const std::vector<int> sb = BitmaskToIndices(pair.col_mask, n);

    // x supported on SA must make SB optimal for the column player (payoffs
    // from B), and y supported on SB must make SA optimal for the row player.
    auto col_payoff = [&b](int row, int col) -> const Rational& {
      return b.at(row, col);
    };
    auto row_payoff = [&a](int col, int row) -> const Rational& {
      return a.at(row, col);
    };
    std::optional<std::vector<Rational>> x =
        ExactSupportStrategy(m, n, sa, sb, col_payoff);
    if (!x.has_value()) continue;
    std::optional<std::vector<Rational>> y =
        ExactSupportStrategy(n, m, sb, sa, row_payoff);
    if (!y.has_value()) continue;

    found.push_back({sa, sb, MixedStrategy(std::move(*x)),
                     MixedStrategy(std::move(*y))});
    if (options.stop_after_first) break;
  }
  return found;
}

std::optional<SupportPairEquilibrium> FindOneNashEquilibrium(
    const BimatrixGame& game, int max_support_size) {
  SupportEnumerationOptions options;
  options.max_support_size = max_support_size;
  options.stop_after_first = true;
  std::vector<SupportPairEquilibrium> found =
      EnumerateNashEquilibria(game, options);
  if (found.empty()) return std::nullopt;
  return found.front();
}

}  // namespace eqlab
