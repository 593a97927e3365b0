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

#include "eqlab/games.h"

#include <algorithm>

#include "eqlab/errors.h"

namespace eqlab {

MixedStrategy::MixedStrategy(std::vector<Rational> probabilities)
    : probabilities_(std::move(probabilities)) {
  if (probabilities_.empty()) throw InputError("empty mixed strategy");
  Rational total;
  for (const Rational& p : probabilities_) {
    if (p.Sign() < 0) throw InputError("negative strategy probability");
    total += p;
  }
  if (total != Rational(1)) {
    throw InputError("strategy probabilities sum to " + total.ToString() +
                     ", not 1");
  }
}

MixedStrategy MixedStrategy::Uniform(int n) {
  EQLAB_CHECK(n >= 1);
  return MixedStrategy(std::vector<Rational>(n, Rational(1, n)));
}

MixedStrategy MixedStrategy::PointMass(int n, int index) {
  EQLAB_CHECK(index >= 0 && index < n);
  std::vector<Rational> p(n, Rational(0));
  p[index] = Rational(1);
  return MixedStrategy(std::move(p));
}

std::vector<int> MixedStrategy::Support() const {
  std::vector<int> support;
  for (int i = 0; i < size(); ++i) {
    if (probabilities_[i].Sign() > 0) support.push_back(i);
  }
  return support;
}

BimatrixGame::BimatrixGame(Matrix a, Matrix b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() != b_.rows() || a_.cols() != b_.cols()) {
    throw InputError("payoff matrices have different shapes");
  }
  if (a_.rows() == 0 || a_.cols() == 0) {
    throw InputError("empty payoff matrix");
  }
}

bool BimatrixGame::IsNormalized() const {
  const Rational one(1), minus_one(-1);
  for (const Matrix* m : {&a_, &b_}) {
    for (const Rational& e : m->entries()) {
      if (e > one || e < minus_one) return false;
    }
  }
  return true;
}

NormalFormGame::NormalFormGame(std::vector<int> strategy_counts,
                               std::vector<std::vector<Rational>> payoffs)
    : counts_(std::move(strategy_counts)), payoffs_(std::move(payoffs)) {
  if (counts_.empty()) throw InputError("game with no players");
  num_outcomes_ = 1;
  for (int c : counts_) {
    if (c < 1) throw InputError("player with no strategies");
    num_outcomes_ *= c;
  }
  strides_.assign(counts_.size(), 1);
  for (int i = static_cast<int>(counts_.size()) - 2; i >= 0; --i) {
    strides_[i] = strides_[i + 1] * counts_[i + 1];
  }
  if (static_cast<int>(payoffs_.size()) != num_players()) {
    throw InputError("payoff tensor missing players");
  }
  for (const auto& per_player : payoffs_) {
    if (static_cast<long>(per_player.size()) != num_outcomes_) {
      throw InputError("payoff tensor not total");
    }
  }
}

NormalFormGame NormalFormGame::FromBimatrix(const BimatrixGame& game) {
  const int m = game.num_rows(), n = game.num_cols();
  std::vector<std::vector<Rational>> payoffs(2);
  payoffs[0].reserve(m * n);
  payoffs[1].reserve(m * n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      payoffs[0].push_back(game.a().at(i, j));
      payoffs[1].push_back(game.b().at(i, j));
    }
  }
  return NormalFormGame({m, n}, std::move(payoffs));
}

long NormalFormGame::FlatIndex(const std::vector<int>& profile) const {
  if (static_cast<int>(profile.size()) != num_players()) {
    throw InputError("profile length mismatch");
  }
  long flat = 0;
  for (int p = 0; p < num_players(); ++p) {
    if (profile[p] < 0 || profile[p] >= counts_[p]) {
      throw InputError("strategy index out of range");
    }
    flat += strides_[p] * profile[p];
  }
  return flat;
}

std::vector<int> NormalFormGame::ProfileFromFlat(long flat) const {
  EQLAB_CHECK(flat >= 0 && flat < num_outcomes_);
  std::vector<int> profile(num_players());
  for (int p = 0; p < num_players(); ++p) {
    profile[p] = static_cast<int>(flat / strides_[p]);
    flat %= strides_[p];
  }
  return profile;
}

long NormalFormGame::FlatWithStrategy(long flat, int player,
                                      int strategy) const {
  const int current = static_cast<int>(flat / strides_[player]) % counts_[player];
  return flat + strides_[player] * static_cast<long>(strategy - current);
}

Rational NormalFormGame::Welfare(long flat) const {
  Rational w;
  for (int p = 0; p < num_players(); ++p) w += payoffs_[p][flat];
  return w;
}

JointDistribution::JointDistribution(std::vector<int> strategy_counts,
                                     std::vector<Rational> probabilities)
    : counts_(std::move(strategy_counts)), probs_(std::move(probabilities)) {
  long outcomes = 1;
  for (int c : counts_) outcomes *= c;
  if (static_cast<long>(probs_.size()) != outcomes) {
    throw InputError("joint distribution has wrong support size");
  }
  Rational total;
  for (const Rational& p : probs_) {
    if (p.Sign() < 0) throw InputError("negative joint probability");
    total += p;
  }
  if (total != Rational(1)) {
    throw InputError("joint probabilities sum to " + total.ToString() +
                     ", not 1");
  }
}

namespace {
void CheckDimensions(const BimatrixGame& game, const MixedStrategy& x,
                     const MixedStrategy& y) {
  if (x.size() != game.num_rows() || y.size() != game.num_cols()) {
    throw InputError("strategy dimensions do not match the game");
  }
}
}  // namespace

Rational ExpectedPayoff(const BimatrixGame& game, const MixedStrategy& x,
                        const MixedStrategy& y, Player player) {
  CheckDimensions(game, x, y);
  const Matrix& m = player == Player::kRow ? game.a() : game.b();
  return BilinearForm(x.probabilities(), m, y.probabilities());
}

std::pair<Rational, int> BestResponseValue(const BimatrixGame& game,
                                           Player player,
                                           const MixedStrategy& opponent) {
  std::vector<Rational> values;
  if (player == Player::kRow) {
    if (opponent.size() != game.num_cols()) {
      throw InputError("opponent strategy dimension mismatch");
    }
    values = game.a().MultiplyVector(opponent.probabilities());
  } else {
    if (opponent.size() != game.num_rows()) {
      throw InputError("opponent strategy dimension mismatch");
    }
    values = game.b().LeftMultiplyVector(opponent.probabilities());
  }
  int best = 0;
  for (int i = 1; i < static_cast<int>(values.size()); ++i) {
    if (values[i] > values[best]) best = i;  // lowest index wins ties
  }
  return {values[best], best};
}

EpsilonNEReport VerifyEpsilonNE(const BimatrixGame& game,
                                const MixedStrategy& x, const MixedStrategy& y,
                                const VerificationQuery& query) {
  CheckDimensions(game, x, y);
  if (query.epsilon.Sign() < 0) throw InputError("negative epsilon");
  EpsilonNEReport report;
  report.epsilon_unit_warning =
      query.epsilon.Sign() > 0 && !game.IsNormalized();

  const Rational row_value = ExpectedPayoff(game, x, y, Player::kRow);
  const Rational col_value = ExpectedPayoff(game, x, y, Player::kColumn);
  report.violation_row =
      BestResponseValue(game, Player::kRow, y).first - row_value;
  report.violation_column =
      BestResponseValue(game, Player::kColumn, x).first - col_value;
  report.holds = report.violation_row <= query.epsilon &&
                 report.violation_column <= query.epsilon;
  return report;
}

WellSupportedReport VerifyWellSupported(const BimatrixGame& game,
                                        const MixedStrategy& x,
                                        const MixedStrategy& y,
                                        const VerificationQuery& query) {
  CheckDimensions(game, x, y);
  if (query.epsilon.Sign() < 0) throw InputError("negative epsilon");
  WellSupportedReport report;
  report.epsilon_unit_warning =
      query.epsilon.Sign() > 0 && !game.IsNormalized();

  const std::vector<Rational> row_values =
      game.a().MultiplyVector(y.probabilities());
  const std::vector<Rational> col_values =
      game.b().LeftMultiplyVector(x.probabilities());
  const Rational row_best = *std::max_element(row_values.begin(),
                                              row_values.end());
  const Rational col_best = *std::max_element(col_values.begin(),
                                              col_values.end());
  for (int i = 0; i < x.size(); ++i) {
    if (x[i].Sign() > 0 && row_best - row_values[i] > query.epsilon) {
      report.offending.push_back(
          {Player::kRow, i, row_best - row_values[i]});
    }
  }
  for (int j = 0; j < y.size(); ++j) {
    if (y[j].Sign() > 0 && col_best - col_values[j] > query.epsilon) {
      report.offending.push_back(
          {Player::kColumn, j, col_best - col_values[j]});
    }
  }
  report.holds = report.offending.empty();
  return report;
}

namespace {
Matrix NormalizeMatrix(const Matrix& m) {
  const Rational lo = m.MinEntry();
  const Rational hi = m.MaxEntry();
  Matrix out(m.rows(), m.cols());
  if (lo == hi) return out;  // constant payoffs: shift to all-zero
  // Affine map [lo, hi] -> [-1, 1]: x -> (2x - hi - lo) / (hi - lo).
  const Rational span = hi - lo;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      out.at(r, c) = (m.at(r, c) * Rational(2) - hi - lo) / span;
    }
  }
  return out;
}
}  // namespace

BimatrixGame NormalizePayoffs(const BimatrixGame& game) {
  return BimatrixGame(NormalizeMatrix(game.a()), NormalizeMatrix(game.b()));
}

}  // namespace eqlab
