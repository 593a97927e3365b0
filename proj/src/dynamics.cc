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

#include "eqlab/dynamics.h"

#include <mpfr.h>

#include <algorithm>

#include "eqlab/errors.h"
#include "eqlab/rng.h"

namespace eqlab {

namespace {

constexpr mpfr_prec_t kWorkingPrecision = 192;  // 64 guard bits past 2^-128

// Converts a correctly-rounded mpfr value in [0, 1] to the nearest multiple
// of 2^-64, as an exact integer numerator.
mpz_class SnapToGrid64(const mpfr_t value) {
  mpfr_t scaled;
  mpfr_init2(scaled, kWorkingPrecision);
  mpfr_mul_2ui(scaled, value, 64, MPFR_RNDN);
  mpz_class numerator;
  mpfr_get_z(numerator.get_mpz_t(), scaled, MPFR_RNDN);
  mpfr_clear(scaled);
  return numerator;
}

Rational RationalOverTwoTo64(const mpz_class& numerator) {
  mpq_class q(numerator, mpz_class(1) << 64);
  q.canonicalize();
  return Rational(q);
}

}  // namespace

std::vector<Rational> SoftmaxProbabilities(
    const std::vector<Rational>& exponents) {
  const int n = static_cast<int>(exponents.size());
  EQLAB_CHECK(n >= 1);

  // Shift by the maximum exponent (exact rational subtraction) so every
  // weight lies in (0, 1].
  const Rational max_exponent =
      *std::max_element(exponents.begin(), exponents.end());
  // Equal exponents have an exactly uniform softmax; skipping the snap keeps
  // symmetric runs exactly symmetric.
  if (std::all_of(exponents.begin(), exponents.end(),
                  [&](const Rational& e) { return e == max_exponent; })) {
    return std::vector<Rational>(n, Rational(1, n));
  }

  std::vector<mpz_class> grid(n);
  mpfr_t total, prob;
  mpfr_init2(total, kWorkingPrecision);
  mpfr_init2(prob, kWorkingPrecision);
  mpfr_set_zero(total, 1);

  auto weights = new mpfr_t[n];
  for (int i = 0; i < n; ++i) {
    mpfr_init2(weights[i], kWorkingPrecision);
    const Rational shifted = exponents[i] - max_exponent;
    mpfr_set_q(weights[i], shifted.value().get_mpq_t(), MPFR_RNDN);
    mpfr_exp(weights[i], weights[i], MPFR_RNDN);
    mpfr_add(total, total, weights[i], MPFR_RNDN);
  }
  for (int i = 0; i < n; ++i) {
    mpfr_div(prob, weights[i], total, MPFR_RNDN);
    grid[i] = SnapToGrid64(prob);
    if (grid[i] == 0) grid[i] = 1;  // keep every weight strictly positive
    mpfr_clear(weights[i]);
  }
  delete[] weights;
  mpfr_clear(total);
  mpfr_clear(prob);

  // Repair the sum to exactly 2^64 by adjusting the largest entry (lowest
  // index on ties); the adjustment is at most n+1 grid units.
  mpz_class sum = 0;
  for (const mpz_class& g : grid) sum += g;
  const mpz_class target = mpz_class(1) << 64;
  int largest = 0;
  for (int i = 1; i < n; ++i) {
    if (grid[i] > grid[largest]) largest = i;
  }
  grid[largest] += target - sum;
  EQLAB_CHECK(grid[largest] > 0);

  std::vector<Rational> probabilities(n);
  for (int i = 0; i < n; ++i) {
    probabilities[i] = RationalOverTwoTo64(grid[i]);
  }
  return probabilities;
}

LearnerState::LearnerState(int num_actions)
    : tallies_(num_actions, Rational(0)),
      cumulative_(num_actions, Rational(0)) {
  if (num_actions < 1) throw InputError("learner needs at least one action");
}

const std::vector<Rational>& LearnerState::Probabilities() const {
  if (!probabilities_cache_.has_value()) {
    probabilities_cache_ = SoftmaxProbabilities(tallies_);
  }
  return *probabilities_cache_;
}

LearnerState EwUpdate(LearnerState state, const RewardVector& rewards,
                      const Rational& eta,
                      const std::optional<std::pair<int, Rational>>& realized) {
  if (static_cast<int>(rewards.rewards.size()) != state.num_actions()) {
    throw InputError("reward vector length mismatch");
  }
  if (eta.Sign() < 0) throw InputError("negative learning rate");
  for (const Rational& r : rewards.rewards) {
    if (r > Rational(1) || r < Rational(-1)) {
      throw InputError("reward outside [-1, 1]");
    }
  }
  LearnerState::HistoryEntry entry;
  if (realized.has_value()) {
    entry.action = realized->first;
    entry.reward = realized->second;
  } else {
    entry.action = -1;
    const std::vector<Rational>& p = state.Probabilities();
    for (int a = 0; a < state.num_actions(); ++a) {
      entry.reward += p[a] * rewards.rewards[a];
    }
  }
  for (int a = 0; a < state.num_actions(); ++a) {
    if (eta.Sign() != 0 && rewards.rewards[a].Sign() != 0) {
      state.tallies_[a] += eta * rewards.rewards[a];
    }
    state.cumulative_[a] += rewards.rewards[a];
  }
  state.history_.push_back(std::move(entry));
  state.step_ += 1;
  state.probabilities_cache_.reset();
  return state;
}

namespace {
Rational BestFixedActionAverage(const std::vector<RewardVector>& rewards) {
  const int t = static_cast<int>(rewards.size());
  const int n = static_cast<int>(rewards[0].rewards.size());
  std::vector<Rational> totals(n);
  for (const RewardVector& r : rewards) {
    if (static_cast<int>(r.rewards.size()) != n) {
      throw InputError("ragged reward history");
    }
    for (int a = 0; a < n; ++a) totals[a] += r.rewards[a];
  }
  return *std::max_element(totals.begin(), totals.end()) / Rational(t);
}
}  // namespace

Rational RegretOf(const std::vector<RewardVector>& rewards,
                  const std::vector<int>& actions) {
  if (rewards.empty()) throw InputError("regret of empty history");
  if (rewards.size() != actions.size()) {
    throw InputError("reward and action histories differ in length");
  }
  Rational earned;
  for (size_t t = 0; t < rewards.size(); ++t) {
    earned += rewards[t].rewards.at(actions[t]);
  }
  return BestFixedActionAverage(rewards) -
         earned / Rational(static_cast<int>(rewards.size()));
}

Rational RegretOfMixed(const std::vector<RewardVector>& rewards,
                       const std::vector<std::vector<Rational>>& strategies) {
  if (rewards.empty()) throw InputError("regret of empty history");
  if (rewards.size() != strategies.size()) {
    throw InputError("reward and strategy histories differ in length");
  }
  Rational earned;
  for (size_t t = 0; t < rewards.size(); ++t) {
    const std::vector<Rational>& p = strategies[t];
    if (p.size() != rewards[t].rewards.size()) {
      throw InputError("strategy and reward length mismatch");
    }
    for (size_t a = 0; a < p.size(); ++a) {
      if (p[a].Sign() != 0) earned += p[a] * rewards[t].rewards[a];
    }
  }
  return BestFixedActionAverage(rewards) -
         earned / Rational(static_cast<int>(rewards.size()));
}

Rational EtaAt(const DynamicsConfig& config, int t, int num_actions) {
  EQLAB_CHECK(t >= 1);
  mpfr_t value;
  mpfr_init2(value, kWorkingPrecision);
  if (config.schedule == EtaSchedule::kSqrtT) {
    mpfr_sqrt_ui(value, static_cast<unsigned long>(t), MPFR_RNDN);
    mpfr_t scale;
    mpfr_init2(scale, kWorkingPrecision);
    mpfr_set_q(scale, config.eta_scale.value().get_mpq_t(), MPFR_RNDN);
    mpfr_mul(value, value, scale, MPFR_RNDN);
    mpfr_clear(scale);
  } else {
    // sqrt((8 ln n) / t)
    EQLAB_CHECK(num_actions >= 1);
    mpfr_set_ui(value, static_cast<unsigned long>(num_actions), MPFR_RNDN);
    mpfr_log(value, value, MPFR_RNDN);
    mpfr_mul_ui(value, value, 8, MPFR_RNDN);
    mpfr_div_ui(value, value, static_cast<unsigned long>(t), MPFR_RNDN);
    mpfr_sqrt(value, value, MPFR_RNDN);
  }
  if (mpfr_sgn(value) < 0) mpfr_set_zero(value, 1);
  const mpz_class numerator = SnapToGrid64(value);
  mpfr_clear(value);
  return RationalOverTwoTo64(numerator);
}

namespace {

std::vector<Rational> PointMassVector(int n, int index) {
  std::vector<Rational> p(n, Rational(0));
  p[index] = Rational(1);
  return p;
}

// Column j of A as a reward vector over the row player's actions, and the
// analogous row payoffs for the column player.
std::vector<Rational> RowRewardAgainst(const Matrix& a,
                                       const std::vector<Rational>& y) {
  return a.MultiplyVector(y);
}
std::vector<Rational> ColRewardAgainst(const Matrix& b,
                                       const std::vector<Rational>& x) {
  return b.LeftMultiplyVector(x);
}

int ArgmaxLowest(const std::vector<Rational>& values) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(values.size()); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

}  // namespace

Trace FictitiousPlayRun(const BimatrixGame& game, int num_steps,
                        const DynamicsConfig& config) {
  if (num_steps < 1) throw InputError("fictitious play needs at least 1 step");
  const int m = game.num_rows(), n = game.num_cols();
  std::vector<Rational> row_counts(m, Rational(0));
  std::vector<Rational> col_counts(n, Rational(0));

  Trace trace;
  trace.seed = config.seed;
  trace.steps.reserve(num_steps);
  for (int t = 1; t <= num_steps; ++t) {
    int i = 0, j = 0;  // step 1: the default lowest-index pure strategy
    if (t > 1) {
      const Rational steps_so_far(t - 1);
      std::vector<Rational> y_hat(n), x_hat(m);
      for (int c = 0; c < n; ++c) y_hat[c] = col_counts[c] / steps_so_far;
      for (int r = 0; r < m; ++r) x_hat[r] = row_counts[r] / steps_so_far;
      i = ArgmaxLowest(game.a().MultiplyVector(y_hat));
      j = ArgmaxLowest(game.b().LeftMultiplyVector(x_hat));
    }
    row_counts[i] += Rational(1);
    col_counts[j] += Rational(1);

    TraceStep step;
    step.x = PointMassVector(m, i);
    step.y = PointMassVector(n, j);
    step.realized_row = i;
    step.realized_col = j;
    step.payoff_row = game.a().at(i, j);
    step.payoff_col = game.b().at(i, j);
    step.reward_row = RowRewardAgainst(game.a(), step.y);
    step.reward_col = ColRewardAgainst(game.b(), step.x);
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

Trace SmoothFpRun(const BimatrixGame& game, int num_steps,
                  const DynamicsConfig& config) {
  if (num_steps < 1) throw InputError("smooth FP needs at least 1 step");
  if (!game.IsNormalized()) {
    throw InputError("smooth fictitious play requires a normalized game");
  }
  const int m = game.num_rows(), n = game.num_cols();

  SplitMix64 root(config.seed);
  SplitMix64 row_rng = root.Split();
  SplitMix64 col_rng = root.Split();

  // Sums of the opponent-visible strategies (mixed, or sampled point
  // masses); divided by t-1 they are the empirical distributions.
  std::vector<Rational> row_sum(m, Rational(0));
  std::vector<Rational> col_sum(n, Rational(0));

  Trace trace;
  trace.seed = config.seed;
  trace.steps.reserve(num_steps);
  for (int t = 1; t <= num_steps; ++t) {
    std::vector<Rational> x, y;
    if (t == 1) {
      x.assign(m, Rational(1, m));
      y.assign(n, Rational(1, n));
    } else {
      const Rational steps_so_far(t - 1);
      const Rational eta = EtaAt(config, t, std::max(m, n));
      std::vector<Rational> y_hat(n), x_hat(m);
      for (int c = 0; c < n; ++c) y_hat[c] = col_sum[c] / steps_so_far;
      for (int r = 0; r < m; ++r) x_hat[r] = row_sum[r] / steps_so_far;
      std::vector<Rational> pi_row = game.a().MultiplyVector(y_hat);
      std::vector<Rational> pi_col = game.b().LeftMultiplyVector(x_hat);
      for (Rational& v : pi_row) v *= eta;
      for (Rational& v : pi_col) v *= eta;
      x = SoftmaxProbabilities(pi_row);
      y = SoftmaxProbabilities(pi_col);
    }

    TraceStep step;
    step.x = x;
    step.y = y;
    step.payoff_row = BilinearForm(x, game.a(), y);
    step.payoff_col = BilinearForm(x, game.b(), y);

    if (config.feedback == FeedbackMode::kSampled) {
      step.realized_row = SampleIndex(x, &row_rng);
      step.realized_col = SampleIndex(y, &col_rng);
      const std::vector<Rational> x_seen =
          PointMassVector(m, step.realized_row);
      const std::vector<Rational> y_seen =
          PointMassVector(n, step.realized_col);
      for (int r = 0; r < m; ++r) row_sum[r] += x_seen[r];
      for (int c = 0; c < n; ++c) col_sum[c] += y_seen[c];
      step.reward_row = RowRewardAgainst(game.a(), y_seen);
      step.reward_col = ColRewardAgainst(game.b(), x_seen);
    } else {
      for (int r = 0; r < m; ++r) row_sum[r] += x[r];
      for (int c = 0; c < n; ++c) col_sum[c] += y[c];
      step.reward_row = RowRewardAgainst(game.a(), y);
      step.reward_col = ColRewardAgainst(game.b(), x);
    }
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

namespace {
MixedStrategy AverageStrategies(const std::vector<TraceStep>& steps,
                                bool row_player) {
  EQLAB_CHECK(!steps.empty());
  const std::vector<Rational>& first = row_player ? steps[0].x : steps[0].y;
  std::vector<Rational> sum(first.size(), Rational(0));
  for (const TraceStep& s : steps) {
    const std::vector<Rational>& v = row_player ? s.x : s.y;
    for (size_t i = 0; i < sum.size(); ++i) sum[i] += v[i];
  }
  const Rational t(static_cast<int>(steps.size()));
  for (Rational& v : sum) v /= t;
  return MixedStrategy(std::move(sum));
}
}  // namespace

MixedStrategy Trace::TimeAveragedRow() const {
  return AverageStrategies(steps, true);
}
MixedStrategy Trace::TimeAveragedCol() const {
  return AverageStrategies(steps, false);
}

std::vector<RewardVector> Trace::RowRewards() const {
  std::vector<RewardVector> rewards;
  rewards.reserve(steps.size());
  for (const TraceStep& s : steps) rewards.push_back({s.reward_row});
  return rewards;
}

std::vector<RewardVector> Trace::ColRewards() const {
  std::vector<RewardVector> rewards;
  rewards.reserve(steps.size());
  for (const TraceStep& s : steps) rewards.push_back({s.reward_col});
  return rewards;
}

Rational Trace::RowRegret() const {
  std::vector<std::vector<Rational>> strategies;
  strategies.reserve(steps.size());
  for (const TraceStep& s : steps) strategies.push_back(s.x);
  return RegretOfMixed(RowRewards(), strategies);
}

Rational Trace::ColRegret() const {
  std::vector<std::vector<Rational>> strategies;
  strategies.reserve(steps.size());
  for (const TraceStep& s : steps) strategies.push_back(s.y);
  return RegretOfMixed(ColRewards(), strategies);
}

JointDistribution CceFromTrace(const Trace& trace) {
  if (trace.steps.empty()) throw InputError("empty trace");
  const int m = static_cast<int>(trace.steps[0].x.size());
  const int n = static_cast<int>(trace.steps[0].y.size());
  std::vector<Rational> joint(m * n, Rational(0));
  for (const TraceStep& s : trace.steps) {
    for (int i = 0; i < m; ++i) {
      if (s.x[i].Sign() == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (s.y[j].Sign() == 0) continue;
        joint[i * n + j] += s.x[i] * s.y[j];
      }
    }
  }
  const Rational t(trace.length());
  for (Rational& p : joint) p /= t;
  return JointDistribution({m, n}, std::move(joint));
}

}  // namespace eqlab
