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

#ifndef EQLAB_DYNAMICS_H_
#define EQLAB_DYNAMICS_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "eqlab/games.h"
#include "eqlab/rational.h"

namespace eqlab {

// Exponentials of rationals are irrational, so probabilities proportional to
// exp(exponent_i) cannot be exact.  This helper evaluates the softmax at 192
// bits (64 guard bits beyond the output grid), then snaps to exact rationals
// with denominator 2^64 that are all positive and sum to exactly 1.  The snap
// is deterministic; the distance to the true softmax is below n * 2^-63.
std::vector<Rational> SoftmaxProbabilities(
    const std::vector<Rational>& exponents);

// Adversarial reward vector for one step; entries in [-1, 1].
struct RewardVector {
  std::vector<Rational> rewards;
};

// State of one Exponential Weights learner.  Weights are kept as exact
// exponent tallies (action a holds sum_t eta^t r^t(a)); the induced
// distribution is materialized through SoftmaxProbabilities.
class LearnerState {
 public:
  explicit LearnerState(int num_actions);

  int num_actions() const { return static_cast<int>(tallies_.size()); }
  int step() const { return step_; }  // t >= 1; history has t-1 entries

  const std::vector<Rational>& exponent_tallies() const { return tallies_; }
  const std::vector<Rational>& cumulative_rewards() const {
    return cumulative_;
  }

  // Current distribution p^t = w^t / Gamma^t, snapped; entries positive and
  // summing to exactly 1.  Cached until the next update, so concurrent
  // first calls on one state need external synchronization; distinct states
  // are independent.
  const std::vector<Rational>& Probabilities() const;
  // Snapped weights themselves (the normalized representation of w^t).
  const std::vector<Rational>& Weights() const { return Probabilities(); }

  struct HistoryEntry {
    int action;       // realized action, or -1 when play was a full mixture
    Rational reward;  // realized reward, or the expected reward of p^t
  };
  const std::vector<HistoryEntry>& history() const { return history_; }

 private:
  friend LearnerState EwUpdate(LearnerState, const RewardVector&,
                               const Rational&,
                               const std::optional<std::pair<int, Rational>>&);
  std::vector<Rational> tallies_;
  std::vector<Rational> cumulative_;
  std::vector<HistoryEntry> history_;
  int step_ = 1;
  mutable std::optional<std::vector<Rational>> probabilities_cache_;
};

// One Exponential Weights step: w^{t+1}(a) = w^t(a) * e^{eta r^t(a)},
// maintained as the exact tally update.  Takes the state by value, so
// moved-in states update in place.  `realized` records the sampled action
// and its reward when the caller plays by sampling; otherwise the history
// records the expected reward of the pre-update distribution.
LearnerState EwUpdate(
    LearnerState state, const RewardVector& rewards, const Rational& eta,
    const std::optional<std::pair<int, Rational>>& realized = std::nullopt);

// Time-averaged regret of a pure action sequence against reward vectors:
// best fixed action's average reward minus the sequence's average reward.
Rational RegretOf(const std::vector<RewardVector>& rewards,
                  const std::vector<int>& actions);
// Same with mixed play; the algorithm's per-step reward is the expectation
// under its distribution.
Rational RegretOfMixed(const std::vector<RewardVector>& rewards,
                       const std::vector<std::vector<Rational>>& strategies);

enum class EtaSchedule {
  kSqrtT,      // eta^t = c * sqrt(t); smooth FP's averaged-payoff form
  kAnytimeEw,  // eta^t = sqrt((8 ln n) / t); per-step EW form
};

enum class FeedbackMode { kExactMixed, kSampled };

struct DynamicsConfig {
  EtaSchedule schedule = EtaSchedule::kSqrtT;
  Rational eta_scale = Rational(1);  // the c in eta^t = c * sqrt(t)
  FeedbackMode feedback = FeedbackMode::kExactMixed;
  uint64_t seed = 0;
  // Ties everywhere break toward the lowest strategy index.
};

// Schedule value eta^t >= 0, snapped to denominator 2^64 so downstream exact
// arithmetic stays bounded.  num_actions only matters for kAnytimeEw.
Rational EtaAt(const DynamicsConfig& config, int t, int num_actions);

struct TraceStep {
  std::vector<Rational> x;  // row player's mixed strategy this step
  std::vector<Rational> y;
  int realized_row = -1;  // sampled/pure actions; -1 in exact-mixed smooth FP
  int realized_col = -1;
  Rational payoff_row;  // expected payoffs x^T A y, x^T B y
  Rational payoff_col;
  std::vector<Rational> reward_row;  // reward vector fed to each learner
  std::vector<Rational> reward_col;
};

struct Trace {
  std::vector<TraceStep> steps;
  uint64_t seed = 0;

  int length() const { return static_cast<int>(steps.size()); }
  // Exact arithmetic means of the recorded strategies.
  MixedStrategy TimeAveragedRow() const;
  MixedStrategy TimeAveragedCol() const;
  // Reward histories per player, for regret accounting.
  std::vector<RewardVector> RowRewards() const;
  std::vector<RewardVector> ColRewards() const;
  // Time-averaged regret of each player against their reward history.
  Rational RowRegret() const;
  Rational ColRegret() const;
};

// Fictitious play: each player best-responds to the opponent's empirical
// distribution of past play; step 1 plays the lowest-index pure strategy.
Trace FictitiousPlayRun(const BimatrixGame& game, int num_steps,
                        const DynamicsConfig& config);

// Smooth fictitious play: each player plays strategy i with probability
// proportional to exp(eta^t pi^t_i), where pi^t_i is the expected payoff of i
// against the opponent's empirical past play; step 1 is uniform.  Requires a
// normalized game.  In sampled mode, realized pure strategies are drawn with
// the seeded generator and the empirical distributions use the samples.
Trace SmoothFpRun(const BimatrixGame& game, int num_steps,
                  const DynamicsConfig& config);

// The time-averaged history of play (1/T) sum_t x^t (x) y^t, materialized as
// a joint distribution over profiles.
JointDistribution CceFromTrace(const Trace& trace);

}  // namespace eqlab

#endif  // EQLAB_DYNAMICS_H_
