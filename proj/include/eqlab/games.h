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

#ifndef EQLAB_GAMES_H_
#define EQLAB_GAMES_H_

#include <map>
#include <utility>
#include <vector>

#include "eqlab/matrix.h"
#include "eqlab/rational.h"

namespace eqlab {

// A probability distribution over one player's pure strategies.  Entries are
// nonnegative exact rationals summing to exactly 1.
class MixedStrategy {
 public:
  explicit MixedStrategy(std::vector<Rational> probabilities);
  static MixedStrategy Uniform(int n);
  static MixedStrategy PointMass(int n, int index);

  int size() const { return static_cast<int>(probabilities_.size()); }
  const Rational& operator[](int i) const { return probabilities_[i]; }
  const std::vector<Rational>& probabilities() const { return probabilities_; }

  std::vector<int> Support() const;

  friend bool operator==(const MixedStrategy& a, const MixedStrategy& b) {
    return a.probabilities_ == b.probabilities_;
  }

 private:
  std::vector<Rational> probabilities_;
};

// Two-player game in strategic form: A holds the row player's (Alice's)
// payoffs, B the column player's (Bob's), both m x n.
class BimatrixGame {
 public:
  BimatrixGame(Matrix a, Matrix b);

  const Matrix& a() const { return a_; }
  const Matrix& b() const { return b_; }
  int num_rows() const { return a_.rows(); }
  int num_cols() const { return a_.cols(); }

  // True when every entry of both payoff matrices lies in [-1, 1].  Additive
  // epsilons are only meaningful in these units.
  bool IsNormalized() const;

 private:
  Matrix a_;
  Matrix b_;
};

enum class Player { kRow = 0, kColumn = 1 };

// Explicit k-player game: per-player strategy counts and a total payoff
// tensor indexed by flattened pure-strategy profiles.
class NormalFormGame {
 public:
  // payoffs[player][flat profile index]; profiles are flattened with the last
  // player's strategy varying fastest.
  NormalFormGame(std::vector<int> strategy_counts,
                 std::vector<std::vector<Rational>> payoffs);

  static NormalFormGame FromBimatrix(const BimatrixGame& game);

  int num_players() const { return static_cast<int>(counts_.size()); }
  int num_strategies(int player) const { return counts_[player]; }
  const std::vector<int>& strategy_counts() const { return counts_; }
  long num_outcomes() const { return num_outcomes_; }

  long FlatIndex(const std::vector<int>& profile) const;
  std::vector<int> ProfileFromFlat(long flat) const;
  // Flat index of the profile with player's strategy replaced by `strategy`.
  long FlatWithStrategy(long flat, int player, int strategy) const;

  const Rational& Payoff(int player, long flat) const {
    return payoffs_[player][flat];
  }
  const Rational& Payoff(int player, const std::vector<int>& profile) const {
    return payoffs_[player][FlatIndex(profile)];
  }

  // Sum of all players' payoffs at an outcome (the welfare objective).
  Rational Welfare(long flat) const;

 private:
  std::vector<int> counts_;
  std::vector<long> strides_;
  long num_outcomes_;
  std::vector<std::vector<Rational>> payoffs_;
};

// A distribution over pure-strategy profiles of a k-player game; need not be
// a product distribution.
class JointDistribution {
 public:
  JointDistribution(std::vector<int> strategy_counts,
                    std::vector<Rational> probabilities);

  const std::vector<int>& strategy_counts() const { return counts_; }
  long num_outcomes() const { return static_cast<long>(probs_.size()); }
  const Rational& Probability(long flat) const { return probs_[flat]; }
  const std::vector<Rational>& probabilities() const { return probs_; }

 private:
  std::vector<int> counts_;
  std::vector<Rational> probs_;
};

struct VerificationQuery {
  Rational epsilon;  // additive tolerance, in normalized payoff units
};

struct EpsilonNEReport {
  bool holds = false;
  // Best-response value minus achieved value, per player; nonpositive slack
  // means the player cannot gain.
  Rational violation_row;
  Rational violation_column;
  // Set when epsilon > 0 was interpreted on a non-normalized game; payoff
  // units are then not the [-1,1] scale the tolerance assumes.
  bool epsilon_unit_warning = false;
};

struct SupportViolation {
  Player player;
  int strategy;
  Rational gap;  // best-response value minus this strategy's value
};

struct WellSupportedReport {
  bool holds = false;
  std::vector<SupportViolation> offending;
  bool epsilon_unit_warning = false;
};

// x^T A y or x^T B y depending on the player.
Rational ExpectedPayoff(const BimatrixGame& game, const MixedStrategy& x,
                        const MixedStrategy& y, Player player);

// Maximum expected payoff over the player's pure strategies against the
// opponent's mixed strategy; ties broken toward the lowest index.
std::pair<Rational, int> BestResponseValue(const BimatrixGame& game,
                                           Player player,
                                           const MixedStrategy& opponent);

// Checks the additive epsilon-equilibrium conditions exactly.
EpsilonNEReport VerifyEpsilonNE(const BimatrixGame& game,
                                const MixedStrategy& x, const MixedStrategy& y,
                                const VerificationQuery& query);

// Checks that every strategy played with positive probability is within
// epsilon of a best response.
WellSupportedReport VerifyWellSupported(const BimatrixGame& game,
                                        const MixedStrategy& x,
                                        const MixedStrategy& y,
                                        const VerificationQuery& query);

// Per-player affine rescale onto [-1, 1].  Positive scaling preserves each
// player's best-response argmax sets; a constant-payoff player is shifted
// to all-zero.
BimatrixGame NormalizePayoffs(const BimatrixGame& game);

}  // namespace eqlab

#endif  // EQLAB_GAMES_H_
