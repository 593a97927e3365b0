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

#ifndef EQLAB_REDUCTIONS_H_
#define EQLAB_REDUCTIONS_H_

#include <functional>
#include <utility>
#include <vector>

#include "eqlab/games.h"
#include "eqlab/zerosum.h"

namespace eqlab {

// Piecewise-linear function [0,1] -> [0,1] given by breakpoints and values;
// exact rational interpolation between breakpoints.
class PiecewiseLinearFn {
 public:
  PiecewiseLinearFn(std::vector<Rational> breakpoints,
                    std::vector<Rational> values);
  static PiecewiseLinearFn Identity();
  static PiecewiseLinearFn Constant(Rational c);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& values() const { return values_; }
  Rational Evaluate(const Rational& x) const;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<Rational> values_;
};

// Coordinatewise map f(x_1..x_d) = (f_1(x_1), .., f_d(x_d)); the separable
// structure is what makes the coordinatewise and glued games well defined.
class SeparableFunction {
 public:
  explicit SeparableFunction(std::vector<PiecewiseLinearFn> coordinates);

  int dimension() const { return static_cast<int>(coords_.size()); }
  const PiecewiseLinearFn& coordinate(int i) const { return coords_[i]; }
  Rational EvaluateCoordinate(int i, const Rational& x) const;
  std::vector<Rational> Evaluate(const std::vector<Rational>& x) const;

 private:
  std::vector<PiecewiseLinearFn> coords_;
};

// The grid H_eps: points of [0,1]^d whose coordinates are multiples of eps.
class DiscretizedHypercube {
 public:
  DiscretizedHypercube(int dimension, Rational epsilon);

  int dimension() const { return dimension_; }
  const Rational& epsilon() const { return epsilon_; }
  long points_per_axis() const { return points_per_axis_; }
  long num_points() const { return num_points_; }

  Rational GridValue(long step) const;  // step * eps, 0 <= step < per-axis
  std::vector<Rational> PointAt(long flat) const;
  // Nearest grid value to an arbitrary rational in [0,1]; exact-midpoint
  // ties snap toward the lower coordinate.
  Rational SnapToGrid(const Rational& x) const;

 private:
  int dimension_;
  Rational epsilon_;
  long points_per_axis_;
  long num_points_;
};

using CubeMap =
    std::function<std::vector<Rational>(const std::vector<Rational>&)>;

CubeMap CubeMapFromSeparable(const SeparableFunction& f);

// Imitation game on the discretized hypercube: both players' pure strategies
// are grid points; at (x, z) the row player earns 1 - ||x-z||^2 and the
// column player 1 - ||z-f(x)||^2 under the normalized l2 norm.  Exact Nash
// equilibria are precisely the pure profiles x = z = f(x).
struct MTGame {
  BimatrixGame game;
  DiscretizedHypercube cube;
  CubeMap function;  // provenance: the reduced fixed-point instance
};

MTGame BuildMTGame(const CubeMap& f, const DiscretizedHypercube& cube,
                   long max_profiles = 4'000'000);

struct ExtractedFixedPoint {
  std::vector<Rational> point;       // expectation of the row strategy,
                                     // snapped to the grid
  Rational residual_sq;              // ||f(p) - p||^2, normalized l2, exact
};

// Reads an approximate fixed point off an approximate equilibrium of the
// imitation game.  The profile must pass the epsilon check on the game.
ExtractedFixedPoint ExtractFixedPoint(const MTGame& mt, const MixedStrategy& x,
                                      const MixedStrategy& y,
                                      const Rational& epsilon);

// Coordinatewise play: a pure strategy is a pair (coordinate index, grid
// value); payoffs are zero unless the indices agree.
struct CoordinatewiseGame {
  BimatrixGame game;
  int dimension;
  long values_per_axis;

  int StrategyIndex(int coordinate, long grid_step) const;
  std::pair<int, long> DecodeStrategy(int strategy) const;
};

CoordinatewiseGame BuildCoordinatewiseGame(const SeparableFunction& f,
                                           const DiscretizedHypercube& cube);

// The k x (k choose k/2) membership-sign game: the row player picks an index
// i, the column player a set S of size k/2, and the row payoff is +1 exactly
// when i is in S.  Columns pair each set with its complement: sets
// containing the first element in lexicographic order, then their
// complements in the same order.
struct AlthoferGame {
  int k;
  ZeroSumGame game;
  std::vector<std::vector<int>> column_sets;
};

AlthoferGame BuildAlthofer(int k);

struct PunishmentReport {
  Rational best_response_payoff;  // the set player's best response value
  Rational tv_from_uniform;       // total variation distance of p to uniform
  int best_set_index = 0;         // column index realizing the best response
};

// The set player's best response against an index distribution p (sort by
// probability ascending, ties by index, punish the bottom half) and the
// distance of p from uniform; best response payoff >= TV always.
PunishmentReport AlthoferPunishment(const MixedStrategy& p);

// Weighted gluing of the coordinatewise game with two Althofer gadgets:
// payoff = (1/100) G1 + (99/200) G2 + (99/200) G3, where G2 is d x C(d,d/2)
// with the row player choosing the index, and G3 is its role-reversed twin.
// A row strategy is (i, x_i, T); a column strategy is (j, y_j, S).
struct GluedGame {
  BimatrixGame game;
  CoordinatewiseGame coordinatewise;
  AlthoferGame althofer;  // shared shape for G2 and G3
  int dimension;
  long values_per_axis;

  struct Strategy {
    int coordinate;
    long grid_step;
    int set_index;
  };
  int StrategyIndex(const Strategy& s) const;
  Strategy DecodeStrategy(int strategy) const;
  int num_strategies_per_player() const;

  // Component payoffs at a pure profile, for reconstruction checks:
  // {G1 row, G1 col, G2 row, G3 row} (G2/G3 are zero-sum).
  struct ComponentPayoffs {
    Rational g1_row, g1_col, g2_row, g3_row;
  };
  ComponentPayoffs Components(int row_strategy, int col_strategy) const;
};

GluedGame BuildGluedGame(const SeparableFunction& f,
                         const DiscretizedHypercube& cube,
                         long max_profiles = 4'000'000);

}  // namespace eqlab

#endif  // EQLAB_REDUCTIONS_H_
