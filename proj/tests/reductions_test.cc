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

#include <doctest.h>

#include "eqlab/errors.h"
#include "eqlab/reductions.h"
#include "eqlab/support_enum.h"
#include "eqlab/zerosum.h"
#include "test_support.h"

namespace eqlab {
namespace {

TEST_CASE("piecewise linear evaluation") {
  const PiecewiseLinearFn one_minus_x({Rational(0), Rational(1)},
                                      {Rational(1), Rational(0)});
  CHECK(one_minus_x.Evaluate(Rational(1, 4)) == Rational(3, 4));
  CHECK(PiecewiseLinearFn::Identity().Evaluate(Rational(2, 7)) ==
        Rational(2, 7));
  CHECK(PiecewiseLinearFn::Constant(Rational(1, 3)).Evaluate(Rational(1)) ==
        Rational(1, 3));
  CHECK_THROWS_AS(one_minus_x.Evaluate(Rational(3, 2)), InputError);
  CHECK_THROWS_AS(PiecewiseLinearFn({Rational(0), Rational(1, 2)},
                                    {Rational(0), Rational(0)}),
                  InputError);
}

TEST_CASE("discretized hypercube") {
  const DiscretizedHypercube cube(2, Rational(1, 4));
  CHECK(cube.points_per_axis() == 5);
  CHECK(cube.num_points() == 25);
  CHECK(cube.PointAt(0) == std::vector<Rational>{Rational(0), Rational(0)});
  CHECK(cube.PointAt(24) == std::vector<Rational>{Rational(1), Rational(1)});
  // Non-divisor grids stop below 1.
  const DiscretizedHypercube coarse(1, Rational(2, 5));
  CHECK(coarse.points_per_axis() == 3);
  CHECK(coarse.GridValue(2) == Rational(4, 5));
  // Midpoint ties snap toward the lower coordinate.
  CHECK(cube.SnapToGrid(Rational(1, 8)) == Rational(0));
  CHECK(cube.SnapToGrid(Rational(3, 16)) == Rational(1, 4));
}

SeparableFunction OneMinusX() {
  return SeparableFunction({PiecewiseLinearFn(
      {Rational(0), Rational(1)}, {Rational(1), Rational(0)})});
}

TEST_CASE("imitation game payoffs") {
  const DiscretizedHypercube cube(1, Rational(1, 4));
  const MTGame mt = BuildMTGame(CubeMapFromSeparable(OneMinusX()), cube);
  CHECK(mt.game.num_rows() == 5);
  // Matching the opponent pays 1 exactly.
  for (int s = 0; s < 5; ++s) CHECK(mt.game.a().at(s, s) == Rational(1));
  // The column player earns 1 exactly at z = f(x).
  for (long x = 0; x < 5; ++x) {
    const Rational image = Rational(1) - cube.GridValue(x);
    for (long z = 0; z < 5; ++z) {
      const Rational expected =
          Rational(1) - (cube.GridValue(z) - image) * (cube.GridValue(z) - image);
      CHECK(mt.game.b().at(static_cast<int>(x), static_cast<int>(z)) ==
            expected);
      if (cube.GridValue(z) == image) {
        CHECK(mt.game.b().at(static_cast<int>(x), static_cast<int>(z)) ==
              Rational(1));
      }
    }
  }
}

TEST_CASE("every equilibrium of the imitation game is the fixed point") {
  // f(x) = 1 - x on the quarter grid: the unique fixed point is 1/2, at
  // grid index 2.  Exhaustive support enumeration of the 5x5 game.
  const DiscretizedHypercube cube(1, Rational(1, 4));
  const MTGame mt = BuildMTGame(CubeMapFromSeparable(OneMinusX()), cube);
  const std::vector<SupportPairEquilibrium> equilibria =
      EnumerateNashEquilibria(mt.game);
  REQUIRE(equilibria.size() == 1);
  CHECK(equilibria[0].x == MixedStrategy::PointMass(5, 2));
  CHECK(equilibria[0].y == MixedStrategy::PointMass(5, 2));

  // The same holds on the half grid.
  const DiscretizedHypercube half(1, Rational(1, 2));
  const MTGame mt_half = BuildMTGame(CubeMapFromSeparable(OneMinusX()), half);
  const std::vector<SupportPairEquilibrium> half_eq =
      EnumerateNashEquilibria(mt_half.game);
  REQUIRE(half_eq.size() == 1);
  CHECK(half_eq[0].x == MixedStrategy::PointMass(3, 1));
  CHECK(half_eq[0].y == MixedStrategy::PointMass(3, 1));
}

TEST_CASE("imitation payoffs depend only on the coordinate differences") {
  // Permuting the coordinates of both strategies identically leaves the
  // row player's payoff unchanged.
  const DiscretizedHypercube cube(2, Rational(1, 2));
  const SeparableFunction f(
      {PiecewiseLinearFn::Identity(), PiecewiseLinearFn::Identity()});
  const MTGame mt = BuildMTGame(CubeMapFromSeparable(f), cube);
  const long per_axis = cube.points_per_axis();
  auto swapped = [per_axis](long flat) {
    return (flat % per_axis) * per_axis + flat / per_axis;
  };
  for (long x = 0; x < cube.num_points(); ++x) {
    for (long z = 0; z < cube.num_points(); ++z) {
      CHECK(mt.game.a().at(static_cast<int>(x), static_cast<int>(z)) ==
            mt.game.a().at(static_cast<int>(swapped(x)),
                           static_cast<int>(swapped(z))));
    }
  }
}

TEST_CASE("fixed point extraction") {
  const DiscretizedHypercube cube(1, Rational(1, 4));
  const MTGame mt = BuildMTGame(CubeMapFromSeparable(OneMinusX()), cube);
  // The exact pure equilibrium at 1/2 extracts a zero-residual point.
  const MixedStrategy half = MixedStrategy::PointMass(5, 2);
  const ExtractedFixedPoint exact =
      ExtractFixedPoint(mt, half, half, Rational(0));
  CHECK(exact.point == std::vector<Rational>{Rational(1, 2)});
  CHECK(exact.residual_sq == Rational(0));

  // A nearby approximate profile extracts a measured (recorded) residual.
  const MixedStrategy blurred(
      {Rational(0), Rational(1, 4), Rational(1, 2), Rational(1, 4),
       Rational(0)});
  const ExtractedFixedPoint rough =
      ExtractFixedPoint(mt, blurred, half, Rational(1, 4));
  CHECK(rough.point == std::vector<Rational>{Rational(1, 2)});
  CHECK(rough.residual_sq == Rational(0));

  // Profiles that fail the epsilon check are rejected.
  CHECK_THROWS_AS(ExtractFixedPoint(mt, MixedStrategy::PointMass(5, 0),
                                    MixedStrategy::PointMass(5, 4),
                                    Rational(0)),
                  InputError);
}

TEST_CASE("coordinatewise game payoffs") {
  const DiscretizedHypercube cube(2, Rational(1, 2));
  const SeparableFunction f({PiecewiseLinearFn::Constant(Rational(1, 2)),
                             PiecewiseLinearFn::Constant(Rational(0))});
  const CoordinatewiseGame game = BuildCoordinatewiseGame(f, cube);
  CHECK(game.game.num_rows() == 6);  // 2 coordinates x 3 grid values
  // Zero payoff whenever the coordinates differ.
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 6; ++c) {
      const auto [ri, rv] = game.DecodeStrategy(r);
      const auto [ci, cv] = game.DecodeStrategy(c);
      if (ri != ci) {
        CHECK(game.game.a().at(r, c) == Rational(0));
        CHECK(game.game.b().at(r, c) == Rational(0));
      }
    }
  }

  // Intended equilibrium: both uniform over coordinates, values at the
  // fixed point (1/2, 0) of f.
  std::vector<Rational> x(6, Rational(0));
  x[game.StrategyIndex(0, 1)] = Rational(1, 2);  // (coord 0, value 1/2)
  x[game.StrategyIndex(1, 0)] = Rational(1, 2);  // (coord 1, value 0)
  const MixedStrategy intended(x);
  CHECK(VerifyEpsilonNE(game.game, intended, intended, {Rational(0)}).holds);

  // Unintended pure equilibrium: meet at coordinate 0 with the coordinate
  // fixed point.
  const MixedStrategy pure =
      MixedStrategy::PointMass(6, game.StrategyIndex(0, 1));
  CHECK(VerifyEpsilonNE(game.game, pure, pure, {Rational(0)}).holds);
}

TEST_CASE("the printed 4x6 membership matrix") {
  const AlthoferGame game = BuildAlthofer(4);
  const Matrix expected{
      {Rational(1), Rational(1), Rational(1), Rational(-1), Rational(-1),
       Rational(-1)},
      {Rational(1), Rational(-1), Rational(-1), Rational(-1), Rational(1),
       Rational(1)},
      {Rational(-1), Rational(1), Rational(-1), Rational(1), Rational(-1),
       Rational(1)},
      {Rational(-1), Rational(-1), Rational(1), Rational(1), Rational(1),
       Rational(-1)}};
  CHECK(game.game.a() == expected);
  CHECK_THROWS_AS(BuildAlthofer(3), InputError);
  CHECK_THROWS_AS(BuildAlthofer(0), InputError);

  const AlthoferGame small = BuildAlthofer(2);
  CHECK(small.game.a() ==
        Matrix{{Rational(1), Rational(-1)}, {Rational(-1), Rational(1)}});
}

TEST_CASE("membership games have value zero") {
  for (const int k : {2, 4, 6}) {
    const AlthoferGame game = BuildAlthofer(k);
    const ZeroSumSolution solution = SolveMinimax(game.game);
    CHECK(solution.value == Rational(0));
    // Uniform play guarantees 0 for the row player.
    const std::vector<Rational> guarantees = game.game.a().LeftMultiplyVector(
        MixedStrategy::Uniform(k).probabilities());
    for (const Rational& g : guarantees) CHECK(g == Rational(0));
  }
}

TEST_CASE("punishment dominates the distance from uniform") {
  const MixedStrategy uniform = MixedStrategy::Uniform(4);
  const PunishmentReport at_uniform = AlthoferPunishment(uniform);
  CHECK(at_uniform.best_response_payoff == Rational(0));
  CHECK(at_uniform.tv_from_uniform == Rational(0));

  const PunishmentReport lopsided = AlthoferPunishment(
      MixedStrategy({Rational(1), Rational(0), Rational(0), Rational(0)}));
  CHECK(lopsided.best_response_payoff == Rational(1));
  CHECK(lopsided.tv_from_uniform == Rational(3, 4));

  SplitMix64 rng(59);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Rational> p(4, Rational(0));
    long left = 16;
    for (int i = 0; i < 3; ++i) {
      const long take = static_cast<long>(rng.NextBelow(left + 1));
      p[i] = Rational(take, 16);
      left -= take;
    }
    p[3] = Rational(left, 16);
    const PunishmentReport report = AlthoferPunishment(MixedStrategy(p));
    CHECK(report.best_response_payoff >= report.tv_from_uniform);
  }
}

TEST_CASE("glued game reconstruction and equilibrium marginals") {
  const DiscretizedHypercube cube(2, Rational(1, 2));
  const SeparableFunction f({PiecewiseLinearFn::Constant(Rational(1, 2)),
                             PiecewiseLinearFn::Constant(Rational(0))});
  const GluedGame glued = BuildGluedGame(f, cube);
  CHECK(glued.num_strategies_per_player() == 12);

  // Pointwise reconstruction from the stated convex combination.
  const Rational w1(1, 100), w23(99, 200);
  for (int r = 0; r < 12; ++r) {
    for (int c = 0; c < 12; ++c) {
      const GluedGame::ComponentPayoffs parts = glued.Components(r, c);
      CHECK(glued.game.a().at(r, c) ==
            w1 * parts.g1_row + w23 * parts.g2_row + w23 * parts.g3_row);
      CHECK(glued.game.b().at(r, c) ==
            w1 * parts.g1_col - w23 * parts.g2_row - w23 * parts.g3_row);
    }
  }

  // Exact equilibria found by bounded support enumeration mix uniformly
  // over the coordinate index, and the grid values sit at the constants.
  SupportEnumerationOptions options;
  options.max_support_size = 2;
  const std::vector<SupportPairEquilibrium> equilibria =
      EnumerateNashEquilibria(glued.game, options);
  CHECK(!equilibria.empty());
  for (const SupportPairEquilibrium& ne : equilibria) {
    Rational row_first_coord, col_first_coord;
    for (int s = 0; s < 12; ++s) {
      const GluedGame::Strategy decoded = glued.DecodeStrategy(s);
      if (ne.x[s].Sign() > 0) {
        if (decoded.coordinate == 0) row_first_coord += ne.x[s];
        CHECK(cube.GridValue(decoded.grid_step) ==
              (decoded.coordinate == 0 ? Rational(1, 2) : Rational(0)));
      }
      if (ne.y[s].Sign() > 0) {
        if (decoded.coordinate == 0) col_first_coord += ne.y[s];
      }
    }
    CHECK(row_first_coord == Rational(1, 2));
    CHECK(col_first_coord == Rational(1, 2));
  }

  CHECK_THROWS_AS(BuildGluedGame(SeparableFunction({PiecewiseLinearFn::Identity()}),
                                 DiscretizedHypercube(1, Rational(1, 2))),
                  InputError);
}

}  // namespace
}  // namespace eqlab
