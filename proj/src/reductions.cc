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

#include "eqlab/reductions.h"

#include <algorithm>

#include "eqlab/errors.h"

namespace eqlab {

PiecewiseLinearFn::PiecewiseLinearFn(std::vector<Rational> breakpoints,
                                     std::vector<Rational> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.size() < 2 || breakpoints_.size() != values_.size()) {
    throw InputError("piecewise-linear table needs matching breakpoints");
  }
  if (breakpoints_.front() != Rational(0) || breakpoints_.back() != Rational(1)) {
    throw InputError("piecewise-linear domain must span [0,1]");
  }
  for (size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1] < breakpoints_[i])) {
      throw InputError("breakpoints must be strictly increasing");
    }
  }
  for (const Rational& v : values_) {
    if (v.Sign() < 0 || v > Rational(1)) {
      throw InputError("piecewise-linear values must lie in [0,1]");
    }
  }
}

PiecewiseLinearFn PiecewiseLinearFn::Identity() {
  return PiecewiseLinearFn({Rational(0), Rational(1)},
                           {Rational(0), Rational(1)});
}

PiecewiseLinearFn PiecewiseLinearFn::Constant(Rational c) {
  Rational c2 = c;
  return PiecewiseLinearFn({Rational(0), Rational(1)},
                           {std::move(c), std::move(c2)});
}

Rational PiecewiseLinearFn::Evaluate(const Rational& x) const {
  if (x.Sign() < 0 || x > Rational(1)) {
    throw InputError("piecewise-linear argument outside [0,1]");
  }
  size_t hi = 1;
  while (breakpoints_[hi] < x) ++hi;
  const Rational& x0 = breakpoints_[hi - 1];
  const Rational& x1 = breakpoints_[hi];
  const Rational& y0 = values_[hi - 1];
  const Rational& y1 = values_[hi];
  return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
}

SeparableFunction::SeparableFunction(std::vector<PiecewiseLinearFn> coordinates)
    : coords_(std::move(coordinates)) {
  if (coords_.empty()) throw InputError("separable function needs d >= 1");
}

Rational SeparableFunction::EvaluateCoordinate(int i, const Rational& x) const {
  EQLAB_CHECK(i >= 0 && i < dimension());
  return coords_[i].Evaluate(x);
}

std::vector<Rational> SeparableFunction::Evaluate(
    const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != dimension()) {
    throw InputError("argument dimension mismatch");
  }
  std::vector<Rational> out(x.size());
  for (int i = 0; i < dimension(); ++i) out[i] = coords_[i].Evaluate(x[i]);
  return out;
}

DiscretizedHypercube::DiscretizedHypercube(int dimension, Rational epsilon)
    : dimension_(dimension), epsilon_(std::move(epsilon)) {
  if (dimension < 1) throw InputError("hypercube dimension must be >= 1");
  if (epsilon_.Sign() <= 0 || epsilon_ > Rational(1)) {
    throw InputError("grid resolution must lie in (0, 1]");
  }
  points_per_axis_ = (Rational(1) / epsilon_).Floor().NumeratorAsLong() + 1;
  num_points_ = 1;
  for (int i = 0; i < dimension; ++i) {
    if (num_points_ > (1L << 40) / points_per_axis_) {
      throw ResourceError("hypercube grid too large");
    }
    num_points_ *= points_per_axis_;
  }
}

Rational DiscretizedHypercube::GridValue(long step) const {
  EQLAB_CHECK(step >= 0 && step < points_per_axis_);
  return Rational(step) * epsilon_;
}

std::vector<Rational> DiscretizedHypercube::PointAt(long flat) const {
  EQLAB_CHECK(flat >= 0 && flat < num_points_);
  std::vector<Rational> point(dimension_);
  for (int i = dimension_ - 1; i >= 0; --i) {
    point[i] = GridValue(flat % points_per_axis_);
    flat /= points_per_axis_;
  }
  return point;
}

Rational DiscretizedHypercube::SnapToGrid(const Rational& x) const {
  if (x.Sign() < 0 || x > Rational(1)) {
    throw InputError("snap argument outside [0,1]");
  }
  const Rational steps = x / epsilon_;
  Rational lower = steps.Floor();
  if (lower.NumeratorAsLong() >= points_per_axis_) {
    lower = Rational(points_per_axis_ - 1);
  }
  Rational upper = lower + Rational(1);
  if (upper.NumeratorAsLong() >= points_per_axis_) {
    return GridValue(lower.NumeratorAsLong());
  }
  const Rational low_value = GridValue(lower.NumeratorAsLong());
  const Rational high_value = GridValue(upper.NumeratorAsLong());
  // Midpoint ties snap toward the lower coordinate.
  if (x - low_value <= high_value - x) return low_value;
  return high_value;
}

CubeMap CubeMapFromSeparable(const SeparableFunction& f) {
  return [f](const std::vector<Rational>& x) { return f.Evaluate(x); };
}

namespace {

// 1 - (1/d) sum_i (u_i - v_i)^2, the imitation payoff.
Rational ImitationPayoff(const std::vector<Rational>& u,
                         const std::vector<Rational>& v) {
  EQLAB_CHECK(u.size() == v.size());
  Rational sum;
  for (size_t i = 0; i < u.size(); ++i) {
    const Rational d = u[i] - v[i];
    sum += d * d;
  }
  return Rational(1) - sum / Rational(static_cast<int>(u.size()));
}

}  // namespace

MTGame BuildMTGame(const CubeMap& f, const DiscretizedHypercube& cube,
                   long max_profiles) {
  const long points = cube.num_points();
  if (points * points > max_profiles) {
    throw ResourceError("imitation game exceeds the profile budget");
  }
  std::vector<std::vector<Rational>> grid_points(points);
  std::vector<std::vector<Rational>> images(points);
  for (long s = 0; s < points; ++s) {
    grid_points[s] = cube.PointAt(s);
    images[s] = f(grid_points[s]);
    if (static_cast<int>(images[s].size()) != cube.dimension()) {
      throw InputError("function image has wrong dimension");
    }
    for (const Rational& v : images[s]) {
      if (v.Sign() < 0 || v > Rational(1)) {
        throw InputError("function image leaves the unit cube");
      }
    }
  }

  Matrix a(static_cast<int>(points), static_cast<int>(points));
  Matrix b(static_cast<int>(points), static_cast<int>(points));
  for (long x = 0; x < points; ++x) {
    for (long z = 0; z < points; ++z) {
      a.at(static_cast<int>(x), static_cast<int>(z)) =
          ImitationPayoff(grid_points[x], grid_points[z]);
      b.at(static_cast<int>(x), static_cast<int>(z)) =
          ImitationPayoff(grid_points[z], images[x]);
    }
  }
  return MTGame{BimatrixGame(std::move(a), std::move(b)), cube, f};
}

ExtractedFixedPoint ExtractFixedPoint(const MTGame& mt, const MixedStrategy& x,
                                      const MixedStrategy& y,
                                      const Rational& epsilon) {
  const EpsilonNEReport report =
      VerifyEpsilonNE(mt.game, x, y, VerificationQuery{epsilon});
  if (!report.holds) {
    throw InputError("profile is not an epsilon-equilibrium of the game");
  }
  const int d = mt.cube.dimension();
  std::vector<Rational> expectation(d, Rational(0));
  for (long s = 0; s < mt.cube.num_points(); ++s) {
    if (x[static_cast<int>(s)].Sign() == 0) continue;
    const std::vector<Rational> point = mt.cube.PointAt(s);
    for (int i = 0; i < d; ++i) {
      expectation[i] += x[static_cast<int>(s)] * point[i];
    }
  }
  std::vector<Rational> snapped(d);
  for (int i = 0; i < d; ++i) snapped[i] = mt.cube.SnapToGrid(expectation[i]);

  const std::vector<Rational> image = mt.function(snapped);
  Rational residual_sq;
  for (int i = 0; i < d; ++i) {
    const Rational delta = image[i] - snapped[i];
    residual_sq += delta * delta;
  }
  residual_sq /= Rational(d);
  return ExtractedFixedPoint{std::move(snapped), std::move(residual_sq)};
}

int CoordinatewiseGame::StrategyIndex(int coordinate, long grid_step) const {
  return static_cast<int>(coordinate * values_per_axis + grid_step);
}

std::pair<int, long> CoordinatewiseGame::DecodeStrategy(int strategy) const {
  return {static_cast<int>(strategy / values_per_axis),
          strategy % values_per_axis};
}

CoordinatewiseGame BuildCoordinatewiseGame(const SeparableFunction& f,
                                           const DiscretizedHypercube& cube) {
  if (f.dimension() != cube.dimension()) {
    throw InputError("function and grid dimensions differ");
  }
  const int d = cube.dimension();
  const long per_axis = cube.points_per_axis();
  const long strategies = d * per_axis;
  if (strategies > 4096) throw ResourceError("coordinatewise game too large");

  Matrix a(static_cast<int>(strategies), static_cast<int>(strategies));
  Matrix b(static_cast<int>(strategies), static_cast<int>(strategies));
  for (int i = 0; i < d; ++i) {
    for (long xs = 0; xs < per_axis; ++xs) {
      const Rational x = cube.GridValue(xs);
      const Rational fx = f.EvaluateCoordinate(i, x);
      const int row = static_cast<int>(i * per_axis + xs);
      for (long ys = 0; ys < per_axis; ++ys) {
        const Rational y = cube.GridValue(ys);
        const int col = static_cast<int>(i * per_axis + ys);
        const Rational dx = x - y;
        a.at(row, col) = Rational(1) - dx * dx;
        const Rational dy = y - fx;
        b.at(row, col) = Rational(1) - dy * dy;
      }
    }
  }
  return CoordinatewiseGame{BimatrixGame(std::move(a), std::move(b)), d,
                            per_axis};
}

namespace {
std::vector<std::vector<int>> AlthoferColumnSets(int k) {
  // Size-k/2 subsets containing element 0, lexicographic over the remaining
  // elements, followed by their complements in the same order.
  std::vector<std::vector<int>> with_first;
  std::vector<int> choice(k / 2 - 1);
  std::function<void(int, int)> recurse = [&](int start, int depth) {
    if (depth == k / 2 - 1) {
      std::vector<int> s{0};
      s.insert(s.end(), choice.begin(), choice.begin() + depth);
      with_first.push_back(std::move(s));
      return;
    }
    for (int v = start; v < k; ++v) {
      choice[depth] = v;
      recurse(v + 1, depth + 1);
    }
  };
  if (k == 2) {
    with_first.push_back({0});
  } else {
    recurse(1, 0);
  }
  std::vector<std::vector<int>> columns = with_first;
  for (const std::vector<int>& s : with_first) {
    std::vector<int> complement;
    std::vector<bool> member(k, false);
    for (int v : s) member[v] = true;
    for (int v = 0; v < k; ++v) {
      if (!member[v]) complement.push_back(v);
    }
    columns.push_back(std::move(complement));
  }
  return columns;
}
}  // namespace

AlthoferGame BuildAlthofer(int k) {
  if (k < 2 || k % 2 != 0) {
    throw InputError("Althofer game needs an even k >= 2");
  }
  const std::vector<std::vector<int>> columns = AlthoferColumnSets(k);
  Matrix a(k, static_cast<int>(columns.size()));
  for (int i = 0; i < k; ++i) {
    for (size_t c = 0; c < columns.size(); ++c) {
      const bool in_set =
          std::find(columns[c].begin(), columns[c].end(), i) != columns[c].end();
      a.at(i, static_cast<int>(c)) = in_set ? Rational(1) : Rational(-1);
    }
  }
  return AlthoferGame{k, ZeroSumGame(std::move(a)), columns};
}

PunishmentReport AlthoferPunishment(const MixedStrategy& p) {
  const int k = p.size();
  if (k < 2 || k % 2 != 0) {
    throw InputError("index distribution needs an even k >= 2");
  }
  std::vector<int> order(k);
  for (int i = 0; i < k; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&p](int i, int j) {
    return p[i] != p[j] ? p[i] < p[j] : i < j;
  });
  // Punish the k/2 least likely indices: the set player earns +1 when the
  // index lands outside her set.
  Rational bottom;
  std::vector<int> chosen(order.begin(), order.begin() + k / 2);
  for (int i : chosen) bottom += p[i];
  PunishmentReport report;
  report.best_response_payoff = Rational(1) - Rational(2) * bottom;

  const Rational uniform(1, k);
  for (int i = 0; i < k; ++i) {
    if (p[i] > uniform) report.tv_from_uniform += p[i] - uniform;
  }

  // Locate the chosen set among the canonical columns for reporting.
  std::sort(chosen.begin(), chosen.end());
  const std::vector<std::vector<int>> columns = AlthoferColumnSets(k);
  for (size_t c = 0; c < columns.size(); ++c) {
    if (columns[c] == chosen) {
      report.best_set_index = static_cast<int>(c);
      break;
    }
  }
  return report;
}

int GluedGame::StrategyIndex(const Strategy& s) const {
  const int sets = static_cast<int>(althofer.column_sets.size());
  return static_cast<int>((s.coordinate * values_per_axis + s.grid_step) *
                              sets +
                          s.set_index);
}

GluedGame::Strategy GluedGame::DecodeStrategy(int strategy) const {
  const int sets = static_cast<int>(althofer.column_sets.size());
  Strategy s;
  s.set_index = strategy % sets;
  const int rest = strategy / sets;
  s.grid_step = rest % values_per_axis;
  s.coordinate = static_cast<int>(rest / values_per_axis);
  return s;
}

int GluedGame::num_strategies_per_player() const {
  return static_cast<int>(dimension * values_per_axis *
                          static_cast<long>(althofer.column_sets.size()));
}

GluedGame::ComponentPayoffs GluedGame::Components(int row_strategy,
                                                  int col_strategy) const {
  const Strategy row = DecodeStrategy(row_strategy);
  const Strategy col = DecodeStrategy(col_strategy);
  ComponentPayoffs out;
  const int g1_row_index =
      coordinatewise.StrategyIndex(row.coordinate, row.grid_step);
  const int g1_col_index =
      coordinatewise.StrategyIndex(col.coordinate, col.grid_step);
  out.g1_row = coordinatewise.game.a().at(g1_row_index, g1_col_index);
  out.g1_col = coordinatewise.game.b().at(g1_row_index, g1_col_index);
  // G2: row player's index against the column player's set S.
  out.g2_row = althofer.game.a().at(row.coordinate, col.set_index);
  // G3: roles reversed; the row player's payoff is the negation of the
  // index player's membership payoff at (col.coordinate, row.set_index).
  out.g3_row = -althofer.game.a().at(col.coordinate, row.set_index);
  return out;
}

GluedGame BuildGluedGame(const SeparableFunction& f,
                         const DiscretizedHypercube& cube, long max_profiles) {
  if (cube.dimension() % 2 != 0) {
    throw InputError("glued game needs an even dimension");
  }
  GluedGame glued{BimatrixGame(Matrix(1, 1), Matrix(1, 1)),
                  BuildCoordinatewiseGame(f, cube),
                  BuildAlthofer(cube.dimension()),
                  cube.dimension(),
                  cube.points_per_axis()};
  const long n = glued.dimension * glued.values_per_axis *
                 static_cast<long>(glued.althofer.column_sets.size());
  if (n * n > max_profiles) {
    throw ResourceError("glued game exceeds the profile budget");
  }

  const Rational w1(1, 100), w23(99, 200);
  Matrix a(static_cast<int>(n), static_cast<int>(n));
  Matrix b(static_cast<int>(n), static_cast<int>(n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const GluedGame::ComponentPayoffs parts = glued.Components(r, c);
      a.at(r, c) = w1 * parts.g1_row + w23 * parts.g2_row + w23 * parts.g3_row;
      b.at(r, c) = w1 * parts.g1_col - w23 * parts.g2_row - w23 * parts.g3_row;
    }
  }
  glued.game = BimatrixGame(std::move(a), std::move(b));
  return glued;
}

}  // namespace eqlab
