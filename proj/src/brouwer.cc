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

#include "eqlab/brouwer.h"

#include <vector>

#include "eqlab/errors.h"

namespace eqlab {

bool SimplexPoint::OnSimplex() const {
  return coords[0].Sign() >= 0 && coords[1].Sign() >= 0 &&
         coords[2].Sign() >= 0 &&
         coords[0] + coords[1] + coords[2] == Rational(1);
}

BrouwerFunction::BrouwerFunction(Evaluator evaluator, Rational lipschitz)
    : evaluator_(std::move(evaluator)), lipschitz_(std::move(lipschitz)) {
  if (lipschitz_.Sign() < 0) throw InputError("negative Lipschitz constant");
}

SimplexPoint BrouwerFunction::Evaluate(const SimplexPoint& point) const {
  if (!point.OnSimplex()) throw InputError("evaluation point off the simplex");
  SimplexPoint image = evaluator_(point);
  if (!image.OnSimplex()) {
    throw InputError("function image leaves the simplex");
  }
  return image;
}

GridSpec GridSpec::ForAccuracy(const BrouwerFunction& f, Rational epsilon) {
  if (epsilon.Sign() <= 0) throw InputError("accuracy must be positive");
  const Rational lambda = Max(f.lipschitz(), Rational(1));
  const Rational cells = (lambda / epsilon).Ceil();
  long n = cells.NumeratorAsLong();
  if (n < 1) n = 1;
  if (n > 4096) throw ResourceError("subdivision too fine for desk scale");
  return GridSpec{std::move(epsilon), static_cast<int>(n)};
}

namespace {
SimplexPoint LatticePoint(const LatticeVertex& v, int n) {
  return SimplexPoint{{Rational(v.a, n), Rational(v.b, n), Rational(v.c, n)}};
}
}  // namespace

ColoringResult ColoringFromFunction(const BrouwerFunction& f,
                                    const GridSpec& grid) {
  const int n = grid.subdivision;
  const int total = (n + 1) * (n + 2) / 2;
  std::vector<Color> colors(total, Color::kRed);
  int index = 0;
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= n - a; ++b, ++index) {
      const LatticeVertex v{a, b, n - a - b};
      const SimplexPoint p = LatticePoint(v, n);
      const SimplexPoint image = f.Evaluate(p);
      int decreased = -1;
      for (int i = 0; i < 3; ++i) {
        if (image.coords[i] < p.coords[i]) {
          decreased = i;
          break;  // lowest-index coordinate, for determinism
        }
      }
      if (decreased < 0) {
        // No coordinate strictly decreases; with both sums equal to 1 the
        // point maps to itself.
        return ColoringResult{std::nullopt, p};
      }
      colors[index] = static_cast<Color>(decreased);
    }
  }
  return ColoringResult{SpernerInstance(n, std::move(colors)), std::nullopt};
}

BrouwerResult BrouwerFixedPoint(const BrouwerFunction& f,
                                const GridSpec& grid) {
  ColoringResult coloring = ColoringFromFunction(f, grid);
  if (coloring.exact_fixed_point.has_value()) {
    return BrouwerResult{*coloring.exact_fixed_point, Rational(0), true};
  }
  const Cell cell = SpernerFind(*coloring.instance);
  const auto corners = cell.Corners();
  SimplexPoint center{{Rational(0), Rational(0), Rational(0)}};
  for (const LatticeVertex& v : corners) {
    const SimplexPoint p = LatticePoint(v, grid.subdivision);
    for (int i = 0; i < 3; ++i) center.coords[i] += p.coords[i];
  }
  for (int i = 0; i < 3; ++i) center.coords[i] /= Rational(3);

  const SimplexPoint image = f.Evaluate(center);
  Rational residual;
  for (int i = 0; i < 3; ++i) {
    residual = Max(residual, (image.coords[i] - center.coords[i]).Abs());
  }
  return BrouwerResult{std::move(center), std::move(residual), false};
}

}  // namespace eqlab
