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

#ifndef EQLAB_BROUWER_H_
#define EQLAB_BROUWER_H_

#include <array>
#include <functional>
#include <optional>

#include "eqlab/rational.h"
#include "eqlab/sperner.h"

namespace eqlab {

// Point of the standard 2-simplex: nonnegative coordinates summing to 1.
struct SimplexPoint {
  std::array<Rational, 3> coords;

  bool OnSimplex() const;
  friend bool operator==(const SimplexPoint& p, const SimplexPoint& q) {
    return p.coords == q.coords;
  }
};

// Continuous self-map of the 2-simplex with a known Lipschitz constant
// (sup-norm).  Images are validated to lie on the simplex at every
// evaluation.
class BrouwerFunction {
 public:
  using Evaluator = std::function<SimplexPoint(const SimplexPoint&)>;

  BrouwerFunction(Evaluator evaluator, Rational lipschitz);

  SimplexPoint Evaluate(const SimplexPoint& point) const;
  const Rational& lipschitz() const { return lipschitz_; }

 private:
  Evaluator evaluator_;
  Rational lipschitz_;
};

// Subdivision parameter tied to a target accuracy: N >= ceil(max(lambda,1) /
// epsilon), so subcell side length 1/N is at most epsilon/lambda.
struct GridSpec {
  Rational epsilon;
  int subdivision;

  static GridSpec ForAccuracy(const BrouwerFunction& f, Rational epsilon);
};

struct ColoringResult {
  // Exactly one is set: the legal coloring, or an exact fixed point found
  // while coloring (no coordinate strictly decreases there).
  std::optional<SpernerInstance> instance;
  std::optional<SimplexPoint> exact_fixed_point;
};

// Colors each lattice point by the lowest-index coordinate that strictly
// decreases under f (x -> red, y -> green, z -> blue); short-circuits with
// any exact fixed point encountered.  The result is always a legal coloring.
ColoringResult ColoringFromFunction(const BrouwerFunction& f,
                                    const GridSpec& grid);

struct BrouwerResult {
  SimplexPoint point;
  Rational residual;  // ||f(p) - p||_inf, exact
  bool exact = false;
  // The residual certificate: residual <= kResidualFactor * epsilon.
  static constexpr int kResidualFactor = 3;
};

// Center of a trichromatic cell of the induced coloring; an O(epsilon)
// approximate fixed point with exact measured residual.
BrouwerResult BrouwerFixedPoint(const BrouwerFunction& f, const GridSpec& grid);

}  // namespace eqlab

#endif  // EQLAB_BROUWER_H_
