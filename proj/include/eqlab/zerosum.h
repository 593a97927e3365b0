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

#ifndef EQLAB_ZEROSUM_H_
#define EQLAB_ZEROSUM_H_

#include "eqlab/games.h"
#include "eqlab/matrix.h"

namespace eqlab {

// Two-player zero-sum game: A holds the row player's payoffs; the column
// player receives their negation.
class ZeroSumGame {
 public:
  explicit ZeroSumGame(Matrix a);

  const Matrix& a() const { return a_; }
  int num_rows() const { return a_.rows(); }
  int num_cols() const { return a_.cols(); }

  // The induced bimatrix game (A, -A).
  BimatrixGame ToBimatrix() const;

 private:
  Matrix a_;
};

// A min-max pair with the game value: x* guarantees the row player at least
// v* against every column, y* holds her to at most v* against every row.
struct ZeroSumSolution {
  Rational value;
  MixedStrategy x;
  MixedStrategy y;
};

// Solves the primal/dual linear-program pair
//   max v  s.t.  v <= sum_i A_ij x_i for every column j, x a distribution,
//   min w  s.t.  w >= sum_j A_ij y_j for every row i,    y a distribution,
// and returns the min-max pair.  The two optima are asserted exactly equal.
// With multiple optimal bases the returned pair is whatever the
// deterministic pivot rule yields; uniqueness is never implied.
ZeroSumSolution SolveMinimax(const ZeroSumGame& game);

struct MinMaxVerification {
  bool is_pair = false;
  // How far each guarantee falls short of the game value (0 when met).
  Rational row_guarantee_gap;     // v* - min_j (x^T A)_j
  Rational column_guarantee_gap;  // max_i (A y)_i - v*
};

// Checks whether (x, y) is a min-max pair by recomputing the game value.
MinMaxVerification VerifyMinMaxPair(const ZeroSumGame& game,
                                    const MixedStrategy& x,
                                    const MixedStrategy& y);

}  // namespace eqlab

#endif  // EQLAB_ZEROSUM_H_
