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

#ifndef EQLAB_SUPPORT_ENUM_H_
#define EQLAB_SUPPORT_ENUM_H_

#include <optional>
#include <vector>

#include "eqlab/games.h"

namespace eqlab {

// One exact Nash equilibrium witness per feasible support pair.
struct SupportPairEquilibrium {
  std::vector<int> row_support;
  std::vector<int> col_support;
  MixedStrategy x;
  MixedStrategy y;
};

struct SupportEnumerationOptions {
  // Only support pairs with both sizes <= this are examined (0 = no limit).
  int max_support_size = 0;
  // Stop after the first feasible support pair (in deterministic order:
  // support sizes ascending, then lexicographic bitmask order).
  bool stop_after_first = false;
};

// Exhaustive exact Nash enumeration for small bimatrix games, one witness per
// support pair that carries an equilibrium whose supports are exactly the
// pair.  Degenerate games may have equilibrium continua; the witness is then
// a deterministic representative (the optimum of an interior-maximizing LP
// solved with the deterministic pivot rule).
//
// For a support pair (SA, SB) the two sides decouple: a pair (x, y) with
// supports exactly (SA, SB) is an equilibrium iff
//   - some x supported exactly on SA makes every column in SB a best
//     response for the column player, and
//   - some y supported exactly on SB makes every row in SA a best response
//     for the row player.
// Each side is a small exact LP maximizing the minimum support probability;
// the pair is feasible iff both optima are strictly positive.
std::vector<SupportPairEquilibrium> EnumerateNashEquilibria(
    const BimatrixGame& game, const SupportEnumerationOptions& options = {});

// Convenience: the first equilibrium in enumeration order, if any support
// pair within the size limit is feasible.
std::optional<SupportPairEquilibrium> FindOneNashEquilibrium(
    const BimatrixGame& game, int max_support_size = 0);

}  // namespace eqlab

#endif  // EQLAB_SUPPORT_ENUM_H_
