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

#ifndef EQLAB_SPARSE_H_
#define EQLAB_SPARSE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "eqlab/games.h"

namespace eqlab {

// Pure-strategy indices with multiplicity; the induced mixed strategy is
// uniform over the multiset.
class SupportMultiset {
 public:
  explicit SupportMultiset(std::vector<int> indices);

  int size() const { return static_cast<int>(indices_.size()); }
  const std::vector<int>& indices() const { return indices_; }
  MixedStrategy InducedStrategy(int num_strategies) const;

 private:
  std::vector<int> indices_;  // sorted ascending
};

enum class SparseCheckKind {
  kWellSupported,  // default: the guarantee the sampling proof delivers
  kPlain,
};

struct SparseNEResult {
  SupportMultiset row_multiset;
  SupportMultiset col_multiset;
  MixedStrategy x;
  MixedStrategy y;
  Rational epsilon;
  EpsilonNEReport epsilon_report;          // from VerifyEpsilonNE
  WellSupportedReport well_supported_report;
  bool succeeded = false;  // per the configured check kind
};

// Multiset size ceil(c * ln(max(m, n)) / epsilon^2) with the frozen sampling
// constant c = 16 (the theory fixes only the growth rate; the constant was
// calibrated once for reproducible success frequencies).
int SparseSupportSize(int num_rows, int num_cols, const Rational& epsilon);

// Samples multisets of pure strategies i.i.d. from an exact equilibrium and
// returns the empirical pair with its verification reports.  A single draw
// is not guaranteed to succeed; callers retry across seeds.  size_override
// replaces the computed multiset size (used by monotonicity studies).
SparseNEResult LmmSample(const BimatrixGame& game, const MixedStrategy& x_star,
                         const MixedStrategy& y_star, const Rational& epsilon,
                         uint64_t seed,
                         SparseCheckKind check = SparseCheckKind::kWellSupported,
                         std::optional<int> size_override = std::nullopt);

struct QptasOptions {
  // Abort (ResourceError) after this many candidate pairs.
  long budget = 2'000'000;
  // Worker threads for candidate verification; the result is the
  // lexicographically first witness regardless of the thread count.
  int jobs = 1;
};

// Deterministic enumeration of multiset pairs, sizes ascending from 1 and
// lexicographic within a size, returning the first pair whose induced
// uniform strategies pass the epsilon check.  Existence is guaranteed once
// the theoretical size bound is reached, so enumerating small sizes first
// only sharpens the witness.
SparseNEResult QptasSearch(const BimatrixGame& game, const Rational& epsilon,
                           const QptasOptions& options = {});

}  // namespace eqlab

#endif  // EQLAB_SPARSE_H_
