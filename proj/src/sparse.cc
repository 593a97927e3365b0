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

#include "eqlab/sparse.h"

#include <mpfr.h>

#include <algorithm>
#include <thread>

#include "eqlab/errors.h"
#include "eqlab/rng.h"

namespace eqlab {

SupportMultiset::SupportMultiset(std::vector<int> indices)
    : indices_(std::move(indices)) {
  if (indices_.empty()) throw InputError("empty support multiset");
  std::sort(indices_.begin(), indices_.end());
  if (indices_.front() < 0) throw InputError("negative strategy index");
}

MixedStrategy SupportMultiset::InducedStrategy(int num_strategies) const {
  if (indices_.back() >= num_strategies) {
    throw InputError("multiset index out of range");
  }
  std::vector<Rational> p(num_strategies, Rational(0));
  const Rational share(1, size());
  for (int index : indices_) p[index] += share;
  return MixedStrategy(std::move(p));
}

int SparseSupportSize(int num_rows, int num_cols, const Rational& epsilon) {
  if (epsilon.Sign() <= 0) throw InputError("epsilon must be positive");
  const unsigned long n =
      static_cast<unsigned long>(std::max(num_rows, num_cols));
  mpfr_t value;
  mpfr_init2(value, 128);
  mpfr_set_ui(value, n, MPFR_RNDN);
  mpfr_log(value, value, MPFR_RNDU);
  mpfr_mul_ui(value, value, 16, MPFR_RNDU);  // frozen sampling constant c = 16
  mpfr_t eps2;
  mpfr_init2(eps2, 128);
  mpfr_set_q(eps2, epsilon.value().get_mpq_t(), MPFR_RNDD);
  mpfr_sqr(eps2, eps2, MPFR_RNDD);
  mpfr_div(value, value, eps2, MPFR_RNDU);
  const long size = mpfr_get_si(value, MPFR_RNDU);  // ceiling
  mpfr_clear(value);
  mpfr_clear(eps2);
  return static_cast<int>(std::clamp(size, 1L, 1000000L));
}

namespace {
SparseNEResult MakeResult(const BimatrixGame& game, SupportMultiset row_ms,
                          SupportMultiset col_ms, const Rational& epsilon,
                          SparseCheckKind check) {
  MixedStrategy x = row_ms.InducedStrategy(game.num_rows());
  MixedStrategy y = col_ms.InducedStrategy(game.num_cols());
  const VerificationQuery query{epsilon};
  EpsilonNEReport ne_report = VerifyEpsilonNE(game, x, y, query);
  WellSupportedReport ws_report = VerifyWellSupported(game, x, y, query);
  const bool ok = check == SparseCheckKind::kWellSupported ? ws_report.holds
                                                           : ne_report.holds;
  return SparseNEResult{std::move(row_ms), std::move(col_ms),
                        std::move(x),      std::move(y),
                        epsilon,           std::move(ne_report),
                        std::move(ws_report), ok};
}
}  // namespace

SparseNEResult LmmSample(const BimatrixGame& game, const MixedStrategy& x_star,
                         const MixedStrategy& y_star, const Rational& epsilon,
                         uint64_t seed, SparseCheckKind check,
                         std::optional<int> size_override) {
  if (!game.IsNormalized()) {
    throw InputError("sparse sampling requires a normalized game");
  }
  const EpsilonNEReport exact =
      VerifyEpsilonNE(game, x_star, y_star, VerificationQuery{Rational(0)});
  if (!exact.holds) {
    throw InputError("provided profile is not an exact Nash equilibrium");
  }
  const int size = size_override.value_or(
      SparseSupportSize(game.num_rows(), game.num_cols(), epsilon));
  EQLAB_CHECK(size >= 1);

  SplitMix64 root(seed);
  SplitMix64 row_rng = root.Split();
  SplitMix64 col_rng = root.Split();
  std::vector<int> row_indices(size), col_indices(size);
  for (int i = 0; i < size; ++i) {
    row_indices[i] = SampleIndex(x_star.probabilities(), &row_rng);
  }
  for (int i = 0; i < size; ++i) {
    col_indices[i] = SampleIndex(y_star.probabilities(), &col_rng);
  }
  return MakeResult(game, SupportMultiset(std::move(row_indices)),
                    SupportMultiset(std::move(col_indices)), epsilon, check);
}

namespace {

// Nondecreasing index sequences of a fixed length: combinations with
// repetition in lexicographic order.
bool NextMultiset(std::vector<int>* indices, int num_strategies) {
  for (int i = static_cast<int>(indices->size()) - 1; i >= 0; --i) {
    if ((*indices)[i] < num_strategies - 1) {
      const int v = (*indices)[i] + 1;
      for (size_t j = i; j < indices->size(); ++j) (*indices)[j] = v;
      return true;
    }
  }
  return false;
}

std::vector<std::vector<int>> AllMultisets(int size, int num_strategies) {
  std::vector<std::vector<int>> all;
  std::vector<int> current(size, 0);
  do {
    all.push_back(current);
  } while (NextMultiset(&current, num_strategies));
  return all;
}

}  // namespace

SparseNEResult QptasSearch(const BimatrixGame& game, const Rational& epsilon,
                           const QptasOptions& options) {
  if (!game.IsNormalized()) {
    throw InputError("sparse search requires a normalized game");
  }
  const int max_size =
      SparseSupportSize(game.num_rows(), game.num_cols(), epsilon);
  const VerificationQuery query{epsilon};

  long examined = 0;
  for (int size = 1; size <= max_size; ++size) {
    const std::vector<std::vector<int>> row_sets =
        AllMultisets(size, game.num_rows());
    const std::vector<std::vector<int>> col_sets =
        AllMultisets(size, game.num_cols());
    std::vector<MixedStrategy> col_strategies;
    col_strategies.reserve(col_sets.size());
    for (const auto& ms : col_sets) {
      col_strategies.push_back(
          SupportMultiset(ms).InducedStrategy(game.num_cols()));
    }

    const long pairs =
        static_cast<long>(row_sets.size()) * static_cast<long>(col_sets.size());
    if (examined + pairs > options.budget) {
      // Finish only what the budget allows before failing loudly.
      const long allowed = options.budget - examined;
      long used = 0;
      for (const auto& row_ms : row_sets) {
        MixedStrategy x = SupportMultiset(row_ms).InducedStrategy(game.num_rows());
        for (size_t c = 0; c < col_strategies.size(); ++c) {
          if (used >= allowed) {
            throw ResourceError(
                "qptas enumeration budget exceeded after " +
                std::to_string(examined + used) + " candidate pairs");
          }
          ++used;
          if (VerifyEpsilonNE(game, x, col_strategies[c], query).holds) {
            return MakeResult(game, SupportMultiset(row_ms),
                              SupportMultiset(col_sets[c]), epsilon,
                              SparseCheckKind::kPlain);
          }
        }
      }
      throw ResourceError("qptas enumeration budget exceeded after " +
                          std::to_string(options.budget) + " candidate pairs");
    }

    // Scan pairs in lexicographic order; with several workers the column
    // dimension is split and the lowest hit index wins, preserving the
    // deterministic witness.
    const int jobs = std::max(1, options.jobs);
    for (const auto& row_ms : row_sets) {
      MixedStrategy x =
          SupportMultiset(row_ms).InducedStrategy(game.num_rows());
      long hit = -1;
      if (jobs == 1) {
        for (size_t c = 0; c < col_strategies.size(); ++c) {
          if (VerifyEpsilonNE(game, x, col_strategies[c], query).holds) {
            hit = static_cast<long>(c);
            break;
          }
        }
      } else {
        std::vector<long> first_hit(jobs, -1);
        std::vector<std::thread> workers;
        const size_t total = col_strategies.size();
        for (int w = 0; w < jobs; ++w) {
          workers.emplace_back([&, w]() {
            for (size_t c = w; c < total; c += jobs) {
              if (VerifyEpsilonNE(game, x, col_strategies[c], query).holds) {
                first_hit[w] = static_cast<long>(c);
                return;
              }
            }
          });
        }
        for (auto& t : workers) t.join();
        for (long h : first_hit) {
          if (h >= 0 && (hit < 0 || h < hit)) hit = h;
        }
      }
      if (hit >= 0) {
        return MakeResult(game, SupportMultiset(row_ms),
                          SupportMultiset(col_sets[hit]), epsilon,
                          SparseCheckKind::kPlain);
      }
    }
    examined += pairs;
  }
  throw InternalError(
      "no sparse witness up to the theoretical size bound; the sampling "
      "constant guarantees existence");
}

}  // namespace eqlab
