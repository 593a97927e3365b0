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

#include "eqlab/rng.h"

#include "eqlab/errors.h"

namespace eqlab {

int SampleIndex(const std::vector<Rational>& probabilities, SplitMix64* rng) {
  EQLAB_CHECK(!probabilities.empty());
  const uint64_t r = rng->Next();
  // threshold = r / 2^64 in [0, 1).
  mpz_class num;
  mpz_import(num.get_mpz_t(), 1, 1, sizeof(r), 0, 0, &r);
  mpq_class threshold(num, mpz_class(1) << 64);
  threshold.canonicalize();
  const Rational t(threshold);

  Rational cumulative;
  for (int i = 0; i < static_cast<int>(probabilities.size()); ++i) {
    cumulative += probabilities[i];
    if (cumulative > t) return i;
  }
  // Sum is exactly 1 > t, so we cannot fall through for a valid distribution.
  return static_cast<int>(probabilities.size()) - 1;
}

}  // namespace eqlab
