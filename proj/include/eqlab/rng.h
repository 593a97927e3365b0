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

#ifndef EQLAB_RNG_H_
#define EQLAB_RNG_H_

#include <cstdint>
#include <vector>

#include "eqlab/rational.h"

namespace eqlab {

// SplitMix64: the library's named, seeded, splittable pseudorandom generator.
// Every randomized run records its seed; identical seeds give identical
// streams on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t Next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n > 0.  Rejection-free modulo is fine here: streams
  // feed statistical tests, not cryptography, and n is tiny next to 2^64.
  uint64_t NextBelow(uint64_t n) { return Next() % n; }

  // Derives an independent child generator; the parent stream advances once.
  SplitMix64 Split() { return SplitMix64(Next() ^ 0x5851f42d4c957f2dULL); }

 private:
  uint64_t state_;
};

// Samples an index from a distribution given by exact rational probabilities
// summing to 1.  Uses one 64-bit draw r and returns the smallest index i with
// cumulative probability > r / 2^64; exact rational comparisons, no floating
// point.
int SampleIndex(const std::vector<Rational>& probabilities, SplitMix64* rng);

}  // namespace eqlab

#endif  // EQLAB_RNG_H_
