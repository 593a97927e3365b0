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

#ifndef EQLAB_EOL_H_
#define EQLAB_EOL_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace eqlab {

// Query answer for one vertex: alleged predecessor and successor, either of
// which may be absent.  The directed edge (v, w) exists iff succ(v) = w and
// pred(w) = v, which caps in- and out-degrees at 1.
struct EolNeighbors {
  std::optional<uint64_t> pred;
  std::optional<uint64_t> succ;
};

// End-of-Line instance over the vertex set {0,1}^bits, accessed only through
// the oracle.  The canonical source 0 has no predecessor; this is checked at
// construction (callback oracles are probed once for vertex 0).
class EolInstance {
 public:
  using Oracle = std::function<EolNeighbors(uint64_t)>;

  EolInstance(int bits, Oracle oracle);
  // Explicit edge-list instance; vertices absent from the map are isolated.
  EolInstance(int bits, std::map<uint64_t, EolNeighbors> vertices);

  int bits() const { return bits_; }
  uint64_t num_vertices() const { return uint64_t{1} << bits_; }
  EolNeighbors Query(uint64_t vertex) const;

 private:
  int bits_;
  Oracle oracle_;
};

// Counts distinct queried vertices; repeated queries to the same vertex are
// memoized and not recounted.
class QueryCounter {
 public:
  explicit QueryCounter(const EolInstance* instance) : instance_(instance) {}

  const EolNeighbors& Query(uint64_t vertex);
  long count() const { return static_cast<long>(cache_.size()); }

 private:
  const EolInstance* instance_;
  std::map<uint64_t, EolNeighbors> cache_;
};

enum class EolCase {
  kNoSuccessor = 1,      // (i)   succ(v) = NULL
  kNonsourceNoPred = 2,  // (ii)  pred(v) = NULL and v != 0
  kBrokenSucc = 3,       // (iii) v != pred(succ(v))
  kBrokenPred = 4,       // (iv)  v != succ(pred(v)) and v != 0
};

struct EolSolution {
  uint64_t vertex = 0;
  EolCase tag = EolCase::kNoSuccessor;
};

struct EolRunResult {
  EolSolution solution;
  long queries = 0;
};

// Follows the path from the canonical source 0, checking the four solution
// cases at every visited vertex; a visited-set guards against inconsistent
// oracles.  Returns a verified solution and the distinct-query count.
EolRunResult EolSolve(const EolInstance& instance);

// True iff the tagged case holds for the claimed vertex (at most three
// oracle queries).
bool EolVerify(const EolInstance& instance, const EolSolution& solution);

// File format: first line "bits <n>", then one line per listed vertex:
// "<vertex> <pred> <succ>", decimal vertex ids with "-" for NULL.
EolInstance LoadEolInstance(const std::string& path);

}  // namespace eqlab

#endif  // EQLAB_EOL_H_
