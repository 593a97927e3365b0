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

#include "eqlab/eol.h"

#include <fstream>
#include <set>
#include <sstream>

#include "eqlab/errors.h"

namespace eqlab {

namespace {
void CheckBits(int bits) {
  if (bits < 1 || bits > 62) {
    throw InputError("EoL bit-width must be between 1 and 62");
  }
}
}  // namespace

EolInstance::EolInstance(int bits, Oracle oracle)
    : bits_(bits), oracle_(std::move(oracle)) {
  CheckBits(bits);
  if (oracle_(0).pred.has_value()) {
    throw InputError("canonical source 0 must have no predecessor");
  }
}

EolInstance::EolInstance(int bits, std::map<uint64_t, EolNeighbors> vertices)
    : bits_(bits) {
  CheckBits(bits);
  const uint64_t n = uint64_t{1} << bits;
  for (const auto& [v, neighbors] : vertices) {
    if (v >= n || (neighbors.pred.has_value() && *neighbors.pred >= n) ||
        (neighbors.succ.has_value() && *neighbors.succ >= n)) {
      throw InputError("EoL vertex id exceeds the bit-width");
    }
  }
  auto it = vertices.find(0);
  if (it != vertices.end() && it->second.pred.has_value()) {
    throw InputError("canonical source 0 must have no predecessor");
  }
  oracle_ = [table = std::move(vertices)](uint64_t v) {
    auto found = table.find(v);
    return found == table.end() ? EolNeighbors{} : found->second;
  };
}

EolNeighbors EolInstance::Query(uint64_t vertex) const {
  if (vertex >= num_vertices()) {
    throw InputError("EoL query outside the vertex set");
  }
  EolNeighbors neighbors = oracle_(vertex);
  if ((neighbors.pred.has_value() && *neighbors.pred >= num_vertices()) ||
      (neighbors.succ.has_value() && *neighbors.succ >= num_vertices())) {
    throw InputError("oracle returned a malformed vertex id");
  }
  return neighbors;
}

const EolNeighbors& QueryCounter::Query(uint64_t vertex) {
  auto it = cache_.find(vertex);
  if (it == cache_.end()) {
    it = cache_.emplace(vertex, instance_->Query(vertex)).first;
  }
  return it->second;
}

namespace {

// Checks cases (i)-(iv) at v; the counter memoizes the extra lookups.
std::optional<EolCase> CaseAt(QueryCounter* counter, uint64_t v) {
  const EolNeighbors here = counter->Query(v);
  if (!here.succ.has_value()) return EolCase::kNoSuccessor;
  if (!here.pred.has_value() && v != 0) return EolCase::kNonsourceNoPred;
  {
    const EolNeighbors& at_succ = counter->Query(*here.succ);
    if (!at_succ.pred.has_value() || *at_succ.pred != v) {
      return EolCase::kBrokenSucc;
    }
  }
  if (here.pred.has_value() && v != 0) {
    const EolNeighbors& at_pred = counter->Query(*here.pred);
    if (!at_pred.succ.has_value() || *at_pred.succ != v) {
      return EolCase::kBrokenPred;
    }
  }
  return std::nullopt;
}

}  // namespace

EolRunResult EolSolve(const EolInstance& instance) {
  QueryCounter counter(&instance);
  std::set<uint64_t> visited;
  uint64_t v = 0;
  while (true) {
    if (!visited.insert(v).second) {
      // Unreachable for oracles meeting the degree semantics: revisiting
      // would need two distinct predecessors of the same vertex.
      throw InternalError("EoL walk revisited a vertex");
    }
    const std::optional<EolCase> tag = CaseAt(&counter, v);
    if (tag.has_value()) {
      return EolRunResult{EolSolution{v, *tag}, counter.count()};
    }
    v = *counter.Query(v).succ;
  }
}

bool EolVerify(const EolInstance& instance, const EolSolution& solution) {
  QueryCounter counter(&instance);
  const uint64_t v = solution.vertex;
  const EolNeighbors here = counter.Query(v);
  switch (solution.tag) {
    case EolCase::kNoSuccessor:
      return !here.succ.has_value();
    case EolCase::kNonsourceNoPred:
      return !here.pred.has_value() && v != 0;
    case EolCase::kBrokenSucc: {
      if (!here.succ.has_value()) return false;
      const EolNeighbors at_succ = counter.Query(*here.succ);
      return !at_succ.pred.has_value() || *at_succ.pred != v;
    }
    case EolCase::kBrokenPred: {
      if (!here.pred.has_value() || v == 0) return false;
      const EolNeighbors at_pred = counter.Query(*here.pred);
      return !at_pred.succ.has_value() || *at_pred.succ != v;
    }
  }
  return false;
}

EolInstance LoadEolInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open EoL file: " + path);
  std::string keyword;
  int bits = 0;
  if (!(in >> keyword >> bits) || keyword != "bits") {
    throw InputError("EoL file must start with 'bits <n>'");
  }
  std::map<uint64_t, EolNeighbors> table;
  std::string vertex_token, pred_token, succ_token;
  while (in >> vertex_token >> pred_token >> succ_token) {
    auto parse = [](const std::string& token) -> std::optional<uint64_t> {
      if (token == "-") return std::nullopt;
      try {
        return std::stoull(token);
      } catch (const std::exception&) {
        throw InputError("bad vertex id in EoL file: '" + token + "'");
      }
    };
    const std::optional<uint64_t> v = parse(vertex_token);
    if (!v.has_value()) throw InputError("vertex id cannot be '-'");
    if (!table.emplace(*v, EolNeighbors{parse(pred_token), parse(succ_token)})
             .second) {
      throw InputError("duplicate vertex in EoL file");
    }
  }
  return EolInstance(bits, std::move(table));
}

}  // namespace eqlab
