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

#ifndef EQLAB_MAX_FLOW_H_
#define EQLAB_MAX_FLOW_H_

#include <vector>

#include "eqlab/rational.h"

namespace eqlab {

// Arc capacity: an exact rational, or a symbolic infinity.  Infinity is a
// marker, never a large number, so cut arguments stay exact.
struct Capacity {
  bool infinite = false;
  Rational value;

  static Capacity Infinite() { return {true, Rational(0)}; }
  static Capacity Finite(Rational v) { return {false, std::move(v)}; }
};

struct Arc {
  int tail;
  int head;
  Capacity capacity;
};

class FlowNetwork {
 public:
  FlowNetwork(int num_vertices, int source, int sink);

  int num_vertices() const { return num_vertices_; }
  int source() const { return source_; }
  int sink() const { return sink_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  void AddArc(int tail, int head, Capacity capacity);

 private:
  int num_vertices_;
  int source_;
  int sink_;
  std::vector<Arc> arcs_;
};

struct MaxFlowResult {
  Rational value;
  std::vector<Rational> flow;  // per arc, same order as FlowNetwork::arcs()
  // Source side of a minimum cut (vertices reachable in the final residual
  // graph); its crossing capacity equals value exactly, the certificate.
  std::vector<int> min_cut;
  Rational cut_capacity;
};

// Edmonds-Karp (BFS augmenting paths) over exact rationals.  Throws
// InputError when an all-infinite source-to-sink path makes the value
// unbounded.
MaxFlowResult ComputeMaxFlow(const FlowNetwork& network);

}  // namespace eqlab

#endif  // EQLAB_MAX_FLOW_H_
