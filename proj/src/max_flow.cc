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

#include "eqlab/max_flow.h"

#include <deque>

#include "eqlab/errors.h"

namespace eqlab {

FlowNetwork::FlowNetwork(int num_vertices, int source, int sink)
    : num_vertices_(num_vertices), source_(source), sink_(sink) {
  if (num_vertices < 2 || source < 0 || source >= num_vertices || sink < 0 ||
      sink >= num_vertices) {
    throw InputError("malformed flow network shape");
  }
  if (source == sink) throw InputError("source equals sink");
}

void FlowNetwork::AddArc(int tail, int head, Capacity capacity) {
  if (tail < 0 || tail >= num_vertices_ || head < 0 || head >= num_vertices_) {
    throw InputError("arc endpoint out of range");
  }
  if (!capacity.infinite && capacity.value.Sign() < 0) {
    throw InputError("negative arc capacity");
  }
  arcs_.push_back({tail, head, std::move(capacity)});
}

namespace {

// Residual edge: (arc index, direction).  Forward direction has residual
// capacity cap - flow (infinite if the arc is infinite); backward has
// residual flow.
struct ResidualRef {
  int arc;
  bool forward;
};

}  // namespace

MaxFlowResult ComputeMaxFlow(const FlowNetwork& network) {
  const int v = network.num_vertices();
  const auto& arcs = network.arcs();
  const int e = static_cast<int>(arcs.size());

  std::vector<Rational> flow(e, Rational(0));
  std::vector<std::vector<ResidualRef>> adjacency(v);
  for (int i = 0; i < e; ++i) {
    adjacency[arcs[i].tail].push_back({i, true});
    adjacency[arcs[i].head].push_back({i, false});
  }

  auto residual_positive = [&](const ResidualRef& ref) {
    const Arc& arc = arcs[ref.arc];
    if (ref.forward) {
      return arc.capacity.infinite || flow[ref.arc] < arc.capacity.value;
    }
    return flow[ref.arc].Sign() > 0;
  };

  Rational total;
  while (true) {
    // BFS for the shortest augmenting path.
    std::vector<ResidualRef> via(v, ResidualRef{-1, true});
    std::vector<int> parent(v, -1);
    std::deque<int> queue{network.source()};
    std::vector<bool> seen(v, false);
    seen[network.source()] = true;
    while (!queue.empty() && !seen[network.sink()]) {
      const int u = queue.front();
      queue.pop_front();
      for (const ResidualRef& ref : adjacency[u]) {
        const Arc& arc = arcs[ref.arc];
        const int next = ref.forward ? arc.head : arc.tail;
        if (seen[next] || !residual_positive(ref)) continue;
        seen[next] = true;
        parent[next] = u;
        via[next] = ref;
        queue.push_back(next);
      }
    }
    if (!seen[network.sink()]) break;

    // Bottleneck over the path; all-infinite means the value is unbounded.
    bool bottleneck_set = false;
    Rational bottleneck;
    for (int u = network.sink(); u != network.source(); u = parent[u]) {
      const ResidualRef& ref = via[u];
      const Arc& arc = arcs[ref.arc];
      if (ref.forward && arc.capacity.infinite) continue;
      const Rational r = ref.forward ? arc.capacity.value - flow[ref.arc]
                                     : flow[ref.arc];
      if (!bottleneck_set || r < bottleneck) {
        bottleneck = r;
        bottleneck_set = true;
      }
    }
    if (!bottleneck_set) {
      throw InputError(
          "infinite-capacity source-sink path: max flow is unbounded");
    }
    EQLAB_CHECK(bottleneck.Sign() > 0);
    for (int u = network.sink(); u != network.source(); u = parent[u]) {
      const ResidualRef& ref = via[u];
      if (ref.forward) {
        flow[ref.arc] += bottleneck;
      } else {
        flow[ref.arc] -= bottleneck;
      }
    }
    total += bottleneck;
  }

  // Min cut: vertices reachable from the source in the final residual graph.
  std::vector<bool> reachable(v, false);
  std::deque<int> queue{network.source()};
  reachable[network.source()] = true;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (const ResidualRef& ref : adjacency[u]) {
      const Arc& arc = arcs[ref.arc];
      const int next = ref.forward ? arc.head : arc.tail;
      if (!reachable[next] && residual_positive(ref)) {
        reachable[next] = true;
        queue.push_back(next);
      }
    }
  }

  MaxFlowResult result;
  result.value = total;
  result.flow = std::move(flow);
  for (int u = 0; u < v; ++u) {
    if (reachable[u]) result.min_cut.push_back(u);
  }
  for (int i = 0; i < e; ++i) {
    if (reachable[arcs[i].tail] && !reachable[arcs[i].head]) {
      EQLAB_CHECK(!arcs[i].capacity.infinite);
      result.cut_capacity += arcs[i].capacity.value;
    }
  }
  EQLAB_CHECK(result.cut_capacity == result.value);
  return result;
}

}  // namespace eqlab
