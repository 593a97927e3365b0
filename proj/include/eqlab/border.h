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

#ifndef EQLAB_BORDER_H_
#define EQLAB_BORDER_H_

#include <optional>
#include <vector>

#include "eqlab/max_flow.h"
#include "eqlab/rational.h"

namespace eqlab {

// Independent discrete valuation distributions for n bidders.  Supports are
// kept per bidder (implicitly tagged by the bidder index).
class Prior {
 public:
  struct Bidder {
    std::vector<Rational> support;        // ascending valuations
    std::vector<Rational> probabilities;  // matching, nonnegative, sum 1
  };

  explicit Prior(std::vector<Bidder> bidders);

  int num_bidders() const { return static_cast<int>(bidders_.size()); }
  const Bidder& bidder(int i) const { return bidders_[i]; }
  int support_size(int i) const {
    return static_cast<int>(bidders_[i].support.size());
  }

 private:
  std::vector<Bidder> bidders_;
};

// Interim allocation rule y_i(v) in [0,1], optionally with interim payments
// q_i(v) >= 0; indexed [bidder][support position].
struct InterimRule {
  std::vector<std::vector<Rational>> y;
  std::vector<std::vector<Rational>> q;  // empty when absent

  void Validate(const Prior& prior) const;
};

// One distinguished-valuation inequality: sets S_i of support positions per
// bidder, the winner-side probability (lhs) and the someone-distinguished
// probability (rhs); feasible rules satisfy lhs <= rhs for every choice.
struct BorderInequality {
  std::vector<std::vector<int>> distinguished;  // per bidder, positions
  Rational lhs;
  Rational rhs;

  Rational Violation() const { return lhs - rhs; }  // positive = violated
};

// Ex-post rule x_i(v-profile) with per-profile totals at most 1, whose
// marginals reproduce an interim rule exactly.
struct ExPostRule {
  // x[profile flat index][bidder]; profiles enumerated mixed-radix with the
  // last bidder's valuation fastest.
  std::vector<std::vector<Rational>> x;
};

// Monopoly pricing for a single-bidder prior: the support price maximizing
// r * P(v >= r); ties resolve to the lower price.
struct MonopolyResult {
  Rational price;
  Rational revenue;
};
MonopolyResult MonopolyPrice(const Prior::Bidder& distribution);

struct NecessaryConditionReport {
  bool holds = false;
  Rational slack;  // 1 - sum_i sum_v f_i(v) y_i(v)
};

// The single "at most one winner in expectation" inequality.
NecessaryConditionReport NecessaryCondition(const Prior& prior,
                                            const InterimRule& rule);

// Exact evaluation of all prod_i 2^{|V_i|} distinguished-valuation
// inequalities; returns the violated ones sorted by decreasing violation.
std::vector<BorderInequality> EnumerateBorderViolations(
    const Prior& prior, const InterimRule& rule, long max_choices = 4'000'000);

struct FeasibilityResult {
  bool feasible = false;
  std::optional<ExPostRule> witness;              // on feasible
  std::optional<BorderInequality> cut_inequality; // on infeasible
  Rational flow_value;
};

// Builds the four-layer flow network (source -> valuation profiles ->
// winner-valuation nodes + no-winner -> sink) and decides feasibility by
// whether the max flow reaches 1.  Feasible: the ex-post witness is read off
// the profile arcs.  Infeasible: the min cut yields a violated inequality
// with S_i = the valuations of i not represented on the cut's source side.
// Requires the necessary condition (the no-winner capacity must be
// nonnegative); zero-probability valuations are pruned before construction.
FeasibilityResult FeasibilityViaMaxflow(const Prior& prior,
                                        const InterimRule& rule);

struct BICLPResult {
  InterimRule rule;  // optimal (y, q)
  Rational revenue;
};

// Revenue-maximizing BIC single-item auction over the interim systems:
// truthfulness, interim individual rationality, and the full Border family;
// solved as one explicit LP.
BICLPResult OptimalBicRevenue(const Prior& prior, long max_choices = 100'000);

}  // namespace eqlab

#endif  // EQLAB_BORDER_H_
