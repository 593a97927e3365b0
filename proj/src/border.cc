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

#include "eqlab/border.h"

#include <algorithm>

#include "eqlab/errors.h"
#include "eqlab/linear_program.h"

namespace eqlab {

Prior::Prior(std::vector<Bidder> bidders) : bidders_(std::move(bidders)) {
  if (bidders_.empty()) throw InputError("prior needs at least one bidder");
  for (const Bidder& b : bidders_) {
    if (b.support.empty() || b.support.size() != b.probabilities.size()) {
      throw InputError("bidder support and probabilities must align");
    }
    Rational total;
    for (const Rational& p : b.probabilities) {
      if (p.Sign() < 0) throw InputError("negative prior probability");
      total += p;
    }
    if (total != Rational(1)) {
      throw InputError("prior probabilities sum to " + total.ToString());
    }
    for (size_t v = 0; v < b.support.size(); ++v) {
      if (b.support[v].Sign() < 0) throw InputError("negative valuation");
      if (v > 0 && !(b.support[v - 1] < b.support[v])) {
        throw InputError("support must be strictly increasing");
      }
    }
  }
}

void InterimRule::Validate(const Prior& prior) const {
  if (static_cast<int>(y.size()) != prior.num_bidders()) {
    throw InputError("interim rule must cover every bidder");
  }
  for (int i = 0; i < prior.num_bidders(); ++i) {
    if (static_cast<int>(y[i].size()) != prior.support_size(i)) {
      throw InputError("interim rule must cover every valuation");
    }
    for (const Rational& p : y[i]) {
      if (p.Sign() < 0 || p > Rational(1)) {
        throw InputError("winning probability outside [0,1]");
      }
    }
  }
  if (!q.empty()) {
    if (q.size() != y.size()) throw InputError("payment rule shape mismatch");
    for (int i = 0; i < prior.num_bidders(); ++i) {
      if (q[i].size() != y[i].size()) {
        throw InputError("payment rule shape mismatch");
      }
      for (const Rational& payment : q[i]) {
        if (payment.Sign() < 0) throw InputError("negative interim payment");
      }
    }
  }
}

MonopolyResult MonopolyPrice(const Prior::Bidder& distribution) {
  const int k = static_cast<int>(distribution.support.size());
  if (k == 0 || distribution.support.size() != distribution.probabilities.size()) {
    throw InputError("malformed distribution");
  }
  MonopolyResult best{distribution.support[0], Rational(-1)};
  for (int r = 0; r < k; ++r) {
    Rational sale_probability;
    for (int v = r; v < k; ++v) sale_probability += distribution.probabilities[v];
    const Rational revenue = distribution.support[r] * sale_probability;
    if (revenue > best.revenue) {  // ties keep the lower price
      best = {distribution.support[r], revenue};
    }
  }
  return best;
}

NecessaryConditionReport NecessaryCondition(const Prior& prior,
                                            const InterimRule& rule) {
  rule.Validate(prior);
  Rational expected_winners;
  for (int i = 0; i < prior.num_bidders(); ++i) {
    for (int v = 0; v < prior.support_size(i); ++v) {
      expected_winners += prior.bidder(i).probabilities[v] * rule.y[i][v];
    }
  }
  NecessaryConditionReport report;
  report.slack = Rational(1) - expected_winners;
  report.holds = report.slack.Sign() >= 0;
  return report;
}

namespace {

// Evaluates one distinguished-valuation inequality exactly.
BorderInequality EvaluateInequality(const Prior& prior, const InterimRule& rule,
                                    std::vector<std::vector<int>> sets) {
  BorderInequality inequality;
  inequality.rhs = Rational(1);
  Rational product(1);
  for (int i = 0; i < prior.num_bidders(); ++i) {
    Rational mass;
    for (int v : sets[i]) {
      mass += prior.bidder(i).probabilities[v];
      inequality.lhs += prior.bidder(i).probabilities[v] * rule.y[i][v];
    }
    product *= Rational(1) - mass;
  }
  inequality.rhs -= product;
  inequality.distinguished = std::move(sets);
  return inequality;
}

}  // namespace

std::vector<BorderInequality> EnumerateBorderViolations(
    const Prior& prior, const InterimRule& rule, long max_choices) {
  rule.Validate(prior);
  const int n = prior.num_bidders();
  long total = 1;
  for (int i = 0; i < n; ++i) {
    if (prior.support_size(i) > 24 ||
        total > max_choices >> prior.support_size(i)) {
      throw ResourceError("distinguished-set enumeration exceeds the budget");
    }
    total <<= prior.support_size(i);
  }

  std::vector<BorderInequality> violated;
  std::vector<unsigned> masks(n, 0);
  while (true) {
    std::vector<std::vector<int>> sets(n);
    for (int i = 0; i < n; ++i) {
      for (int v = 0; v < prior.support_size(i); ++v) {
        if ((masks[i] >> v) & 1u) sets[i].push_back(v);
      }
    }
    BorderInequality inequality =
        EvaluateInequality(prior, rule, std::move(sets));
    if (inequality.Violation().Sign() > 0) {
      violated.push_back(std::move(inequality));
    }
    int i = 0;
    while (i < n &&
           masks[i] + 1 == (1u << prior.support_size(i))) {
      masks[i++] = 0;
    }
    if (i == n) break;
    ++masks[i];
  }
  std::stable_sort(violated.begin(), violated.end(),
                   [](const BorderInequality& a, const BorderInequality& b) {
                     return b.Violation() < a.Violation();
                   });
  return violated;
}

namespace {

// Valuation positions with positive probability, per bidder.
std::vector<std::vector<int>> PositiveSupports(const Prior& prior) {
  std::vector<std::vector<int>> kept(prior.num_bidders());
  for (int i = 0; i < prior.num_bidders(); ++i) {
    for (int v = 0; v < prior.support_size(i); ++v) {
      if (prior.bidder(i).probabilities[v].Sign() > 0) kept[i].push_back(v);
    }
  }
  return kept;
}

bool NextProfile(std::vector<int>* profile, const std::vector<int>& radix) {
  for (int i = static_cast<int>(profile->size()) - 1; i >= 0; --i) {
    if (++(*profile)[i] < radix[i]) return true;
    (*profile)[i] = 0;
  }
  return false;
}

}  // namespace

FeasibilityResult FeasibilityViaMaxflow(const Prior& prior,
                                        const InterimRule& rule) {
  rule.Validate(prior);
  const int n = prior.num_bidders();

  const NecessaryConditionReport necessary = NecessaryCondition(prior, rule);
  if (!necessary.holds) {
    // More than one expected winner: infeasible outright, certified by the
    // all-valuations inequality.
    FeasibilityResult result;
    result.feasible = false;
    std::vector<std::vector<int>> all_sets(n);
    for (int i = 0; i < n; ++i) {
      for (int v = 0; v < prior.support_size(i); ++v) all_sets[i].push_back(v);
    }
    result.cut_inequality =
        EvaluateInequality(prior, rule, std::move(all_sets));
    EQLAB_CHECK(result.cut_inequality->Violation().Sign() > 0);
    return result;
  }

  const std::vector<std::vector<int>> kept = PositiveSupports(prior);
  std::vector<int> radix(n);
  long num_profiles = 1;
  for (int i = 0; i < n; ++i) {
    radix[i] = static_cast<int>(kept[i].size());
    if (radix[i] == 0) throw InternalError("bidder with empty support");
    if (num_profiles > 2'000'000 / radix[i]) {
      throw ResourceError("profile space exceeds the flow-network budget");
    }
    num_profiles *= radix[i];
  }

  // Vertex ids: 0 = source; 1..P = profiles; then winner-valuation nodes
  // (i, v) over kept positions; then no-winner; last = sink.
  std::vector<std::vector<int>> wv_base(n);
  int next_id = 1 + static_cast<int>(num_profiles);
  for (int i = 0; i < n; ++i) {
    wv_base[i].assign(kept[i].size(), 0);
    for (size_t v = 0; v < kept[i].size(); ++v) {
      wv_base[i][v] = next_id++;
    }
  }
  const int no_winner = next_id++;
  const int sink = next_id++;
  FlowNetwork network(next_id, 0, sink);

  // Source arcs and the infinite profile fan-out.
  std::vector<int> profile(n, 0);
  std::vector<long> source_arc(num_profiles);
  std::vector<std::vector<long>> winner_arc(
      num_profiles, std::vector<long>(n, -1));
  long p = 0;
  Rational source_capacity;
  do {
    Rational mass(1);
    for (int i = 0; i < n; ++i) {
      mass *= prior.bidder(i).probabilities[kept[i][profile[i]]];
    }
    source_capacity += mass;
    source_arc[p] = static_cast<long>(network.arcs().size());
    network.AddArc(0, 1 + static_cast<int>(p), Capacity::Finite(mass));
    for (int i = 0; i < n; ++i) {
      winner_arc[p][i] = static_cast<long>(network.arcs().size());
      network.AddArc(1 + static_cast<int>(p), wv_base[i][profile[i]],
                     Capacity::Infinite());
    }
    network.AddArc(1 + static_cast<int>(p), no_winner, Capacity::Infinite());
    ++p;
  } while (NextProfile(&profile, radix));
  EQLAB_CHECK(p == num_profiles);
  // The profile probabilities are a distribution, so the source side of the
  // network carries total capacity exactly 1.
  EQLAB_CHECK(source_capacity == Rational(1));

  for (int i = 0; i < n; ++i) {
    for (size_t v = 0; v < kept[i].size(); ++v) {
      const int pos = kept[i][v];
      network.AddArc(wv_base[i][v], sink,
                     Capacity::Finite(prior.bidder(i).probabilities[pos] *
                                      rule.y[i][pos]));
    }
  }
  network.AddArc(no_winner, sink, Capacity::Finite(necessary.slack));

  const MaxFlowResult flow = ComputeMaxFlow(network);
  FeasibilityResult result;
  result.flow_value = flow.value;
  result.feasible = flow.value == Rational(1);

  if (result.feasible) {
    // Witness over the full profile space.  Pruned profiles with exactly one
    // zero-probability bidder inherit that bidder's interim probability so
    // the marginals reproduce y exactly; others carry no marginal mass.
    std::vector<int> full_radix(n);
    long full_profiles = 1;
    for (int i = 0; i < n; ++i) {
      full_radix[i] = prior.support_size(i);
      full_profiles *= full_radix[i];
    }
    ExPostRule witness;
    witness.x.assign(full_profiles, std::vector<Rational>(n, Rational(0)));

    std::vector<int> full(n, 0);
    long flat = 0;
    do {
      std::vector<int> zero_prob_bidders;
      for (int i = 0; i < n; ++i) {
        if (prior.bidder(i).probabilities[full[i]].Sign() == 0) {
          zero_prob_bidders.push_back(i);
        }
      }
      if (zero_prob_bidders.empty()) {
        // Locate the pruned-profile index.
        long pruned = 0;
        Rational mass(1);
        for (int i = 0; i < n; ++i) {
          const auto it =
              std::find(kept[i].begin(), kept[i].end(), full[i]);
          pruned = pruned * radix[i] +
                   static_cast<long>(it - kept[i].begin());
          mass *= prior.bidder(i).probabilities[full[i]];
        }
        for (int i = 0; i < n; ++i) {
          witness.x[flat][i] = flow.flow[winner_arc[pruned][i]] / mass;
        }
      } else if (zero_prob_bidders.size() == 1) {
        const int i = zero_prob_bidders[0];
        witness.x[flat][i] = rule.y[i][full[i]];
      }
      ++flat;
    } while (NextProfile(&full, full_radix));
    result.witness = std::move(witness);
  } else {
    // Min cut -> violated inequality: S_i holds the valuations of i not
    // represented among the cut's source-side profiles.
    std::vector<bool> in_cut(network.num_vertices(), false);
    for (int u : flow.min_cut) in_cut[u] = true;
    std::vector<std::vector<bool>> represented(n);
    for (int i = 0; i < n; ++i) represented[i].assign(kept[i].size(), false);
    bool any_profile = false;
    std::vector<int> walk(n, 0);
    long idx = 0;
    do {
      if (in_cut[1 + static_cast<int>(idx)]) {
        any_profile = true;
        for (int i = 0; i < n; ++i) represented[i][walk[i]] = true;
      }
      ++idx;
    } while (NextProfile(&walk, radix));
    EQLAB_CHECK(any_profile);  // an empty source side cuts capacity >= 1

    std::vector<std::vector<int>> sets(n);
    for (int i = 0; i < n; ++i) {
      for (size_t v = 0; v < kept[i].size(); ++v) {
        if (!represented[i][v]) sets[i].push_back(kept[i][v]);
      }
    }
    result.cut_inequality = EvaluateInequality(prior, rule, std::move(sets));
    EQLAB_CHECK(result.cut_inequality->Violation().Sign() > 0);
  }
  return result;
}

BICLPResult OptimalBicRevenue(const Prior& prior, long max_choices) {
  const int n = prior.num_bidders();
  // Variable layout: all y's by (bidder, position), then all q's.
  std::vector<int> y_base(n), q_base(n);
  int num_y = 0;
  for (int i = 0; i < n; ++i) {
    y_base[i] = num_y;
    num_y += prior.support_size(i);
  }
  for (int i = 0; i < n; ++i) q_base[i] = num_y + y_base[i];
  const int num_vars = 2 * num_y;

  long border_rows = 1;
  for (int i = 0; i < n; ++i) {
    if (prior.support_size(i) > 24 ||
        border_rows > max_choices >> prior.support_size(i)) {
      throw ResourceError("Border constraint family exceeds the budget");
    }
    border_rows <<= prior.support_size(i);
  }

  std::vector<Rational> objective(num_vars, Rational(0));
  for (int i = 0; i < n; ++i) {
    for (int v = 0; v < prior.support_size(i); ++v) {
      objective[q_base[i] + v] = prior.bidder(i).probabilities[v];
    }
  }
  LinearProgram lp(Sense::kMaximize, objective);
  for (int i = 0; i < n; ++i) {
    for (int v = 0; v < prior.support_size(i); ++v) {
      lp.SetBounds(y_base[i] + v, Rational(0), Rational(1));
    }
  }

  // Truthfulness: v y(v) - q(v) >= v y(v') - q(v').
  for (int i = 0; i < n; ++i) {
    for (int v = 0; v < prior.support_size(i); ++v) {
      for (int w = 0; w < prior.support_size(i); ++w) {
        if (v == w) continue;
        std::vector<Rational> row(num_vars, Rational(0));
        row[y_base[i] + v] += prior.bidder(i).support[v];
        row[q_base[i] + v] -= Rational(1);
        row[y_base[i] + w] -= prior.bidder(i).support[v];
        row[q_base[i] + w] += Rational(1);
        lp.AddConstraint(std::move(row), Relation::kGreaterEqual, Rational(0));
      }
      // Interim individual rationality.
      std::vector<Rational> iir(num_vars, Rational(0));
      iir[y_base[i] + v] = prior.bidder(i).support[v];
      iir[q_base[i] + v] = Rational(-1);
      lp.AddConstraint(std::move(iir), Relation::kGreaterEqual, Rational(0));
    }
  }

  // The Border family (the all-empty choice is the vacuous 0 <= 0 row and is
  // skipped).
  std::vector<unsigned> masks(n, 0);
  while (true) {
    int i = 0;
    while (i < n && masks[i] + 1 == (1u << prior.support_size(i))) {
      masks[i++] = 0;
    }
    if (i == n) break;
    ++masks[i];

    std::vector<Rational> row(num_vars, Rational(0));
    Rational rhs(1), product(1);
    for (int b = 0; b < n; ++b) {
      Rational mass;
      for (int v = 0; v < prior.support_size(b); ++v) {
        if ((masks[b] >> v) & 1u) {
          row[y_base[b] + v] = prior.bidder(b).probabilities[v];
          mass += prior.bidder(b).probabilities[v];
        }
      }
      product *= Rational(1) - mass;
    }
    rhs -= product;
    lp.AddConstraint(std::move(row), Relation::kLessEqual, std::move(rhs));
  }

  const LPSolution solution = SolveLP(lp);
  EQLAB_CHECK(solution.status == LPStatus::kOptimal);

  BICLPResult result;
  result.revenue = solution.objective_value;
  result.rule.y.assign(n, {});
  result.rule.q.assign(n, {});
  for (int i = 0; i < n; ++i) {
    for (int v = 0; v < prior.support_size(i); ++v) {
      result.rule.y[i].push_back(solution.point[y_base[i] + v]);
      result.rule.q[i].push_back(solution.point[q_base[i] + v]);
    }
  }
  // The optimal interim rule is realizable as an actual auction.
  EQLAB_CHECK(FeasibilityViaMaxflow(prior, result.rule).feasible);
  return result;
}

}  // namespace eqlab
