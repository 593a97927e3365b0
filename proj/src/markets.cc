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

#include "eqlab/markets.h"

#include <bit>

#include "eqlab/errors.h"
#include "eqlab/linear_program.h"

namespace eqlab {

Market::Market(int num_items, std::vector<std::vector<Rational>> valuations,
               std::vector<std::string> item_names)
    : num_items_(num_items),
      valuations_(std::move(valuations)),
      item_names_(std::move(item_names)) {
  if (num_items_ < 1 || num_items_ > 20) {
    throw InputError("market needs between 1 and 20 items");
  }
  if (valuations_.empty()) throw InputError("market needs at least one player");
  const long bundles = 1L << num_items_;
  for (const auto& table : valuations_) {
    if (static_cast<long>(table.size()) != bundles) {
      throw InputError("valuation table must cover every bundle");
    }
    if (table[0].Sign() != 0) {
      throw InputError("the empty bundle must have value 0");
    }
    for (Bundle s = 0; s < static_cast<Bundle>(bundles); ++s) {
      if (table[s].Sign() < 0) throw InputError("negative bundle value");
      // Monotonicity: dropping any single item cannot raise the value.
      for (int j = 0; j < num_items_; ++j) {
        if ((s >> j) & 1u) {
          if (table[s] < table[s & ~(1u << j)]) {
            throw InputError("valuation is not monotone");
          }
        }
      }
    }
  }
  if (item_names_.empty()) {
    for (int j = 0; j < num_items_; ++j) {
      item_names_.push_back(std::string(1, static_cast<char>('A' + j)));
    }
  }
  if (static_cast<int>(item_names_.size()) != num_items_) {
    throw InputError("item name list does not match the item count");
  }
}

namespace {

Rational BundlePrice(const PriceVector& prices, Bundle bundle) {
  Rational total;
  for (size_t j = 0; j < prices.prices.size(); ++j) {
    if ((bundle >> j) & 1u) total += prices.prices[j];
  }
  return total;
}

// Tie order: fewer items first, then lexicographic on the sorted item list.
// For bitmasks over 'least index = A', lexicographic on sorted names is the
// numeric order of the lowest set bits; comparing reversed-bit masks
// numerically realizes it.
bool BundleOrderedBefore(Bundle a, Bundle b, int num_items) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  for (int j = 0; j < num_items; ++j) {
    const bool in_a = (a >> j) & 1u, in_b = (b >> j) & 1u;
    if (in_a != in_b) return in_a;  // earlier item present wins
  }
  return false;
}

}  // namespace

DemandResult DemandOracle(const Market& market, int player,
                          const PriceVector& prices) {
  if (player < 0 || player >= market.num_players()) {
    throw InputError("player index out of range");
  }
  if (static_cast<int>(prices.prices.size()) != market.num_items()) {
    throw InputError("price vector length mismatch");
  }
  for (const Rational& p : prices.prices) {
    if (p.Sign() < 0) throw InputError("negative price");
  }
  DemandResult best;  // empty bundle, utility 0
  for (Bundle s = 1; s < static_cast<Bundle>(market.num_bundles()); ++s) {
    const Rational utility = market.Value(player, s) - BundlePrice(prices, s);
    if (utility > best.utility ||
        (utility == best.utility &&
         BundleOrderedBefore(s, best.bundle, market.num_items()))) {
      best.bundle = s;
      best.utility = utility;
    }
  }
  return best;
}

WalrasianCheck VerifyWalrasian(const Market& market, const Allocation& alloc,
                               const PriceVector& prices) {
  if (static_cast<int>(alloc.bundles.size()) != market.num_players()) {
    throw InputError("allocation must assign a bundle to every player");
  }
  WalrasianCheck check;

  // (W2) disjointness.
  Bundle seen = 0;
  for (int i = 0; i < market.num_players(); ++i) {
    const Bundle overlap = seen & alloc.bundles[i];
    if (overlap != 0) {
      check.violated = WalrasianCondition::kW2Disjoint;
      check.witness_player = i;
      check.witness_item = std::countr_zero(overlap);
      return check;
    }
    seen |= alloc.bundles[i];
  }
  // (W3) market clearing.
  const Bundle all = static_cast<Bundle>(market.num_bundles() - 1);
  if (seen != all) {
    check.violated = WalrasianCondition::kW3Cleared;
    check.witness_item = std::countr_zero(all & ~seen);
    return check;
  }
  // (W1) buyer optimality, argmax membership via the demand oracle.
  for (int i = 0; i < market.num_players(); ++i) {
    const Rational utility = market.Value(i, alloc.bundles[i]) -
                             BundlePrice(prices, alloc.bundles[i]);
    const DemandResult best = DemandOracle(market, i, prices);
    if (utility < best.utility) {
      check.violated = WalrasianCondition::kW1BuyerOptimality;
      check.witness_player = i;
      return check;
    }
  }
  check.holds = true;
  return check;
}

WelfareResult MaxWelfareBruteforce(const Market& market, long max_assignments) {
  const int k = market.num_players();
  const int m = market.num_items();
  long total = 1;
  for (int j = 0; j < m; ++j) {
    total *= (k + 1);
    if (total > max_assignments) {
      throw ResourceError("welfare enumeration exceeds the budget");
    }
  }

  WelfareResult best{Allocation{std::vector<Bundle>(k, 0)}, Rational(0)};
  std::vector<int> assignment(m, 0);  // 0 = discard, 1..k = players
  bool first = true;
  while (true) {
    std::vector<Bundle> bundles(k, 0);
    for (int j = 0; j < m; ++j) {
      if (assignment[j] > 0) bundles[assignment[j] - 1] |= 1u << j;
    }
    Rational welfare;
    for (int i = 0; i < k; ++i) welfare += market.Value(i, bundles[i]);
    if (first || welfare > best.value) {
      best = {Allocation{std::move(bundles)}, std::move(welfare)};
      first = false;
    }
    int j = 0;
    while (j < m && assignment[j] == k) assignment[j++] = 0;
    if (j == m) break;
    ++assignment[j];
  }
  return best;
}

ConfigLPResult SolveConfigurationLP(const Market& market, long max_variables) {
  const int k = market.num_players();
  const int m = market.num_items();
  const long bundles = market.num_bundles();
  const long variables = k * bundles;
  if (variables > max_variables) {
    throw ResourceError("configuration LP exceeds the variable budget");
  }

  // Variable layout: x_{iS} at i * bundles + S.
  std::vector<Rational> objective(variables);
  for (int i = 0; i < k; ++i) {
    for (long s = 0; s < bundles; ++s) {
      objective[i * bundles + s] = market.Value(i, static_cast<Bundle>(s));
    }
  }
  LinearProgram lp(Sense::kMaximize, objective);

  // One bundle per player (includes the empty bundle).
  for (int i = 0; i < k; ++i) {
    std::vector<Rational> row(variables, Rational(0));
    for (long s = 0; s < bundles; ++s) row[i * bundles + s] = Rational(1);
    lp.AddConstraint(std::move(row), Relation::kEqual, Rational(1));
  }
  // Each item sold at most once.
  for (int j = 0; j < m; ++j) {
    std::vector<Rational> row(variables, Rational(0));
    for (int i = 0; i < k; ++i) {
      for (long s = 0; s < bundles; ++s) {
        if ((s >> j) & 1) row[i * bundles + s] = Rational(1);
      }
    }
    lp.AddConstraint(std::move(row), Relation::kLessEqual, Rational(1));
  }

  const LPSolution solution = SolveLP(lp);
  EQLAB_CHECK(solution.status == LPStatus::kOptimal);

  ConfigLPResult result;
  result.value = solution.objective_value;
  result.x.assign(k, std::vector<Rational>(bundles));
  for (int i = 0; i < k; ++i) {
    for (long s = 0; s < bundles; ++s) {
      result.x[i][s] = solution.point[i * bundles + s];
    }
  }
  result.player_utilities.assign(solution.dual.begin(),
                                 solution.dual.begin() + k);
  result.item_prices.assign(solution.dual.begin() + k,
                            solution.dual.begin() + k + m);
  return result;
}

WalrasianCertificate WalrasianExists(const Market& market) {
  const ConfigLPResult lp = SolveConfigurationLP(market);
  const WelfareResult integral = MaxWelfareBruteforce(market);

  WalrasianCertificate certificate;
  certificate.lp_value = lp.value;
  certificate.integral_value = integral.value;
  certificate.fractional_point = lp.x;
  EQLAB_CHECK(lp.value >= integral.value);  // the LP relaxes the integral
  if (lp.value != integral.value) {
    certificate.exists = false;  // strict gap: no integral optimum
    return certificate;
  }

  // Integral optimum + optimal dual prices satisfy complementary slackness,
  // hence form an equilibrium.  Items the brute force discarded have price 0
  // by slackness; hand them to the first player (monotonicity keeps her
  // bundle utility-maximizing).
  certificate.exists = true;
  certificate.allocation = integral.allocation;
  certificate.prices.prices = lp.item_prices;
  Bundle allocated = 0;
  for (Bundle b : certificate.allocation.bundles) allocated |= b;
  const Bundle all = static_cast<Bundle>(market.num_bundles() - 1);
  certificate.allocation.bundles[0] |= all & ~allocated;

  const WalrasianCheck check =
      VerifyWalrasian(market, certificate.allocation, certificate.prices);
  EQLAB_CHECK(check.holds);
  return certificate;
}

bool FirstWelfareCheck(const Market& market, const Allocation& alloc,
                       const PriceVector& prices) {
  const WalrasianCheck check = VerifyWalrasian(market, alloc, prices);
  if (!check.holds) {
    throw InputError("input is not a Walrasian equilibrium");
  }
  Rational welfare;
  for (int i = 0; i < market.num_players(); ++i) {
    welfare += market.Value(i, alloc.bundles[i]);
  }
  return welfare == MaxWelfareBruteforce(market).value;
}

}  // namespace eqlab
