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

#ifndef EQLAB_MARKETS_H_
#define EQLAB_MARKETS_H_

#include <optional>
#include <string>
#include <vector>

#include "eqlab/rational.h"

namespace eqlab {

// Bundles are bitmasks over item indices 0..m-1.
using Bundle = unsigned;

// Market with indivisible items: every player has a full valuation table
// over all 2^m bundles, with v(empty) = 0 and monotone values.
class Market {
 public:
  // valuations[i][mask] = player i's value for the bundle `mask`.
  Market(int num_items, std::vector<std::vector<Rational>> valuations,
         std::vector<std::string> item_names = {});

  int num_players() const { return static_cast<int>(valuations_.size()); }
  int num_items() const { return num_items_; }
  long num_bundles() const { return 1L << num_items_; }
  const Rational& Value(int player, Bundle bundle) const {
    return valuations_[player][bundle];
  }
  const std::vector<std::string>& item_names() const { return item_names_; }

 private:
  int num_items_;
  std::vector<std::vector<Rational>> valuations_;
  std::vector<std::string> item_names_;
};

// Pairwise-disjoint bundles, one per player (items may remain unallocated
// only where (W3) is not being asserted).
struct Allocation {
  std::vector<Bundle> bundles;
};

struct PriceVector {
  std::vector<Rational> prices;  // nonnegative, one per item
};

// Utility-maximizing bundle at given prices; ties break toward fewer items,
// then lexicographically on the sorted item list.
struct DemandResult {
  Bundle bundle = 0;
  Rational utility;
};

DemandResult DemandOracle(const Market& market, int player,
                          const PriceVector& prices);

enum class WalrasianCondition { kW1BuyerOptimality, kW2Disjoint, kW3Cleared };

struct WalrasianCheck {
  bool holds = false;
  std::optional<WalrasianCondition> violated;
  int witness_player = -1;  // for (W1)/(W2): the offending player
  int witness_item = -1;    // for (W2)/(W3): the offending item
};

WalrasianCheck VerifyWalrasian(const Market& market, const Allocation& alloc,
                               const PriceVector& prices);

struct WelfareResult {
  Allocation allocation;
  Rational value;
};

// Exact integral optimum by assigning each item independently to a player or
// to a discard bin; ties keep the first assignment in enumeration order.
WelfareResult MaxWelfareBruteforce(const Market& market,
                                   long max_assignments = 40'000'000);

struct ConfigLPResult {
  // x[player][bundle mask], the fractional assignment.
  std::vector<std::vector<Rational>> x;
  Rational value;
  std::vector<Rational> player_utilities;  // duals u_i
  std::vector<Rational> item_prices;       // duals p_j
};

// The configuration LP: maximize sum v_i(S) x_{iS} subject to each player
// receiving one (fractional) bundle and each item being sold at most once;
// solved explicitly with one variable per (player, bundle).
ConfigLPResult SolveConfigurationLP(const Market& market,
                                    long max_variables = 1'000'000);

struct WalrasianCertificate {
  bool exists = false;
  // When exists: an equilibrium that passes VerifyWalrasian.
  Allocation allocation;
  PriceVector prices;
  // Always: the LP and integral optima; a strict gap certifies
  // non-existence, with the fractional point as the witness.
  Rational lp_value;
  Rational integral_value;
  std::vector<std::vector<Rational>> fractional_point;
};

// Walrasian equilibria exist iff the configuration LP has an integral
// optimum; on existence the dual prices plus an optimal integral allocation
// form an equilibrium (checked before returning).
WalrasianCertificate WalrasianExists(const Market& market);

// Cross-module assertion of the First Welfare Theorem: a verified Walrasian
// equilibrium carries maximum welfare.  Input must pass VerifyWalrasian.
bool FirstWelfareCheck(const Market& market, const Allocation& alloc,
                       const PriceVector& prices);

}  // namespace eqlab

#endif  // EQLAB_MARKETS_H_
