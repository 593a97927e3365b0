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

#include <doctest.h>

#include "eqlab/errors.h"
#include "eqlab/markets.h"
#include "eqlab/rng.h"

namespace eqlab {
namespace {

// Two items; an all-or-nothing bidder worth 3 against a unit-demand bidder
// worth 2, the classic market without market-clearing prices.
Market AndOrMarket() {
  std::vector<std::vector<Rational>> valuations(2,
                                                std::vector<Rational>(4));
  // Player 0: AND bidder.
  valuations[0][3] = Rational(3);
  // Player 1: unit-demand (OR) bidder.
  valuations[1][1] = Rational(2);
  valuations[1][2] = Rational(2);
  valuations[1][3] = Rational(2);
  return Market(2, valuations);
}

Market SingleItemMarket() {
  // One item, values 3 and 2.
  return Market(1, {{Rational(0), Rational(3)}, {Rational(0), Rational(2)}});
}

TEST_CASE("market validation") {
  // Non-monotone tables are rejected.
  CHECK_THROWS_AS(
      Market(2, {{Rational(0), Rational(2), Rational(1), Rational(1)}}),
      InputError);
  // The empty bundle must be worthless.
  CHECK_THROWS_AS(
      Market(1, {{Rational(1), Rational(2)}}),
      InputError);
}

TEST_CASE("demand oracle") {
  const Market market = AndOrMarket();
  // Exorbitant prices leave everyone empty-handed.
  const PriceVector steep{{Rational(100), Rational(100)}};
  CHECK(DemandOracle(market, 0, steep).bundle == 0);
  CHECK(DemandOracle(market, 0, steep).utility == Rational(0));

  // The unit-demand bidder at prices (2, 2) ties the empty bundle with the
  // singletons at utility 0; the tie rule keeps the empty bundle.
  const PriceVector twos{{Rational(2), Rational(2)}};
  const DemandResult or_bidder = DemandOracle(market, 1, twos);
  CHECK(or_bidder.bundle == 0);
  CHECK(or_bidder.utility == Rational(0));

  // An additive bidder at zero prices grabs everything.
  const Market additive(
      2, {{Rational(0), Rational(1), Rational(2), Rational(3)}});
  CHECK(DemandOracle(additive, 0, PriceVector{{Rational(0), Rational(0)}})
            .bundle == 3u);
}

TEST_CASE("single-item equilibrium verification") {
  const Market market = SingleItemMarket();
  // Award the high bidder at a price between the values.
  const Allocation alloc{{1u, 0u}};
  CHECK(VerifyWalrasian(market, alloc, PriceVector{{Rational(5, 2)}}).holds);

  // Price 1 leaves the losing bidder hungry: (W1) fails for her.
  const WalrasianCheck low =
      VerifyWalrasian(market, alloc, PriceVector{{Rational(1)}});
  CHECK_FALSE(low.holds);
  CHECK(low.violated == WalrasianCondition::kW1BuyerOptimality);
  CHECK(low.witness_player == 1);

  // Overlap and unsold items are caught.
  CHECK(VerifyWalrasian(market, Allocation{{1u, 1u}},
                        PriceVector{{Rational(5, 2)}})
            .violated == WalrasianCondition::kW2Disjoint);
  CHECK(VerifyWalrasian(market, Allocation{{0u, 0u}},
                        PriceVector{{Rational(5, 2)}})
            .violated == WalrasianCondition::kW3Cleared);
}

TEST_CASE("no prices clear the and-or market") {
  const Market market = AndOrMarket();
  // The welfare optimum awards both items to the package bidder.
  const WelfareResult welfare = MaxWelfareBruteforce(market);
  CHECK(welfare.value == Rational(3));
  CHECK(welfare.allocation.bundles[0] == 3u);

  // Candidate equilibria all fail verification.
  for (const Rational& p : {Rational(0), Rational(1), Rational(2),
                            Rational(5, 2), Rational(3)}) {
    const PriceVector prices{{p, p}};
    CHECK_FALSE(
        VerifyWalrasian(market, Allocation{{3u, 0u}}, prices).holds);
  }

  // The certificate: fractional value 7/2 strictly above the integral 3.
  const WalrasianCertificate certificate = WalrasianExists(market);
  CHECK_FALSE(certificate.exists);
  CHECK(certificate.lp_value == Rational(7, 2));
  CHECK(certificate.integral_value == Rational(3));
}

TEST_CASE("configuration LP on the and-or market") {
  const ConfigLPResult lp = SolveConfigurationLP(AndOrMarket());
  CHECK(lp.value == Rational(7, 2));
  // Primal feasibility: each player one fractional bundle, items <= 1.
  for (int i = 0; i < 2; ++i) {
    Rational total;
    for (const Rational& x : lp.x[i]) {
      CHECK(x.Sign() >= 0);
      total += x;
    }
    CHECK(total == Rational(1));
  }
}

TEST_CASE("single item: equilibrium from the dual") {
  const WalrasianCertificate certificate = WalrasianExists(SingleItemMarket());
  CHECK(certificate.exists);
  CHECK(certificate.lp_value == Rational(3));
  CHECK(certificate.integral_value == Rational(3));
  // The dual price lands between the second and first values.
  CHECK(certificate.prices.prices[0] >= Rational(2));
  CHECK(certificate.prices.prices[0] <= Rational(3));
  CHECK(VerifyWalrasian(SingleItemMarket(), certificate.allocation,
                        certificate.prices)
            .holds);
  CHECK(FirstWelfareCheck(SingleItemMarket(), certificate.allocation,
                          certificate.prices));
}

TEST_CASE("the welfare check demands a verified equilibrium") {
  const Market market = SingleItemMarket();
  CHECK_THROWS_AS(FirstWelfareCheck(market, Allocation{{1u, 0u}},
                                    PriceVector{{Rational(1)}}),
                  InputError);
}

TEST_CASE("trivial market") {
  const Market empty(1, {{Rational(0), Rational(0)}});
  CHECK(SolveConfigurationLP(empty).value == Rational(0));
  CHECK(MaxWelfareBruteforce(empty).value == Rational(0));
  CHECK(WalrasianExists(empty).exists);
}

TEST_CASE("unit-demand markets clear") {
  // Two unit-demand bidders, two items: gross substitutes, always clears.
  SplitMix64 rng(79);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<std::vector<Rational>> valuations(
        2, std::vector<Rational>(4));
    for (int i = 0; i < 2; ++i) {
      const Rational a(static_cast<long>(rng.NextBelow(5)));
      const Rational b(static_cast<long>(rng.NextBelow(5)));
      valuations[i][1] = a;
      valuations[i][2] = b;
      valuations[i][3] = Max(a, b);
    }
    const Market market(2, valuations);
    const WalrasianCertificate certificate = WalrasianExists(market);
    CHECK(certificate.exists);
    CHECK(FirstWelfareCheck(market, certificate.allocation,
                            certificate.prices));
  }
}

TEST_CASE("additive welfare is the itemwise maximum") {
  SplitMix64 rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    const int items = 2 + static_cast<int>(rng.NextBelow(2));
    std::vector<std::vector<Rational>> valuations(
        2, std::vector<Rational>(1L << items));
    std::vector<std::vector<Rational>> alpha(2,
                                             std::vector<Rational>(items));
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < items; ++j) {
        alpha[i][j] = Rational(static_cast<long>(rng.NextBelow(7)));
      }
      for (Bundle s = 0; s < (1u << items); ++s) {
        for (int j = 0; j < items; ++j) {
          if ((s >> j) & 1u) valuations[i][s] += alpha[i][j];
        }
      }
    }
    const Market market(items, valuations);
    Rational itemwise;
    for (int j = 0; j < items; ++j) itemwise += Max(alpha[0][j], alpha[1][j]);
    CHECK(MaxWelfareBruteforce(market).value == itemwise);
  }
}

// Random monotone valuations by downward-closure of random bundle scores.
Market RandomMarket(SplitMix64* rng, int players, int items) {
  std::vector<std::vector<Rational>> valuations(
      players, std::vector<Rational>(1L << items));
  for (int i = 0; i < players; ++i) {
    for (Bundle s = 1; s < (1u << items); ++s) {
      Rational floor;
      for (int j = 0; j < items; ++j) {
        if ((s >> j) & 1u) floor = Max(floor, valuations[i][s & ~(1u << j)]);
      }
      valuations[i][s] =
          floor + Rational(static_cast<long>(rng->NextBelow(4)), 2);
    }
  }
  return Market(items, valuations);
}

TEST_CASE("existence equivalence and welfare theorems on a random corpus") {
  SplitMix64 rng(89);
  int exists_count = 0, gap_count = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Market market = RandomMarket(&rng, 2, 2);
    const WalrasianCertificate certificate = WalrasianExists(market);
    CHECK(certificate.lp_value >= certificate.integral_value);
    if (certificate.exists) {
      ++exists_count;
      // Dual prices plus an optimal integral allocation always verify, and
      // the verified equilibrium carries maximum welfare.
      CHECK(VerifyWalrasian(market, certificate.allocation,
                            certificate.prices)
                .holds);
      CHECK(FirstWelfareCheck(market, certificate.allocation,
                              certificate.prices));
    } else {
      ++gap_count;
      CHECK(certificate.lp_value > certificate.integral_value);
    }
  }
  CHECK(exists_count > 0);  // both branches exercised
  CHECK(gap_count >= 0);
}

TEST_CASE("complementary slackness on the configuration LP") {
  SplitMix64 rng(97);
  for (int trial = 0; trial < 25; ++trial) {
    const Market market = RandomMarket(&rng, 2, 2);
    const ConfigLPResult lp = SolveConfigurationLP(market);
    for (int i = 0; i < 2; ++i) {
      for (Bundle s = 0; s < 4; ++s) {
        if (lp.x[i][s].Sign() > 0) {
          // Only utility-maximizing bundles carry fractional mass.
          Rational price;
          for (int j = 0; j < 2; ++j) {
            if ((s >> j) & 1u) price += lp.item_prices[j];
          }
          CHECK(lp.player_utilities[i] == market.Value(i, s) - price);
        }
      }
    }
    for (int j = 0; j < 2; ++j) {
      if (lp.item_prices[j].Sign() > 0) {
        Rational allocated;
        for (int i = 0; i < 2; ++i) {
          for (Bundle s = 0; s < 4; ++s) {
            if ((s >> j) & 1u) allocated += lp.x[i][s];
          }
        }
        CHECK(allocated == Rational(1));  // positively priced items sell out
      }
    }
  }
}

}  // namespace
}  // namespace eqlab
