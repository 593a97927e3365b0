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

#include "eqlab/json_io.h"

#include <fstream>
#include <sstream>

#include "eqlab/errors.h"

namespace eqlab {

namespace {

std::string ProfileKey(const std::vector<int>& profile) {
  std::ostringstream oss;
  for (size_t i = 0; i < profile.size(); ++i) {
    if (i > 0) oss << ',';
    oss << profile[i];
  }
  return oss.str();
}

std::vector<int> ProfileFromKey(const std::string& key, int players) {
  std::vector<int> profile;
  std::istringstream iss(key);
  std::string token;
  while (std::getline(iss, token, ',')) {
    try {
      profile.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw InputError("bad profile key '" + key + "'");
    }
  }
  if (static_cast<int>(profile.size()) != players) {
    throw InputError("profile key '" + key + "' has wrong arity");
  }
  return profile;
}

}  // namespace

Json RationalToJson(const Rational& value) { return value.ToString(); }

Rational RationalFromJson(const Json& value) {
  if (value.is_number_integer()) {
    return Rational(static_cast<long long>(value.get<long long>()));
  }
  if (!value.is_string()) {
    throw InputError("rationals must be \"p/q\" strings, got: " + value.dump());
  }
  return Rational::FromString(value.get<std::string>());
}

Json GameToJson(const NormalFormGame& game) {
  Json payoffs = Json::object();
  for (long flat = 0; flat < game.num_outcomes(); ++flat) {
    Json cell = Json::array();
    for (int p = 0; p < game.num_players(); ++p) {
      cell.push_back(RationalToJson(game.Payoff(p, flat)));
    }
    payoffs[ProfileKey(game.ProfileFromFlat(flat))] = std::move(cell);
  }
  Json json;
  json["players"] = game.num_players();
  json["strategies"] = game.strategy_counts();
  json["payoffs"] = std::move(payoffs);
  return json;
}

NormalFormGame GameFromJson(const Json& json) {
  if (!json.is_object() || !json.contains("players") ||
      !json.contains("strategies") || !json.contains("payoffs")) {
    throw InputError("game JSON needs players, strategies, payoffs");
  }
  const int players = json.at("players").get<int>();
  std::vector<int> counts =
      json.at("strategies").get<std::vector<int>>();
  if (static_cast<int>(counts.size()) != players) {
    throw InputError("strategies list does not match the player count");
  }
  long outcomes = 1;
  for (int c : counts) {
    if (c < 1) throw InputError("player with no strategies");
    outcomes *= c;
  }
  std::vector<std::vector<Rational>> payoffs(
      players, std::vector<Rational>(outcomes));
  std::vector<bool> seen(outcomes, false);
  // A throwaway game gives flat indexing over profiles.
  NormalFormGame shape(counts,
                       std::vector<std::vector<Rational>>(
                           players, std::vector<Rational>(outcomes)));
  for (const auto& [key, cell] : json.at("payoffs").items()) {
    const long flat = shape.FlatIndex(ProfileFromKey(key, players));
    if (seen[flat]) throw InputError("duplicate payoff entry: " + key);
    seen[flat] = true;
    if (!cell.is_array() || static_cast<int>(cell.size()) != players) {
      throw InputError("payoff entry must list one value per player");
    }
    for (int p = 0; p < players; ++p) {
      payoffs[p][flat] = RationalFromJson(cell[p]);
    }
  }
  for (long flat = 0; flat < outcomes; ++flat) {
    if (!seen[flat]) throw InputError("payoff tensor not total");
  }
  return NormalFormGame(std::move(counts), std::move(payoffs));
}

Json GameToJson(const BimatrixGame& game) {
  return GameToJson(NormalFormGame::FromBimatrix(game));
}

BimatrixGame BimatrixFromJson(const Json& json) {
  const NormalFormGame game = GameFromJson(json);
  if (game.num_players() != 2) {
    throw InputError("expected a two-player game");
  }
  const int m = game.num_strategies(0), n = game.num_strategies(1);
  Matrix a(m, n), b(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const long flat = game.FlatIndex({i, j});
      a.at(i, j) = game.Payoff(0, flat);
      b.at(i, j) = game.Payoff(1, flat);
    }
  }
  return BimatrixGame(std::move(a), std::move(b));
}

Json JointDistributionToJson(const JointDistribution& rho) {
  NormalFormGame shape(
      rho.strategy_counts(),
      std::vector<std::vector<Rational>>(
          rho.strategy_counts().size(),
          std::vector<Rational>(rho.num_outcomes())));
  Json probabilities = Json::object();
  for (long flat = 0; flat < rho.num_outcomes(); ++flat) {
    if (rho.Probability(flat).Sign() != 0) {
      probabilities[ProfileKey(shape.ProfileFromFlat(flat))] =
          RationalToJson(rho.Probability(flat));
    }
  }
  Json json;
  json["strategies"] = rho.strategy_counts();
  json["probabilities"] = std::move(probabilities);
  return json;
}

JointDistribution JointDistributionFromJson(const Json& json) {
  std::vector<int> counts = json.at("strategies").get<std::vector<int>>();
  long outcomes = 1;
  for (int c : counts) outcomes *= c;
  NormalFormGame shape(counts,
                       std::vector<std::vector<Rational>>(
                           counts.size(), std::vector<Rational>(outcomes)));
  std::vector<Rational> probabilities(outcomes, Rational(0));
  for (const auto& [key, value] : json.at("probabilities").items()) {
    probabilities[shape.FlatIndex(
        ProfileFromKey(key, static_cast<int>(counts.size())))] =
        RationalFromJson(value);
  }
  return JointDistribution(std::move(counts), std::move(probabilities));
}

namespace {
std::vector<std::string> BundleNames(const Market& market, Bundle bundle) {
  std::vector<std::string> names;
  for (int j = 0; j < market.num_items(); ++j) {
    if ((bundle >> j) & 1u) names.push_back(market.item_names()[j]);
  }
  return names;
}
}  // namespace

Json MarketToJson(const Market& market) {
  Json valuations = Json::array();
  for (int i = 0; i < market.num_players(); ++i) {
    Json table = Json::array();
    for (Bundle s = 1; s < static_cast<Bundle>(market.num_bundles()); ++s) {
      Json entry;
      entry["bundle"] = BundleNames(market, s);
      entry["value"] = RationalToJson(market.Value(i, s));
      table.push_back(std::move(entry));
    }
    valuations.push_back(std::move(table));
  }
  Json json;
  json["items"] = market.item_names();
  json["valuations"] = std::move(valuations);
  return json;
}

Market MarketFromJson(const Json& json) {
  const std::vector<std::string> items =
      json.at("items").get<std::vector<std::string>>();
  const int m = static_cast<int>(items.size());
  auto item_index = [&items](const std::string& name) {
    for (size_t j = 0; j < items.size(); ++j) {
      if (items[j] == name) return static_cast<int>(j);
    }
    throw InputError("unknown item '" + name + "'");
  };
  std::vector<std::vector<Rational>> tables;
  for (const Json& player : json.at("valuations")) {
    std::vector<Rational> table(1L << m, Rational(0));
    std::vector<bool> seen(1L << m, false);
    seen[0] = true;
    for (const Json& entry : player) {
      Bundle mask = 0;
      for (const Json& name : entry.at("bundle")) {
        mask |= 1u << item_index(name.get<std::string>());
      }
      if (mask == 0) {
        if (RationalFromJson(entry.at("value")).Sign() != 0) {
          throw InputError("the empty bundle must have value 0");
        }
        continue;
      }
      if (seen[mask]) throw InputError("duplicate bundle entry");
      seen[mask] = true;
      table[mask] = RationalFromJson(entry.at("value"));
    }
    for (long s = 1; s < (1L << m); ++s) {
      if (!seen[s]) throw InputError("valuation table must cover every bundle");
    }
    tables.push_back(std::move(table));
  }
  return Market(m, std::move(tables), items);
}

Json PriorToJson(const Prior& prior) {
  Json bidders = Json::array();
  for (int i = 0; i < prior.num_bidders(); ++i) {
    Json bidder;
    Json support = Json::array(), probs = Json::array();
    for (int v = 0; v < prior.support_size(i); ++v) {
      support.push_back(RationalToJson(prior.bidder(i).support[v]));
      probs.push_back(RationalToJson(prior.bidder(i).probabilities[v]));
    }
    bidder["support"] = std::move(support);
    bidder["probs"] = std::move(probs);
    bidders.push_back(std::move(bidder));
  }
  Json json;
  json["bidders"] = std::move(bidders);
  return json;
}

Prior PriorFromJson(const Json& json) {
  std::vector<Prior::Bidder> bidders;
  for (const Json& bidder : json.at("bidders")) {
    Prior::Bidder b;
    for (const Json& v : bidder.at("support")) {
      b.support.push_back(RationalFromJson(v));
    }
    for (const Json& p : bidder.at("probs")) {
      b.probabilities.push_back(RationalFromJson(p));
    }
    bidders.push_back(std::move(b));
  }
  return Prior(std::move(bidders));
}

Json InterimRuleToJson(const InterimRule& rule) {
  Json json;
  Json y = Json::array();
  for (const auto& row : rule.y) {
    Json r = Json::array();
    for (const Rational& v : row) r.push_back(RationalToJson(v));
    y.push_back(std::move(r));
  }
  json["y"] = std::move(y);
  if (!rule.q.empty()) {
    Json q = Json::array();
    for (const auto& row : rule.q) {
      Json r = Json::array();
      for (const Rational& v : row) r.push_back(RationalToJson(v));
      q.push_back(std::move(r));
    }
    json["q"] = std::move(q);
  }
  return json;
}

InterimRule InterimRuleFromJson(const Json& json) {
  InterimRule rule;
  for (const Json& row : json.at("y")) {
    std::vector<Rational> r;
    for (const Json& v : row) r.push_back(RationalFromJson(v));
    rule.y.push_back(std::move(r));
  }
  if (json.contains("q")) {
    for (const Json& row : json.at("q")) {
      std::vector<Rational> r;
      for (const Json& v : row) r.push_back(RationalFromJson(v));
      rule.q.push_back(std::move(r));
    }
  }
  return rule;
}

Json SeparableToJson(const SeparableFunction& f) {
  Json coords = Json::array();
  for (int i = 0; i < f.dimension(); ++i) {
    Json coord;
    Json breaks = Json::array(), values = Json::array();
    for (const Rational& b : f.coordinate(i).breakpoints()) {
      breaks.push_back(RationalToJson(b));
    }
    for (const Rational& v : f.coordinate(i).values()) {
      values.push_back(RationalToJson(v));
    }
    coord["breakpoints"] = std::move(breaks);
    coord["values"] = std::move(values);
    coords.push_back(std::move(coord));
  }
  Json json;
  json["dims"] = f.dimension();
  json["coords"] = std::move(coords);
  return json;
}

SeparableFunction SeparableFromJson(const Json& json) {
  const int dims = json.at("dims").get<int>();
  std::vector<PiecewiseLinearFn> coords;
  for (const Json& coord : json.at("coords")) {
    std::vector<Rational> breaks, values;
    for (const Json& b : coord.at("breakpoints")) {
      breaks.push_back(RationalFromJson(b));
    }
    for (const Json& v : coord.at("values")) {
      values.push_back(RationalFromJson(v));
    }
    coords.emplace_back(std::move(breaks), std::move(values));
  }
  if (static_cast<int>(coords.size()) != dims) {
    throw InputError("separable table lists the wrong number of coordinates");
  }
  return SeparableFunction(std::move(coords));
}

namespace {
SimplexPoint SimplexPointFromJson(const Json& json) {
  if (!json.is_array() || json.size() != 3) {
    throw InputError("simplex points need three coordinates");
  }
  SimplexPoint p{{RationalFromJson(json[0]), RationalFromJson(json[1]),
                  RationalFromJson(json[2])}};
  if (!p.OnSimplex()) throw InputError("point is not on the simplex");
  return p;
}
}  // namespace

BrouwerFunction BrouwerFromJson(const Json& json) {
  const std::string kind = json.at("map").get<std::string>();
  if (kind == "identity") {
    return BrouwerFunction([](const SimplexPoint& p) { return p; },
                           Rational(1));
  }
  if (kind == "constant") {
    const SimplexPoint target = SimplexPointFromJson(json.at("point"));
    return BrouwerFunction([target](const SimplexPoint&) { return target; },
                           Rational(0));
  }
  if (kind == "blend") {
    // p -> (1-w) p + w target; Lipschitz constant 1 - w.
    const SimplexPoint target = SimplexPointFromJson(json.at("target"));
    const Rational w = RationalFromJson(json.at("weight"));
    if (w.Sign() < 0 || w > Rational(1)) {
      throw InputError("blend weight must lie in [0,1]");
    }
    return BrouwerFunction(
        [target, w](const SimplexPoint& p) {
          SimplexPoint out;
          for (int i = 0; i < 3; ++i) {
            out.coords[i] =
                (Rational(1) - w) * p.coords[i] + w * target.coords[i];
          }
          return out;
        },
        Rational(1) - w);
  }
  if (kind == "rotate") {
    // p -> (1-w) p + w (y, z, x); a cyclic shift is 1-Lipschitz in the
    // sup norm, so the blend is too.
    const Rational w = RationalFromJson(json.at("weight"));
    if (w.Sign() < 0 || w > Rational(1)) {
      throw InputError("rotate weight must lie in [0,1]");
    }
    return BrouwerFunction(
        [w](const SimplexPoint& p) {
          const SimplexPoint rotated{
              {p.coords[1], p.coords[2], p.coords[0]}};
          SimplexPoint out;
          for (int i = 0; i < 3; ++i) {
            out.coords[i] =
                (Rational(1) - w) * p.coords[i] + w * rotated.coords[i];
          }
          return out;
        },
        Rational(1));
  }
  throw InputError("unknown simplex map '" + kind + "'");
}

std::string TraceToCsv(const Trace& trace) {
  std::ostringstream csv;
  csv << "step,player,probabilities,expected_payoff,regret_to_date\n";
  if (trace.length() == 0) return csv.str();

  // Running cumulative rewards keep the per-step regret linear overall.
  std::vector<std::vector<Rational>> cumulative(2);
  cumulative[0].assign(trace.steps[0].x.size(), Rational(0));
  cumulative[1].assign(trace.steps[0].y.size(), Rational(0));
  Rational earned[2];

  for (int t = 0; t < trace.length(); ++t) {
    const TraceStep& step = trace.steps[t];
    for (int player = 0; player < 2; ++player) {
      const std::vector<Rational>& probs = player == 0 ? step.x : step.y;
      const std::vector<Rational>& rewards =
          player == 0 ? step.reward_row : step.reward_col;
      for (size_t i = 0; i < probs.size(); ++i) {
        cumulative[player][i] += rewards[i];
        if (probs[i].Sign() != 0) earned[player] += probs[i] * rewards[i];
      }
      Rational best = cumulative[player][0];
      for (const Rational& c : cumulative[player]) best = Max(best, c);
      const Rational regret = (best - earned[player]) / Rational(t + 1);

      csv << (t + 1) << ',' << player << ',';
      for (size_t i = 0; i < probs.size(); ++i) {
        if (i > 0) csv << '|';
        csv << probs[i].ToString();
      }
      csv << ',' << (player == 0 ? step.payoff_row : step.payoff_col).ToString()
          << ',' << regret.ToString() << '\n';
    }
  }
  return csv.str();
}

Json MakeReport(const std::string& subcommand,
                const std::vector<std::string>& input_paths, Json results) {
  std::string combined;
  for (const std::string& path : input_paths) combined += ReadFile(path);
  Json report;
  report["subcommand"] = subcommand;
  report["inputs_digest"] = ContentDigest(combined);
  report["results"] = std::move(results);
  report["exact_arithmetic"] = true;
  report["version"] = kToolVersion;
  return report;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream oss;
  oss << in.rdbuf();
  return oss.str();
}

Json LoadJsonFile(const std::string& path) {
  try {
    return Json::parse(ReadFile(path));
  } catch (const Json::parse_error& e) {
    throw InputError("bad JSON in " + path + ": " + e.what());
  }
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open for writing: " + path);
  out << contents;
  if (!out) throw InputError("write failed: " + path);
}

std::string ContentDigest(const std::string& bytes) {
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  std::ostringstream oss;
  oss << "fnv1a64:" << std::hex << hash;
  return oss.str();
}

}  // namespace eqlab
