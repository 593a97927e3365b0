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

#ifndef EQLAB_JSON_IO_H_
#define EQLAB_JSON_IO_H_

#include <json.hpp>

#include <string>

#include "eqlab/border.h"
#include "eqlab/brouwer.h"
#include "eqlab/dynamics.h"
#include "eqlab/games.h"
#include "eqlab/markets.h"
#include "eqlab/reductions.h"

namespace eqlab {

// Every number in every file is an exact rational serialized as "p/q"; the
// loaders also accept bare integers like "3".  nlohmann::json's sorted keys
// give canonical, byte-stable output.
using Json = nlohmann::json;

Json RationalToJson(const Rational& value);
Rational RationalFromJson(const Json& value);

// Game format: {"players": k, "strategies": [m_1..m_k],
//               "payoffs": {"s_1,..,s_k": ["p/q" per player]}}.
// Round-trips losslessly and byte-exactly through dump().
Json GameToJson(const NormalFormGame& game);
NormalFormGame GameFromJson(const Json& json);
Json GameToJson(const BimatrixGame& game);
BimatrixGame BimatrixFromJson(const Json& json);

// {"strategies": [m_1..m_k], "probabilities": {"s_1,..,s_k": "p/q"}};
// omitted profiles carry probability zero.
Json JointDistributionToJson(const JointDistribution& rho);
JointDistribution JointDistributionFromJson(const Json& json);

// {"items": ["A",...], "valuations": [[{"bundle": ["A"], "value": "p/q"},
// ...] per player]}; every nonempty bundle must be listed.
Json MarketToJson(const Market& market);
Market MarketFromJson(const Json& json);

// {"bidders": [{"support": [...], "probs": [...]}]}.
Json PriorToJson(const Prior& prior);
Prior PriorFromJson(const Json& json);

// {"y": [[...] per bidder], "q": optional}.
Json InterimRuleToJson(const InterimRule& rule);
InterimRule InterimRuleFromJson(const Json& json);

// {"dims": d, "coords": [{"breakpoints": [...], "values": [...]}]}.
Json SeparableToJson(const SeparableFunction& f);
SeparableFunction SeparableFromJson(const Json& json);

// Named simplex self-maps: {"map": "identity"} |
// {"map": "constant", "point": [...]} |
// {"map": "blend", "target": [...], "weight": "p/q"} |
// {"map": "rotate", "weight": "p/q"}.
BrouwerFunction BrouwerFromJson(const Json& json);

// Deterministic byte-stable trace CSV: header then one row per (step,
// player); probabilities are pipe-joined "p/q" values.
std::string TraceToCsv(const Trace& trace);

// Wraps subcommand results with provenance: content digest of the inputs,
// the exactness marker, and the tool version.
Json MakeReport(const std::string& subcommand,
                const std::vector<std::string>& input_paths, Json results);

std::string ReadFile(const std::string& path);
Json LoadJsonFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& contents);

// FNV-1a 64-bit content hash, hex encoded.
std::string ContentDigest(const std::string& bytes);

inline constexpr const char* kToolVersion = "eqlab 0.1.0";

}  // namespace eqlab

#endif  // EQLAB_JSON_IO_H_
