//
// Copyright 2026 The catcrypt Authors.
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
//
#ifndef CATCRYPT_IO_HPP_
#define CATCRYPT_IO_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "catcrypt/ensemble.hpp"
#include "catcrypt/games.hpp"
#include "catcrypt/shannon.hpp"
#include "catcrypt/symbolic.hpp"

namespace catcrypt::io {

using Json = nlohmann::ordered_json;

// Parse failures become ParseError with "line L, column C" context.
Json parse_json(const std::string& text, const std::string& source);
Json read_json(const std::filesystem::path& path);

// ["a", "b"] (default codes) or {"labels": [...], "codes": [...]}.
EncodedSet set_from_json(const Json& j, const std::string& context);
Json to_json(const EncodedSet& s);

// {"kind": "dolev-yao", "carrier", "enc": [[label]] indexed [k][m],
//  "dec": [[label]] indexed [k][c], "pair": [label], "wellformed": [label]}
DolevYaoSystem dy_from_json(const Json& j);
Json to_json(const DolevYaoSystem& s, const std::string& name);

// The Dolev-Yao fields with kind "shannon" plus "kappa" and "mu": arrays of
// "p/q" weights over the carrier.
ShannonSystem shannon_from_json(const Json& j);
Json to_json(const ShannonSystem& s, const std::string& name);

// {"levels": [{"r", "s", "t", "table": {"seed,input": "output"}}]}; the
// seed part is empty when r = 0.
FeasibleEnsemble ensemble_from_json(const Json& j, const std::string& context);
Json to_json(const FeasibleEnsemble& e);

// The table of a 0/1 matrix whose rows have at most one 1, keyed by codes.
// Throws InvalidArgument for any other matrix.
RandomizedFn deterministic_table(const RationalMatrix& m);

// {"kind": "ensemble", "name", "sorts": [{"K", "M", "C", "S"?}],
//  "ensembles": {name: ensemble}, "enc", "dec", "pair", "keygen": name,
//  "mu"?: [[weight]]}
AbstractCryptoSystem crypto_system_from_json(const Json& j);
Json to_json(const AbstractCryptoSystem& s);

// {"kind": "ind-cpa-adversaries", "ensembles": {...},
//  "adversaries": [{"name", "shape": "game" | "keyed", "A0", "A1"}]}
// Each stage is realized against the system's sorts.
std::vector<CpaAdversary> cpa_adversaries_from_json(const Json& j,
                                                    const AbstractCryptoSystem& sys);
Json cpa_adversaries_to_json(const std::vector<CpaAdversary>& advs);

// {"kind": "ind-cca2-adversaries", "ensembles": {...},
//  "adversaries": [{"name", "A0", "A1", "A2", "A3"}]}
std::vector<Cca2Adversary> cca2_adversaries_from_json(const Json& j,
                                                      const AbstractCryptoSystem& sys);
Json cca2_adversaries_to_json(const std::vector<Cca2Adversary>& advs);

// {"L": n, "threshold": "1/l^2"}
NegligibilityPolicy policy_from_json(const Json& j);
Json to_json(const NegligibilityPolicy& p);

}  // namespace catcrypt::io

#endif  // CATCRYPT_IO_HPP_
