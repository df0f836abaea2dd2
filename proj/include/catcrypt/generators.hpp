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
#ifndef CATCRYPT_GENERATORS_HPP_
#define CATCRYPT_GENERATORS_HPP_

#include <cstddef>
#include <functional>

#include "catcrypt/ensemble.hpp"
#include "catcrypt/games.hpp"
#include "catcrypt/random.hpp"
#include "catcrypt/shannon.hpp"
#include "catcrypt/symbolic.hpp"

namespace catcrypt {

// Visits every Dolev-Yao system on an n-element carrier: all enc, dec and
// pair tables and every subset M, including the empty one. Returns the number
// of systems visited. There are n^(2n^2 + n) 2^n of them; n = 2 gives 4096.
std::size_t for_each_dy_system(std::size_t n,
                               const std::function<void(const DolevYaoSystem&)>& fn);

// Random small systems. Roughly a third have Latin-square encryption (so both
// secure and insecure verdicts occur), the rest have random tables.
DolevYaoSystem random_dy_system(Rng& rng, std::size_t n);

// Random Shannon systems satisfying the decryption condition on
// supp(kappa) x supp(mu). Key and plaintext distributions may have zeros.
ShannonSystem random_shannon_system(Rng& rng, std::size_t n);

// A random table 2^r x 2^s -> 2^t, undefined at about one entry in eight.
RandomizedFn random_randomized_fn(Rng& rng, unsigned r, unsigned s, unsigned t);

// A random ensemble over `levels` levels with input lengths
// min_in, min_in + 1, ..., at most 2 seed bits and at most 3 output bits.
FeasibleEnsemble random_feasible_ensemble(Rng& rng, std::size_t levels, unsigned min_in = 1);

// A random system on levels 1..levels whose level-l sorts have l-bit codes
// and 2 to 4 elements. Encryption is total; about a third of the levels use
// a Latin square with keys cycling through K, so zero advantage occurs.
AbstractCryptoSystem random_crypto_system(Rng& rng, std::size_t levels);

}  // namespace catcrypt

#endif  // CATCRYPT_GENERATORS_HPP_
