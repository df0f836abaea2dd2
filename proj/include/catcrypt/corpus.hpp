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
#ifndef CATCRYPT_CORPUS_HPP_
#define CATCRYPT_CORPUS_HPP_

#include <cstddef>
#include <vector>

#include "catcrypt/games.hpp"
#include "catcrypt/rational.hpp"
#include "catcrypt/shannon.hpp"
#include "catcrypt/symbolic.hpp"

namespace catcrypt::corpus {

// Carriers of n-bit strings use the strings themselves as labels; Z_n
// carriers use decimal labels, except Z_26 which uses the letters a..z.
EncodedSet z_carrier(std::size_t n);

// One-time pad on n-bit strings: E = D = xor, pair = id, M = everything.
DolevYaoSystem dy_otp(unsigned bits);
// Shift cipher on Z_n: E(k,m) = m + k, D(k,c) = c - k.
DolevYaoSystem dy_shift(std::size_t n);
// E(k,m) = m, D(k,c) = c.
DolevYaoSystem dy_identity(std::size_t n);
// E(k,m) = 0, D(k,c) = c; violates the decryption condition for n > 1.
DolevYaoSystem dy_constant(std::size_t n);

ShannonSystem shannon_otp(unsigned bits, std::vector<Rational> mu);
ShannonSystem shannon_otp(unsigned bits, std::vector<Rational> kappa,
                          std::vector<Rational> mu);
ShannonSystem shannon_shift(std::size_t n, std::vector<Rational> mu);
ShannonSystem shannon_identity(std::size_t n, std::vector<Rational> mu);
// One-time pad whose key distribution is a point mass on `key`.
ShannonSystem shannon_fixed_key(unsigned bits, std::size_t key,
                                std::vector<Rational> mu);

std::vector<Rational> uniform_weights(std::size_t n);

// Ensemble systems on levels 1..levels. Unless noted, K = M = C hold the two
// l-bit strings 0..00 and 0..01, keys are uniform and kbar = k.
AbstractCryptoSystem ens_otp(std::size_t levels);
// With one seed in 2^l the plaintext goes out in the clear.
AbstractCryptoSystem ens_leaky_otp(std::size_t levels);
// E(k, m) = m.
AbstractCryptoSystem ens_identity(std::size_t levels);
// K = M = C = all l-bit strings, E = D = xor.
AbstractCryptoSystem ens_malleable_otp(std::size_t levels);
// E(k, m) = k on all l-bit strings; D answers 0..0.
AbstractCryptoSystem ens_key_echo(std::size_t levels);

// A0 picks the first two plaintexts, A1 guesses the low bit of c's code.
CpaAdversary cpa_distinguisher(const AbstractCryptoSystem& sys);
CpaAdversary cpa_constant(const AbstractCryptoSystem& sys, bool guess);
// Picks plaintexts 0..00 and 0..01, submits c xor 1 to the oracle and reads
// the answer's low bit.
Cca2Adversary cca2_bit_flip(const AbstractCryptoSystem& sys);
// Same queries, but always guesses 0.
Cca2Adversary cca2_oracle_ignoring(const AbstractCryptoSystem& sys);

}  // namespace catcrypt::corpus

#endif  // CATCRYPT_CORPUS_HPP_
