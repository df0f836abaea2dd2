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
#ifndef CATCRYPT_SYMBOLIC_HPP_
#define CATCRYPT_SYMBOLIC_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "catcrypt/diagram.hpp"
#include "catcrypt/encoded_set.hpp"

namespace catcrypt {

// Operation table on indices into a carrier: table[key][message].
using OpTable = std::vector<std::vector<std::size_t>>;

// A finite message algebra (E, D, key pairing) over a carrier A together with
// the well-formed plaintexts M. Tables are indexed [key][message].
//
// Construction only checks shapes and ranges; the decryption condition is a
// property reported by check_decryption_condition so that broken systems can
// still be analysed.
class DolevYaoSystem {
 public:
  DolevYaoSystem(EncodedSet carrier, OpTable enc, OpTable dec,
                 std::vector<std::size_t> pair, std::vector<bool> wellformed);

  const EncodedSet& carrier() const { return carrier_; }
  std::size_t size() const { return carrier_.size(); }
  std::size_t enc(std::size_t k, std::size_t m) const { return enc_[k][m]; }
  std::size_t dec(std::size_t k, std::size_t c) const { return dec_[k][c]; }
  std::size_t pair(std::size_t k) const { return pair_[k]; }
  bool wellformed(std::size_t m) const { return wellformed_[m]; }

  const OpTable& enc_table() const { return enc_; }
  const OpTable& dec_table() const { return dec_; }
  const std::vector<std::size_t>& pair_table() const { return pair_; }
  const std::vector<bool>& wellformed_set() const { return wellformed_; }

 private:
  EncodedSet carrier_;
  OpTable enc_;
  OpTable dec_;
  std::vector<std::size_t> pair_;
  std::vector<bool> wellformed_;
};

struct KeyMessage {
  std::size_t key;
  std::size_t message;
};

struct DecryptionCheck {
  bool holds = true;
  std::optional<KeyMessage> counterexample;  // first (k, m) in index order
};

// D(pair(k), E(k, m)) == m for every k, m in A.
DecryptionCheck check_decryption_condition(const DolevYaoSystem& s);

// E(k, D(pair(k), c)) == c for every k, c. Dolev and Yao required this
// encryption equation; it is not part of the system definition here.
struct EncryptionEquationCheck {
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;  // (k, c)
};
EncryptionEquationCheck check_encryption_equation(const DolevYaoSystem& s);

// The plaintexts that may underlie ciphertext c:
// {m in M | exists k. E(k, m) = c}, as ascending indices.
std::vector<std::size_t> tilde_D(const DolevYaoSystem& s, std::size_t c);
std::vector<std::size_t> tilde_D(const DolevYaoSystem& s, const std::string& c);

struct CiphertextMessage {
  std::size_t ciphertext;
  std::size_t message;
};

struct AlgebraicSecurity {
  bool secure = true;
  // A pair (c, m) where "m in M and some key encrypts m to c" disagrees with
  // "m in M".
  std::optional<CiphertextMessage> witness;
};

// For all c, m in A: (m in M and exists k. E(k,m) = c) <=> m in M.
AlgebraicSecurity is_algebraically_perfectly_secure(const DolevYaoSystem& s);

struct LemmaCheck {
  bool definition = true;  // the quantified definition above
  bool relation = true;    // c ~D m <=> m in M, from the tilde_D relation
  bool agree() const { return definition == relation; }
};

// Evaluates the definition and the tilde_D characterisation by separate code
// paths and reports both verdicts.
LemmaCheck lemma_equivalence_check(const DolevYaoSystem& s);

// The square  A --E~M--> AxA --(!xA)--> A'  versus  A --!--> 1 --M--> A'
// in Rel, with c E~M (k,m) iff m in M and E(k,m) = c. Node "A'" is a second
// copy of the carrier.
Diagram<BooleanSemiring> build_rel_security_diagram(const DolevYaoSystem& s);

}  // namespace catcrypt

#endif  // CATCRYPT_SYMBOLIC_HPP_
