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
#ifndef CATCRYPT_GAMES_HPP_
#define CATCRYPT_GAMES_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "catcrypt/diagram.hpp"
#include "catcrypt/encoded_set.hpp"
#include "catcrypt/ensemble.hpp"
#include "catcrypt/matrix.hpp"
#include "catcrypt/rational.hpp"

namespace catcrypt {

// The one-point set at level l, coded as 1^l so that input lengths grow with
// the security parameter.
EncodedSet security_unit(std::size_t level);

// Sorts of one level. Codes within a sort share one length.
struct LevelSorts {
  EncodedSet keys;
  EncodedSet messages;
  EncodedSet ciphertexts;
  EncodedSet state = EncodedSet::unit();
};

// A multi-sorted crypto system given by tables at levels 1..n:
//   enc    : K x M -> C   (randomized)
//   dec    : K x C -> M   (deterministic)
//   pair   : K -> K       (deterministic)
//   keygen : 1 -> K x K   producing (k, kbar)
// plus a plaintext distribution per level (uniform when omitted).
class AbstractCryptoSystem {
 public:
  AbstractCryptoSystem(std::string name, std::vector<LevelSorts> sorts,
                       FeasibleEnsemble enc, FeasibleEnsemble dec,
                       FeasibleEnsemble pair, FeasibleEnsemble keygen,
                       std::vector<std::vector<Rational>> mu = {});

  const std::string& name() const { return name_; }
  std::size_t levels() const { return sorts_.size(); }
  const LevelSorts& sorts(std::size_t level) const;
  const FeasibleEnsemble& enc() const { return enc_; }
  const FeasibleEnsemble& dec() const { return dec_; }
  const FeasibleEnsemble& pair() const { return pair_; }
  const FeasibleEnsemble& keygen() const { return keygen_; }

  // Row (k, m), column c.
  const RationalMatrix& enc_matrix(std::size_t level) const;
  // Row 1^l, column (k, kbar).
  const RationalMatrix& keygen_matrix(std::size_t level) const;
  // Distribution of the first key component.
  std::vector<Rational> key_marginal(std::size_t level) const;
  const std::vector<Rational>& mu(std::size_t level) const;

  // Table lookups by sort index; nullopt where undefined or off-sort.
  std::optional<std::size_t> decrypt(std::size_t level, std::size_t kbar,
                                     std::size_t c) const;
  std::optional<std::size_t> pair_of(std::size_t level, std::size_t k) const;

 private:
  std::string name_;
  std::vector<LevelSorts> sorts_;
  FeasibleEnsemble enc_, dec_, pair_, keygen_;
  std::vector<std::vector<Rational>> mu_;
  std::vector<RationalMatrix> enc_matrix_, keygen_matrix_;
};

struct UniqueDecryption {
  bool holds = true;
  std::size_t level = 0;
  std::string detail;  // names the key pair, plaintext and seed on failure
};

// D(kbar, E(rho, k, m)) = m and kbar = pair(k) for every (k, kbar) that
// keygen can produce, every m and every seed where E is defined.
UniqueDecryption check_unique_decryption(const AbstractCryptoSystem& sys);

// Posterior equals mu at every ciphertext of positive probability, with keys
// drawn from keygen.
bool is_perfectly_secure_at(const AbstractCryptoSystem& sys, std::size_t level);

// Game shape: A0 : 1^l -> M x M x S. Keyed shape: A0 : K -> M x M x S,
// receiving the challenge key as in the diagram. A1 : C x M x M x S -> 2.
struct CpaAdversary {
  enum class Shape { kGame, kKeyed };

  std::string name;
  Shape shape = Shape::kGame;
  StochasticEnsemble a0;
  StochasticEnsemble a1;
};

// The keyed adversary that ignores its key: A0 precomposed with K -> 1^l.
CpaAdversary lift_to_keyed(const AbstractCryptoSystem& sys, const CpaAdversary& adv);

// Pr(b' = b) summed exactly over keys, A0, the fair coin b, encryption seeds
// and A1. Mass where a table is undefined counts as a loss. Throws
// DimensionMismatch if a stage does not match the system's sorts.
Rational ind_cpa_guess_prob(const AbstractCryptoSystem& sys, const CpaAdversary& adv,
                            std::size_t level);

// Largest object size for which a diagram is built.
inline constexpr std::size_t kMaxDiagramObject = 1 << 14;

// Per level l <= min(L, levels), one diagram holding every adversary: the
// leg keygen; <id,A0>; pi; E x id; A1 against keygen; !; b, where A1 reports
// the win bit of its guess against the carried coin and b is the fair coin.
// Entries are compared up to the policy threshold at l.
CommutativityReport check_ind_cpa_diagram(const AbstractCryptoSystem& sys,
                                          const std::vector<CpaAdversary>& adversaries,
                                          const NegligibilityPolicy& policy);

struct CpaAdvantage {
  Rational enumerated;  // max |guess - 1/2| over deterministic adversaries
  Rational tv_oracle;   // max over (m0, m1) of TV(P_m0, P_m1) / 2
  std::size_t m0 = 0;
  std::size_t m1 = 0;
  std::size_t adversaries = 0;

  bool agrees() const { return enumerated == tv_oracle; }
};

inline constexpr std::size_t kDefaultAdversaryCap = std::size_t{1} << 20;

// Enumerates every deterministic (m0, m1) and every A1 table C -> 2 through
// the game. Throws CapExceeded past `cap` adversaries and DomainError when
// encryption is not total on the key support.
CpaAdvantage max_ind_cpa_advantage(const AbstractCryptoSystem& sys, std::size_t level,
                                   std::size_t cap = kDefaultAdversaryCap);

// The deterministic adversaries enumerated by max_ind_cpa_advantage at
// `level`. Lower levels are filled with a constant adversary.
std::vector<CpaAdversary> deterministic_cpa_adversaries(const AbstractCryptoSystem& sys,
                                                        std::size_t level,
                                                        std::size_t cap = kDefaultAdversaryCap);

// Four stages sharing a state tape:
//   A0 : 1^l -> C x S                           (c0, s0)
//   A1 : C x M x S -> M x M x S                 (c0, m, s0) -> (m0, m1, s1)
//   A2 : C x M x M x M x C x S -> C x S         (c0, m, m0, m1, c, s1) -> (c1, s2)
//   A3 : C x M x M x M x C x C x M x S -> 2     (c0, m, m0, m1, c, c1, mt, s2)
struct Cca2Adversary {
  std::string name;
  StochasticEnsemble a0, a1, a2, a3;
};

// How a branch where A2 resubmits the challenge (c1 = c) is scored.
enum class ChallengeReuse { kLoss, kCoin };

Rational ind_cca2_guess_prob(const AbstractCryptoSystem& sys, const Cca2Adversary& adv,
                             std::size_t level,
                             ChallengeReuse reuse = ChallengeReuse::kLoss);

// Domain and codomain sorts of each adversary stage at a level.
struct StageSorts {
  EncodedSet dom;
  EncodedSet cod;
};
StageSorts cpa_stage(const AbstractCryptoSystem& sys, std::size_t level, int stage,
                     CpaAdversary::Shape shape = CpaAdversary::Shape::kGame);
StageSorts cca2_stage(const AbstractCryptoSystem& sys, std::size_t level, int stage);

}  // namespace catcrypt

#endif  // CATCRYPT_GAMES_HPP_
