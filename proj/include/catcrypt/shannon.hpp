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
#ifndef CATCRYPT_SHANNON_HPP_
#define CATCRYPT_SHANNON_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "catcrypt/diagram.hpp"
#include "catcrypt/encoded_set.hpp"
#include "catcrypt/matrix.hpp"
#include "catcrypt/rational.hpp"
#include "catcrypt/symbolic.hpp"

namespace catcrypt {

// A finitely supported probability distribution on an encoded set: weights
// are nonnegative and sum to exactly 1.
class Distribution {
 public:
  Distribution(EncodedSet base, std::vector<Rational> weights);

  static Distribution point_mass(EncodedSet base, std::size_t i);
  static Distribution uniform(EncodedSet base);
  // p * delta_i + (1 - p) * delta_j.
  static Distribution mix(EncodedSet base, const Rational& p, std::size_t i,
                          std::size_t j);

  const EncodedSet& base() const { return base_; }
  const Rational& weight(std::size_t i) const { return weights_.at(i); }
  const std::vector<Rational>& weights() const { return weights_; }
  // Indices with positive weight, ascending.
  std::vector<std::size_t> support() const;
  // The distribution as a point 1 -> base.
  RationalMatrix as_point() const { return point(base_, weights_); }

  friend bool operator==(const Distribution& a, const Distribution& b) {
    return a.base_ == b.base_ && a.weights_ == b.weights_;
  }

 private:
  EncodedSet base_;
  std::vector<Rational> weights_;
};

// A Dolev-Yao algebra on a carrier A with a key distribution kappa and a
// plaintext distribution mu, both over A. The decryption condition must hold
// on supp(kappa) x supp(mu); the constructor throws InvalidArgument otherwise.
class ShannonSystem {
 public:
  ShannonSystem(EncodedSet carrier, OpTable enc, OpTable dec,
                std::vector<std::size_t> pair, Distribution kappa,
                Distribution mu);

  const EncodedSet& carrier() const { return algebra_.carrier(); }
  std::size_t size() const { return algebra_.size(); }
  std::size_t enc(std::size_t k, std::size_t m) const { return algebra_.enc(k, m); }
  std::size_t dec(std::size_t k, std::size_t c) const { return algebra_.dec(k, c); }
  std::size_t pair(std::size_t k) const { return algebra_.pair(k); }
  const Distribution& kappa() const { return kappa_; }
  const Distribution& mu() const { return mu_; }

  // The underlying algebra with M = supp(mu).
  const DolevYaoSystem& reduct() const { return algebra_; }

 private:
  DolevYaoSystem algebra_;
  Distribution kappa_;
  Distribution mu_;
};

// Row m, column c: Pr_kappa(c | m), the total key weight x in supp(kappa)
// with E(x, m) = c. Row stochastic. The two-argument form substitutes the
// key distribution.
RationalMatrix encryption_matrix(const ShannonSystem& s);
RationalMatrix encryption_matrix(const ShannonSystem& s, const Distribution& keys);

// Row c, column m: the key weight x in supp(kappa) with D(pair(x), c) = m.
RationalMatrix decryption_matrix(const ShannonSystem& s);
RationalMatrix decryption_matrix(const ShannonSystem& s, const Distribution& keys);

// Pr(c) = sum_m mu(m) Pr_kappa(c | m).
Rational ciphertext_probability(const ShannonSystem& s, std::size_t c);

// Bayes posterior Pr(m | c) on the carrier (zero off supp(mu)). Throws
// DomainError when Pr(c) = 0.
Distribution posterior(const ShannonSystem& s, std::size_t c);

struct PosteriorWitness {
  std::size_t ciphertext;
  std::size_t message;
  Rational posterior;
  Rational prior;
};

struct ShannonSecurity {
  bool secure = true;
  std::optional<PosteriorWitness> witness;
};

// Posterior equals mu for every ciphertext of positive probability.
ShannonSecurity is_perfectly_secure_direct(const ShannonSystem& s);

// The square  A+ --E~--> AxA --(!xA)--> A'  versus  A+ --!--> 1 --mu--> A'
// in Sto, where A+ holds the ciphertexts of positive probability and
//   E~_{c,(k,m)}    = kappa(k) mu(m) / Pr(c)   if E(k,m) = c, else 0
//   (!xA)_{(j,k),i} = 1/#A                     if i = k,      else 0
//   !_{c}           = 1/#A,   mu_{m} = mu(m).
// E~ is the joint weight kappa(k) mu(m) conditioned on the observed c, so
// the square commutes exactly when every posterior equals mu.
Diagram<RationalSemiring> build_sto_security_diagram(const ShannonSystem& s);

// Compares E^(p.k + (1-p).h) with convex_mix(p, E^k, E^h), and likewise for
// decryption.
bool convexity_check(const ShannonSystem& s, const Rational& p, std::size_t k,
                     std::size_t h);

// Extension for randomized encryption: the kernel has one row per (k, m) in
// A x A and one column per ciphertext, giving Pr(c | k, m). Deterministic
// systems embed via randomized(); every operation above agrees with its
// randomized counterpart on such embeddings.
struct RandomizedShannonSystem {
  EncodedSet carrier;
  RationalMatrix kernel;
  Distribution kappa;
  Distribution mu;

  RandomizedShannonSystem(EncodedSet carrier, RationalMatrix kernel,
                          Distribution kappa, Distribution mu);
};

RandomizedShannonSystem randomized(const ShannonSystem& s);

RationalMatrix encryption_matrix(const RandomizedShannonSystem& s);
Distribution posterior(const RandomizedShannonSystem& s, std::size_t c);
ShannonSecurity is_perfectly_secure_direct(const RandomizedShannonSystem& s);
// As above with E~_{c,(k,m)} = kappa(k) mu(m) Pr(c | k, m) / Pr(c).
Diagram<RationalSemiring> build_sto_security_diagram(
    const RandomizedShannonSystem& s);

}  // namespace catcrypt

#endif  // CATCRYPT_SHANNON_HPP_
