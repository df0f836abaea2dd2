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
#ifndef CATCRYPT_ENSEMBLE_HPP_
#define CATCRYPT_ENSEMBLE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "catcrypt/diagram.hpp"
#include "catcrypt/encoded_set.hpp"
#include "catcrypt/matrix.hpp"
#include "catcrypt/randomized.hpp"
#include "catcrypt/rational.hpp"

namespace catcrypt {

// Levels are numbered from 1. Level l of an ensemble is the randomized
// function psi_l : 2^r(l) x 2^s(l) -> 2^t(l). Input lengths strictly
// increase, so the levels have disjoint domains and are restrictions of one
// partial function on bitstrings; seed and output lengths are nondecreasing.
class FeasibleEnsemble {
 public:
  FeasibleEnsemble() = default;
  explicit FeasibleEnsemble(std::vector<RandomizedFn> levels);

  // One identity level per entry of `lengths`.
  static FeasibleEnsemble identity(const std::vector<unsigned>& lengths);

  std::size_t levels() const { return levels_.size(); }
  const RandomizedFn& at(std::size_t level) const;
  bool deterministic() const;

 private:
  std::vector<RandomizedFn> levels_;
};

// Per-level substochastic matrices Psi^l : A_l -> B_l.
class StochasticEnsemble {
 public:
  StochasticEnsemble() = default;
  explicit StochasticEnsemble(std::vector<RationalMatrix> levels);

  std::size_t levels() const { return levels_.size(); }
  const RationalMatrix& at(std::size_t level) const;

 private:
  std::vector<RationalMatrix> levels_;
};

// Psi_ab = Pr(code(b) <- g code(a)), accumulated over the table. Codes of a
// must be g.in_len bits and codes of b g.out_len bits.
RationalMatrix realize_level(const RandomizedFn& g, const EncodedSet& a,
                             const EncodedSet& b);
StochasticEnsemble realize(const FeasibleEnsemble& psi,
                           const std::vector<EncodedSet>& dom,
                           const std::vector<EncodedSet>& cod);

struct RealizationWitness {
  std::size_t level;
  std::string row;
  std::string col;
  Rational stored;
  Rational counted;
};

struct Realization {
  bool holds = true;
  std::optional<RealizationWitness> witness;
};

// Checks every stored level of Psi entrywise against seed_prob on psi.
Realization realizes(const StochasticEnsemble& Psi, const FeasibleEnsemble& psi);

// kComposable picks the smallest lbar with v(lbar) >= t(l); kLiteral the
// smallest with w(lbar) >= s(l), and then requires v(lbar) >= t(l).
enum class Alignment { kComposable, kLiteral };

// lbar for each level of psi. Throws DomainError if some level has none.
std::vector<std::size_t> alignment_levels(const FeasibleEnsemble& theta,
                                          const FeasibleEnsemble& psi,
                                          Alignment mode = Alignment::kComposable);

// (theta o psi)_l = theta_lbar, restricted to t(l)-bit inputs, after psi_l.
// Profile: seed u(lbar) + r(l), input s(l), output w(lbar).
FeasibleEnsemble ensemble_compose(const FeasibleEnsemble& theta,
                                  const FeasibleEnsemble& psi,
                                  Alignment mode = Alignment::kComposable);

// A nonincreasing threshold l -> min(1, a / l^c), min(1, a * 2^-l) or 0.
class Threshold {
 public:
  enum class Kind { kPolynomial, kExponential, kZero };

  static Threshold polynomial(Rational a, unsigned c);
  static Threshold exponential(Rational a);
  static Threshold zero();
  // "1/l^2", "3/l", "2^-l", "1/2*2^-l", "0".
  static Threshold parse(const std::string& text);

  Kind kind() const { return kind_; }
  const Rational& coefficient() const { return a_; }
  unsigned degree() const { return c_; }
  Rational at(std::size_t level) const;
  std::string to_string() const;

  // The same family with coefficient scaled by `factor`.
  Threshold scaled(const Rational& factor) const;

  friend bool operator==(const Threshold&, const Threshold&) = default;

 private:
  Threshold(Kind kind, Rational a, unsigned c);

  Kind kind_;
  Rational a_;
  unsigned c_;
};

struct NegligibilityPolicy {
  std::size_t max_level = 5;
  Threshold threshold = Threshold::polynomial(Rational(1), 2);

  Rational at(std::size_t level) const { return threshold.at(level); }
};

// The policy whose threshold bounds the sum of two differences that each
// pass `p`: the coefficient doubles and the family is unchanged.
NegligibilityPolicy sum_closure(const NegligibilityPolicy& p);

// |sigma_l - tau_l| <= t(l) for l = 1 .. min(L, size). sigma[0] is level 1.
// Throws InvalidArgument when the sequences differ in length.
bool negligible_equiv(std::span<const Rational> sigma,
                      std::span<const Rational> tau,
                      const NegligibilityPolicy& policy);

// Entrywise |a - b| <= t(level), for diagram checks at one level.
EntryEquivalence<RationalSemiring> level_equivalence(const NegligibilityPolicy& policy,
                                                     std::size_t level);

}  // namespace catcrypt

#endif  // CATCRYPT_ENSEMBLE_HPP_
