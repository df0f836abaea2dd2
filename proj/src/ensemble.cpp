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
#include "catcrypt/ensemble.hpp"

#include <regex>

#include "catcrypt/error.hpp"

namespace catcrypt {
namespace {

std::string level_name(std::size_t level) { return "level " + std::to_string(level); }

void check_code_length(const EncodedSet& set, unsigned bits, const std::string& what) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set.code(i).size() != bits) {
      throw DimensionMismatch(what + ": code '" + set.code(i) + "' of '" + set.label(i) +
                              "' has " + std::to_string(set.code(i).size()) +
                              " bits, expected " + std::to_string(bits));
    }
  }
}

Rational abs_diff(const Rational& a, const Rational& b) { return a < b ? b - a : a - b; }

}  // namespace

FeasibleEnsemble::FeasibleEnsemble(std::vector<RandomizedFn> levels)
    : levels_(std::move(levels)) {
  for (std::size_t i = 1; i < levels_.size(); ++i) {
    const RandomizedFn& a = levels_[i - 1];
    const RandomizedFn& b = levels_[i];
    if (b.in_len() <= a.in_len()) {
      throw InvalidArgument("feasible ensemble: input length must strictly increase (" +
                            level_name(i) + " reads " + std::to_string(a.in_len()) +
                            " bits, " + level_name(i + 1) + " reads " +
                            std::to_string(b.in_len()) + ")");
    }
    if (b.seed_len() < a.seed_len() || b.out_len() < a.out_len()) {
      throw InvalidArgument("feasible ensemble: seed and output lengths must not "
                            "decrease (" + level_name(i + 1) + ")");
    }
  }
}

FeasibleEnsemble FeasibleEnsemble::identity(const std::vector<unsigned>& lengths) {
  std::vector<RandomizedFn> levels;
  for (unsigned len : lengths) levels.push_back(RandomizedFn::identity(len));
  return FeasibleEnsemble(std::move(levels));
}

const RandomizedFn& FeasibleEnsemble::at(std::size_t level) const {
  if (level == 0 || level > levels_.size()) {
    throw InvalidArgument("feasible ensemble: no " + level_name(level) + " (have " +
                          std::to_string(levels_.size()) + ")");
  }
  return levels_[level - 1];
}

bool FeasibleEnsemble::deterministic() const {
  for (const auto& g : levels_) {
    if (!g.deterministic()) return false;
  }
  return true;
}

StochasticEnsemble::StochasticEnsemble(std::vector<RationalMatrix> levels)
    : levels_(std::move(levels)) {
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (is_stochastic(levels_[i]) == Stochasticity::kNeither) {
      throw InvalidArgument("stochastic ensemble: " + level_name(i + 1) +
                            " is not substochastic");
    }
  }
}

const RationalMatrix& StochasticEnsemble::at(std::size_t level) const {
  if (level == 0 || level > levels_.size()) {
    throw InvalidArgument("stochastic ensemble: no " + level_name(level));
  }
  return levels_[level - 1];
}

RationalMatrix realize_level(const RandomizedFn& g, const EncodedSet& a,
                             const EncodedSet& b) {
  check_code_length(a, g.in_len(), "realize (domain)");
  check_code_length(b, g.out_len(), "realize (codomain)");
  std::vector<std::uint64_t> hits(a.size() * b.size(), 0);
  std::vector<std::uint64_t> inputs;
  for (std::size_t i = 0; i < a.size(); ++i) {
    inputs.push_back(BitString::parse(a.code(i)).value);
  }
  std::vector<std::optional<std::size_t>> decode;
  if (g.out_len() <= 20) {
    decode.assign(std::size_t{1} << g.out_len(), std::nullopt);
    for (std::size_t j = 0; j < b.size(); ++j) {
      decode[BitString::parse(b.code(j)).value] = j;
    }
  }
  for (std::uint64_t rho = 0; rho < g.seed_count(); ++rho) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto y = g.at(rho, inputs[i]);
      if (!y) continue;
      std::optional<std::size_t> j;
      if (!decode.empty()) {
        j = decode[*y];
      } else {
        j = b.find_code(BitString{*y, g.out_len()}.to_string());
      }
      if (j) ++hits[i * b.size() + *j];
    }
  }
  const BigInt seeds(g.seed_count());
  return RationalMatrix::generate(a, b, [&](std::size_t i, std::size_t j) {
    return Rational(BigInt(hits[i * b.size() + j]), seeds);
  });
}

StochasticEnsemble realize(const FeasibleEnsemble& psi, const std::vector<EncodedSet>& dom,
                           const std::vector<EncodedSet>& cod) {
  if (dom.size() != psi.levels() || cod.size() != psi.levels()) {
    throw DimensionMismatch("realize: " + std::to_string(psi.levels()) +
                            " levels but " + std::to_string(dom.size()) + "/" +
                            std::to_string(cod.size()) + " sorts");
  }
  std::vector<RationalMatrix> levels;
  for (std::size_t l = 1; l <= psi.levels(); ++l) {
    levels.push_back(realize_level(psi.at(l), dom[l - 1], cod[l - 1]));
  }
  return StochasticEnsemble(std::move(levels));
}

Realization realizes(const StochasticEnsemble& Psi, const FeasibleEnsemble& psi) {
  if (Psi.levels() > psi.levels()) {
    throw DimensionMismatch("realizes: " + std::to_string(Psi.levels()) +
                            " matrix levels but " + std::to_string(psi.levels()) +
                            " function levels");
  }
  for (std::size_t l = 1; l <= Psi.levels(); ++l) {
    const RationalMatrix& m = Psi.at(l);
    const RandomizedFn& g = psi.at(l);
    for (std::size_t i = 0; i < m.rows().size(); ++i) {
      const BitString x = BitString::parse(m.rows().code(i));
      if (x.length != g.in_len()) {
        throw DimensionMismatch("realizes: " + level_name(l) + " row code '" +
                                m.rows().code(i) + "' does not match " +
                                std::to_string(g.in_len()) + "-bit inputs");
      }
      for (std::size_t j = 0; j < m.cols().size(); ++j) {
        const Rational counted = seed_prob(g, x, BitString::parse(m.cols().code(j)));
        if (counted != m.at(i, j)) {
          return {false, RealizationWitness{l, m.rows().label(i), m.cols().label(j),
                                            m.at(i, j), counted}};
        }
      }
    }
  }
  return {};
}

std::vector<std::size_t> alignment_levels(const FeasibleEnsemble& theta,
                                          const FeasibleEnsemble& psi, Alignment mode) {
  std::vector<std::size_t> out;
  for (std::size_t l = 1; l <= psi.levels(); ++l) {
    const RandomizedFn& p = psi.at(l);
    std::optional<std::size_t> found;
    for (std::size_t lb = 1; lb <= theta.levels() && !found; ++lb) {
      const RandomizedFn& q = theta.at(lb);
      const bool ok = mode == Alignment::kComposable ? q.in_len() >= p.out_len()
                                                     : q.out_len() >= p.in_len();
      if (ok) found = lb;
    }
    if (!found) {
      throw DomainError("ensemble_compose: no alignment level within the " +
                        std::to_string(theta.levels()) + " stored levels for " +
                        level_name(l));
    }
    if (mode == Alignment::kLiteral && theta.at(*found).in_len() < p.out_len()) {
      throw DomainError("ensemble_compose: literal alignment picks " +
                        level_name(*found) + " for " + level_name(l) +
                        ", which reads " + std::to_string(theta.at(*found).in_len()) +
                        " bits but receives " + std::to_string(p.out_len()));
    }
    out.push_back(*found);
  }
  return out;
}

FeasibleEnsemble ensemble_compose(const FeasibleEnsemble& theta,
                                  const FeasibleEnsemble& psi, Alignment mode) {
  const std::vector<std::size_t> lbar = alignment_levels(theta, psi, mode);
  std::vector<RandomizedFn> levels;
  for (std::size_t l = 1; l <= psi.levels(); ++l) {
    const RandomizedFn& p = psi.at(l);
    levels.push_back(rcompose(theta.at(lbar[l - 1]).restrict_input(p.out_len()), p));
  }
  return FeasibleEnsemble(std::move(levels));
}

Threshold::Threshold(Kind kind, Rational a, unsigned c)
    : kind_(kind), a_(std::move(a)), c_(c) {
  if (a_ < 0) throw InvalidArgument("threshold coefficient must be nonnegative");
}

Threshold Threshold::polynomial(Rational a, unsigned c) {
  return Threshold(Kind::kPolynomial, std::move(a), c);
}
Threshold Threshold::exponential(Rational a) {
  return Threshold(Kind::kExponential, std::move(a), 0);
}
Threshold Threshold::zero() { return Threshold(Kind::kZero, Rational(0), 0); }

Threshold Threshold::parse(const std::string& text) {
  static const std::regex zero(R"(\s*0\s*)");
  static const std::regex poly(R"(\s*(\d+(?:/\d+)?)\s*/\s*l\s*(?:\^\s*(\d+))?\s*)");
  static const std::regex expo(R"(\s*(?:(\d+(?:/\d+)?)\s*\*\s*)?2\s*\^\s*-\s*l\s*)");
  std::smatch m;
  try {
    if (std::regex_match(text, zero)) return Threshold::zero();
    if (std::regex_match(text, m, poly)) {
      return polynomial(parse_rational(m[1].str()),
                        m[2].matched ? static_cast<unsigned>(std::stoul(m[2].str())) : 1);
    }
    if (std::regex_match(text, m, expo)) {
      return exponential(m[1].matched ? parse_rational(m[1].str()) : Rational(1));
    }
  } catch (const std::out_of_range&) {
  }
  throw ParseError("threshold", "'" + text +
                                    "' is not one of 0, a/l^c, 2^-l, a*2^-l");
}

Rational Threshold::at(std::size_t level) const {
  if (level == 0) throw InvalidArgument("threshold: levels start at 1");
  Rational v;
  switch (kind_) {
    case Kind::kZero:
      return Rational(0);
    case Kind::kPolynomial: {
      BigInt den = 1;
      for (unsigned i = 0; i < c_; ++i) den *= BigInt(level);
      v = a_ / Rational(den);
      break;
    }
    case Kind::kExponential:
      v = level > 4096 ? Rational(0) : a_ * pow2_inverse(static_cast<unsigned>(level));
      break;
  }
  return v > 1 ? Rational(1) : v;
}

std::string Threshold::to_string() const {
  const std::string a = denominator(a_) == 1 ? numerator(a_).str() : catcrypt::to_string(a_);
  switch (kind_) {
    case Kind::kZero:
      return "0";
    case Kind::kPolynomial:
      return a + "/l" + (c_ == 1 ? "" : "^" + std::to_string(c_));
    case Kind::kExponential:
      return a_ == 1 ? "2^-l" : a + "*2^-l";
  }
  return "?";
}

Threshold Threshold::scaled(const Rational& factor) const {
  return Threshold(kind_, a_ * factor, c_);
}

NegligibilityPolicy sum_closure(const NegligibilityPolicy& p) {
  return {p.max_level, p.threshold.scaled(Rational(2))};
}

bool negligible_equiv(std::span<const Rational> sigma, std::span<const Rational> tau,
                      const NegligibilityPolicy& policy) {
  if (sigma.size() != tau.size()) {
    throw InvalidArgument("negligible_equiv: sequences of length " +
                          std::to_string(sigma.size()) + " and " +
                          std::to_string(tau.size()));
  }
  const std::size_t horizon = std::min(policy.max_level, sigma.size());
  for (std::size_t l = 1; l <= horizon; ++l) {
    if (abs_diff(sigma[l - 1], tau[l - 1]) > policy.at(l)) return false;
  }
  return true;
}

EntryEquivalence<RationalSemiring> level_equivalence(const NegligibilityPolicy& policy,
                                                     std::size_t level) {
  return [t = policy.at(level)](const Rational& a, const Rational& b) {
    return abs_diff(a, b) <= t;
  };
}

}  // namespace catcrypt
