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
#include "catcrypt/shannon.hpp"

#include <functional>

#include "catcrypt/error.hpp"

namespace catcrypt {
namespace {

std::vector<bool> support_mask(const Distribution& d) {
  std::vector<bool> mask(d.base().size(), false);
  for (std::size_t i : d.support()) mask[i] = true;
  return mask;
}

void require_base(const Distribution& d, const EncodedSet& carrier,
                  const char* what) {
  if (!(d.base() == carrier)) {
    throw InvalidArgument(std::string(what) + " is not a distribution over " +
                          carrier.describe());
  }
}

// Pr(m | c) from the encryption matrix (row m, col c) and the prior.
Distribution bayes(const RationalMatrix& enc, const Distribution& mu,
                   std::size_t c) {
  const EncodedSet& a = mu.base();
  if (c >= enc.num_cols()) {
    throw InvalidArgument("posterior: ciphertext #" + std::to_string(c) +
                          " is outside the carrier");
  }
  std::vector<Rational> joint(a.size());
  Rational total = 0;
  for (std::size_t m = 0; m < a.size(); ++m) {
    joint[m] = enc.at(m, c) * mu.weight(m);
    total += joint[m];
  }
  if (total == 0) {
    throw DomainError("posterior: ciphertext '" + enc.cols().label(c) +
                      "' has probability zero");
  }
  for (auto& w : joint) w /= total;
  return Distribution(a, std::move(joint));
}

ShannonSecurity compare_posteriors(const RationalMatrix& enc,
                                   const Distribution& mu) {
  for (std::size_t c = 0; c < enc.num_cols(); ++c) {
    Rational pc = 0;
    for (std::size_t m = 0; m < enc.num_rows(); ++m) pc += enc.at(m, c) * mu.weight(m);
    if (pc == 0) continue;
    const Distribution post = bayes(enc, mu, c);
    for (std::size_t m = 0; m < enc.num_rows(); ++m) {
      if (post.weight(m) != mu.weight(m)) {
        return {false, PosteriorWitness{c, m, post.weight(m), mu.weight(m)}};
      }
    }
  }
  return {};
}

// Shared square builder. `joint(c, k, m)` is the unnormalised weight of the
// event "key k, plaintext m, ciphertext c".
Diagram<RationalSemiring> sto_square(
    const EncodedSet& a, const Distribution& mu,
    const std::function<Rational(std::size_t, std::size_t, std::size_t)>& joint) {
  const std::size_t n = a.size();
  std::vector<Rational> weights(n * n * n);
  std::vector<Rational> prob_c(n, Rational(0));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t km = 0; km < n * n; ++km) {
      weights[c * n * n + km] = joint(c, km / n, km % n);
      prob_c[c] += weights[c * n * n + km];
    }
  }
  std::vector<std::size_t> live;
  for (std::size_t c = 0; c < n; ++c) {
    if (prob_c[c] != 0) live.push_back(c);
  }
  const EncodedSet source = a.subset(live);
  const EncodedSet aa = product(a, a);
  const EncodedSet one = EncodedSet::unit();
  const Rational inv_n(1, static_cast<long long>(n));

  Diagram<RationalSemiring> d;
  d.add_object("A", source);
  d.add_object("AxA", aa);
  d.add_object("1", one);
  d.add_object("A'", a);

  auto encrypt = RationalMatrix::generate(source, aa, [&](std::size_t r, std::size_t km) {
    const std::size_t c = live[r];
    return weights[c * n * n + km] / prob_c[c];
  });
  auto forget_key = RationalMatrix::generate(aa, a, [&](std::size_t jk, std::size_t i) {
    return jk % n == i ? inv_n : Rational(0);
  });
  auto bang = RationalMatrix::generate(source, one,
                                       [&](std::size_t, std::size_t) { return inv_n; });

  d.add_edge("A", "AxA", std::move(encrypt), "E~");
  d.add_edge("AxA", "A'", std::move(forget_key), "!xA");
  d.add_edge("A", "1", std::move(bang), "!");
  d.add_edge("1", "A'", mu.as_point(), "mu");
  return d;
}

}  // namespace

Distribution::Distribution(EncodedSet base, std::vector<Rational> weights)
    : base_(std::move(base)), weights_(std::move(weights)) {
  if (weights_.size() != base_.size()) {
    throw InvalidArgument("distribution: " + std::to_string(weights_.size()) +
                          " weights for " + base_.describe());
  }
  Rational total = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < 0) {
      throw InvalidArgument("distribution: negative weight " +
                            to_string(weights_[i]) + " at '" + base_.label(i) +
                            "'");
    }
    total += weights_[i];
  }
  if (total != 1) {
    throw InvalidArgument("distribution: weights sum to " + to_string(total) +
                          ", not 1");
  }
}

Distribution Distribution::point_mass(EncodedSet base, std::size_t i) {
  std::vector<Rational> w(base.size(), Rational(0));
  w.at(i) = 1;
  return Distribution(std::move(base), std::move(w));
}

Distribution Distribution::uniform(EncodedSet base) {
  if (base.empty()) throw InvalidArgument("distribution: empty base set");
  std::vector<Rational> w(base.size(),
                          Rational(1, static_cast<long long>(base.size())));
  return Distribution(std::move(base), std::move(w));
}

Distribution Distribution::mix(EncodedSet base, const Rational& p, std::size_t i,
                               std::size_t j) {
  if (p < 0 || p > 1) throw InvalidArgument("distribution: mix weight outside [0,1]");
  std::vector<Rational> w(base.size(), Rational(0));
  w.at(i) += p;
  w.at(j) += 1 - p;
  return Distribution(std::move(base), std::move(w));
}

std::vector<std::size_t> Distribution::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] > 0) out.push_back(i);
  }
  return out;
}

ShannonSystem::ShannonSystem(EncodedSet carrier, OpTable enc, OpTable dec,
                             std::vector<std::size_t> pair, Distribution kappa,
                             Distribution mu)
    : algebra_(carrier, std::move(enc), std::move(dec), std::move(pair),
               support_mask(mu)),
      kappa_(std::move(kappa)),
      mu_(std::move(mu)) {
  require_base(kappa_, carrier, "kappa");
  require_base(mu_, carrier, "mu");
  for (std::size_t k : kappa_.support()) {
    for (std::size_t m : mu_.support()) {
      if (algebra_.dec(algebra_.pair(k), algebra_.enc(k, m)) != m) {
        throw InvalidArgument("Shannon system: decryption condition fails at key '" +
                              carrier.label(k) + "', plaintext '" +
                              carrier.label(m) + "'");
      }
    }
  }
}

RationalMatrix encryption_matrix(const ShannonSystem& s, const Distribution& keys) {
  require_base(keys, s.carrier(), "key distribution");
  const std::size_t n = s.size();
  std::vector<Rational> entries(n * n, Rational(0));
  for (std::size_t x : keys.support()) {
    for (std::size_t m = 0; m < n; ++m) entries[m * n + s.enc(x, m)] += keys.weight(x);
  }
  return RationalMatrix(s.carrier(), s.carrier(), std::move(entries));
}

RationalMatrix encryption_matrix(const ShannonSystem& s) {
  return encryption_matrix(s, s.kappa());
}

RationalMatrix decryption_matrix(const ShannonSystem& s, const Distribution& keys) {
  require_base(keys, s.carrier(), "key distribution");
  const std::size_t n = s.size();
  std::vector<Rational> entries(n * n, Rational(0));
  for (std::size_t x : keys.support()) {
    for (std::size_t c = 0; c < n; ++c) {
      entries[c * n + s.dec(s.pair(x), c)] += keys.weight(x);
    }
  }
  return RationalMatrix(s.carrier(), s.carrier(), std::move(entries));
}

RationalMatrix decryption_matrix(const ShannonSystem& s) {
  return decryption_matrix(s, s.kappa());
}

Rational ciphertext_probability(const ShannonSystem& s, std::size_t c) {
  const RationalMatrix enc = encryption_matrix(s);
  Rational total = 0;
  for (std::size_t m = 0; m < s.size(); ++m) total += enc.at(m, c) * s.mu().weight(m);
  return total;
}

Distribution posterior(const ShannonSystem& s, std::size_t c) {
  return bayes(encryption_matrix(s), s.mu(), c);
}

ShannonSecurity is_perfectly_secure_direct(const ShannonSystem& s) {
  return compare_posteriors(encryption_matrix(s), s.mu());
}

Diagram<RationalSemiring> build_sto_security_diagram(const ShannonSystem& s) {
  return sto_square(s.carrier(), s.mu(),
                    [&](std::size_t c, std::size_t k, std::size_t m) {
                      return s.enc(k, m) == c ? s.kappa().weight(k) * s.mu().weight(m)
                                              : Rational(0);
                    });
}

bool convexity_check(const ShannonSystem& s, const Rational& p, std::size_t k,
                     std::size_t h) {
  const EncodedSet& a = s.carrier();
  const Distribution mixed = Distribution::mix(a, p, k, h);
  const Distribution dk = Distribution::point_mass(a, k);
  const Distribution dh = Distribution::point_mass(a, h);
  return encryption_matrix(s, mixed) ==
             convex_mix(p, encryption_matrix(s, dk), encryption_matrix(s, dh)) &&
         decryption_matrix(s, mixed) ==
             convex_mix(p, decryption_matrix(s, dk), decryption_matrix(s, dh));
}

RandomizedShannonSystem::RandomizedShannonSystem(EncodedSet carrier_in,
                                                 RationalMatrix kernel_in,
                                                 Distribution kappa_in,
                                                 Distribution mu_in)
    : carrier(std::move(carrier_in)),
      kernel(std::move(kernel_in)),
      kappa(std::move(kappa_in)),
      mu(std::move(mu_in)) {
  if (!(kernel.rows() == product(carrier, carrier)) || !(kernel.cols() == carrier)) {
    throw DimensionMismatch("randomized Shannon system: kernel must map AxA to A");
  }
  if (is_stochastic(kernel) != Stochasticity::kStochastic) {
    throw InvalidArgument("randomized Shannon system: kernel is not stochastic");
  }
  require_base(kappa, carrier, "kappa");
  require_base(mu, carrier, "mu");
}

RandomizedShannonSystem randomized(const ShannonSystem& s) {
  const std::size_t n = s.size();
  auto kernel = from_function<RationalSemiring>(
      std::function<std::size_t(std::size_t)>(
          [&](std::size_t km) { return s.enc(km / n, km % n); }),
      product(s.carrier(), s.carrier()), s.carrier());
  return RandomizedShannonSystem(s.carrier(), std::move(kernel), s.kappa(), s.mu());
}

RationalMatrix encryption_matrix(const RandomizedShannonSystem& s) {
  const std::size_t n = s.carrier.size();
  return RationalMatrix::generate(s.carrier, s.carrier, [&](std::size_t m, std::size_t c) {
    Rational total = 0;
    for (std::size_t x : s.kappa.support()) {
      total += s.kappa.weight(x) * s.kernel.at(x * n + m, c);
    }
    return total;
  });
}

Distribution posterior(const RandomizedShannonSystem& s, std::size_t c) {
  return bayes(encryption_matrix(s), s.mu, c);
}

ShannonSecurity is_perfectly_secure_direct(const RandomizedShannonSystem& s) {
  return compare_posteriors(encryption_matrix(s), s.mu);
}

Diagram<RationalSemiring> build_sto_security_diagram(const RandomizedShannonSystem& s) {
  const std::size_t n = s.carrier.size();
  return sto_square(s.carrier, s.mu, [&](std::size_t c, std::size_t k, std::size_t m) {
    return s.kappa.weight(k) * s.mu.weight(m) * s.kernel.at(k * n + m, c);
  });
}

}  // namespace catcrypt
