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
#include "catcrypt/generators.hpp"

#include <algorithm>
#include <vector>

#include "catcrypt/corpus.hpp"

namespace catcrypt {
namespace {

// Decodes `code` as n*n base-n digits.
OpTable table_from_code(std::size_t code, std::size_t n) {
  OpTable t(n, std::vector<std::size_t>(n));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t m = 0; m < n; ++m) {
      t[k][m] = code % n;
      code /= n;
    }
  }
  return t;
}

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  while (exp--) out *= base;
  return out;
}

OpTable latin_square(Rng& rng, std::size_t n) {
  const auto rows = rng.permutation(n), cols = rng.permutation(n),
             symbols = rng.permutation(n);
  OpTable t(n, std::vector<std::size_t>(n));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t m = 0; m < n; ++m) t[k][m] = symbols[(rows[k] + cols[m]) % n];
  }
  return t;
}

OpTable random_table(Rng& rng, std::size_t n) {
  OpTable t(n, std::vector<std::size_t>(n));
  for (auto& row : t) {
    for (auto& v : row) v = rng.below(n);
  }
  return t;
}

}  // namespace

std::size_t for_each_dy_system(std::size_t n,
                               const std::function<void(const DolevYaoSystem&)>& fn) {
  const EncodedSet carrier = corpus::z_carrier(n);
  const std::size_t tables = power(n, n * n);
  const std::size_t pairs = power(n, n);
  const std::size_t subsets = std::size_t{1} << n;
  std::size_t visited = 0;
  for (std::size_t e = 0; e < tables; ++e) {
    const OpTable enc = table_from_code(e, n);
    for (std::size_t d = 0; d < tables; ++d) {
      const OpTable dec = table_from_code(d, n);
      for (std::size_t p = 0; p < pairs; ++p) {
        std::vector<std::size_t> pair(n);
        for (std::size_t i = 0, code = p; i < n; ++i, code /= n) pair[i] = code % n;
        for (std::size_t mask = 0; mask < subsets; ++mask) {
          std::vector<bool> wellformed(n);
          for (std::size_t i = 0; i < n; ++i) wellformed[i] = (mask >> i) & 1U;
          fn(DolevYaoSystem(carrier, enc, dec, pair, wellformed));
          ++visited;
        }
      }
    }
  }
  return visited;
}

DolevYaoSystem random_dy_system(Rng& rng, std::size_t n) {
  const OpTable enc = rng.below(3) == 0 ? latin_square(rng, n) : random_table(rng, n);
  std::vector<std::size_t> pair(n);
  for (auto& p : pair) p = rng.below(n);
  std::vector<bool> wellformed(n);
  for (std::size_t i = 0; i < n; ++i) wellformed[i] = rng.below(4) != 0;
  return DolevYaoSystem(corpus::z_carrier(n), enc, random_table(rng, n), std::move(pair),
                        std::move(wellformed));
}

ShannonSystem random_shannon_system(Rng& rng, std::size_t n) {
  const EncodedSet carrier = corpus::z_carrier(n);
  Distribution kappa = rng.coin() ? Distribution::uniform(carrier)
                                  : Distribution(carrier, rng.probability_vector(n));
  Distribution mu = rng.below(3) == 0 ? Distribution::uniform(carrier)
                                      : Distribution(carrier, rng.probability_vector(n));
  const auto plaintexts = mu.support();

  OpTable enc;
  if (rng.coin()) {
    enc = latin_square(rng, n);
  } else {
    enc = random_table(rng, n);
    for (std::size_t k = 0; k < n; ++k) {
      // Injective on supp(mu), arbitrary elsewhere.
      const auto images = rng.permutation(n);
      for (std::size_t i = 0; i < plaintexts.size(); ++i) enc[k][plaintexts[i]] = images[i];
    }
  }

  const auto pair = rng.permutation(n);
  OpTable dec = random_table(rng, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t m : plaintexts) dec[pair[k]][enc[k][m]] = m;
  }
  return ShannonSystem(carrier, std::move(enc), std::move(dec), pair, std::move(kappa),
                       std::move(mu));
}

}  // namespace catcrypt

namespace catcrypt {

RandomizedFn random_randomized_fn(Rng& rng, unsigned r, unsigned s, unsigned t) {
  const std::uint64_t outputs = std::uint64_t{1} << t;
  return RandomizedFn::tabulate(r, s, t,
                                [&](std::uint64_t, std::uint64_t) -> std::optional<std::uint64_t> {
                                  if (rng.below(8) == 0) return std::nullopt;
                                  return rng.below(outputs);
                                });
}

FeasibleEnsemble random_feasible_ensemble(Rng& rng, std::size_t levels, unsigned min_in) {
  std::vector<RandomizedFn> out;
  unsigned r = static_cast<unsigned>(rng.below(2));
  unsigned t = 1 + static_cast<unsigned>(rng.below(2));
  for (std::size_t l = 0; l < levels; ++l) {
    if (r < 2 && rng.coin()) ++r;
    if (t < 3 && rng.coin()) ++t;
    out.push_back(random_randomized_fn(rng, r, min_in + static_cast<unsigned>(l), t));
  }
  return FeasibleEnsemble(std::move(out));
}

AbstractCryptoSystem random_crypto_system(Rng& rng, std::size_t levels) {
  std::vector<LevelSorts> sorts;
  std::vector<RandomizedFn> enc, dec, pair, keygen;
  const unsigned r = static_cast<unsigned>(rng.below(2));
  const unsigned key_seed = 1 + static_cast<unsigned>(rng.below(2));
  auto pick = [&](unsigned bits) {
    const std::size_t universe = std::size_t{1} << bits;
    const std::size_t size = 2 + rng.below(std::min<std::size_t>(4, universe) - 1);
    std::vector<std::size_t> perm = rng.permutation(universe);
    perm.resize(size);
    std::sort(perm.begin(), perm.end());
    std::vector<std::string> labels, codes;
    for (std::size_t v : perm) {
      codes.push_back(BitString{v, bits}.to_string());
      labels.push_back(codes.back());
    }
    return EncodedSet(std::move(labels), std::move(codes));
  };
  auto value = [](const EncodedSet& s, std::size_t i) {
    return BitString::parse(s.code(i)).value;
  };
  for (std::size_t l = 1; l <= levels; ++l) {
    const auto bits = static_cast<unsigned>(l);
    LevelSorts s{pick(bits), pick(bits), pick(bits), EncodedSet::unit()};
    const std::size_t nK = s.keys.size(), nM = s.messages.size(), nC = s.ciphertexts.size();
    const bool latin = nK == nM && nM == nC && rng.below(3) == 0;
    RandomizedFn e(r, 2 * bits, bits);
    for (std::size_t k = 0; k < nK; ++k) {
      for (std::size_t m = 0; m < nM; ++m) {
        const std::uint64_t x = (value(s.keys, k) << bits) | value(s.messages, m);
        for (std::uint64_t rho = 0; rho < e.seed_count(); ++rho) {
          const std::size_t c = latin ? (k + m) % nC : rng.below(nC);
          e.set(rho, x, value(s.ciphertexts, c));
        }
      }
    }
    RandomizedFn d(0, 2 * bits, bits);
    for (std::size_t k = 0; k < nK; ++k) {
      for (std::size_t c = 0; c < nC; ++c) {
        d.set(0, (value(s.keys, k) << bits) | value(s.ciphertexts, c),
              value(s.messages, rng.below(nM)));
      }
    }
    RandomizedFn g(key_seed, bits, 2 * bits);
    for (std::uint64_t rho = 0; rho < g.seed_count(); ++rho) {
      const std::uint64_t k = value(s.keys, latin ? rho % nK : rng.below(nK));
      g.set(rho, (std::uint64_t{1} << bits) - 1, (k << bits) | k);
    }
    enc.push_back(std::move(e));
    dec.push_back(std::move(d));
    pair.push_back(RandomizedFn::identity(bits));
    keygen.push_back(std::move(g));
    sorts.push_back(std::move(s));
  }
  return AbstractCryptoSystem("random", std::move(sorts), FeasibleEnsemble(std::move(enc)),
                              FeasibleEnsemble(std::move(dec)), FeasibleEnsemble(std::move(pair)),
                              FeasibleEnsemble(std::move(keygen)));
}

}  // namespace catcrypt
