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
#include "catcrypt/symbolic.hpp"

#include "catcrypt/error.hpp"

namespace catcrypt {
namespace {

void check_table(const OpTable& t, std::size_t n, const char* name) {
  if (t.size() != n) {
    throw InvalidArgument(std::string(name) + " table has " +
                          std::to_string(t.size()) + " rows, carrier has " +
                          std::to_string(n) + " elements");
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (t[k].size() != n) {
      throw InvalidArgument(std::string(name) + " table row " +
                            std::to_string(k) + " has " +
                            std::to_string(t[k].size()) + " entries, expected " +
                            std::to_string(n));
    }
    for (std::size_t v : t[k]) {
      if (v >= n) {
        throw InvalidArgument(std::string(name) + " table row " +
                              std::to_string(k) + " refers to element #" +
                              std::to_string(v) + " outside the carrier");
      }
    }
  }
}

}  // namespace

DolevYaoSystem::DolevYaoSystem(EncodedSet carrier, OpTable enc, OpTable dec,
                               std::vector<std::size_t> pair,
                               std::vector<bool> wellformed)
    : carrier_(std::move(carrier)),
      enc_(std::move(enc)),
      dec_(std::move(dec)),
      pair_(std::move(pair)),
      wellformed_(std::move(wellformed)) {
  const std::size_t n = carrier_.size();
  if (n == 0) throw InvalidArgument("Dolev-Yao system: empty carrier");
  check_table(enc_, n, "enc");
  check_table(dec_, n, "dec");
  if (pair_.size() != n) throw InvalidArgument("pair table has wrong length");
  for (std::size_t v : pair_) {
    if (v >= n) throw InvalidArgument("pair table leaves the carrier");
  }
  if (wellformed_.size() != n) {
    throw InvalidArgument("well-formed set has wrong length");
  }
}

DecryptionCheck check_decryption_condition(const DolevYaoSystem& s) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    for (std::size_t m = 0; m < s.size(); ++m) {
      if (s.dec(s.pair(k), s.enc(k, m)) != m) {
        return {false, KeyMessage{k, m}};
      }
    }
  }
  return {};
}

EncryptionEquationCheck check_encryption_equation(const DolevYaoSystem& s) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    for (std::size_t c = 0; c < s.size(); ++c) {
      if (s.enc(k, s.dec(s.pair(k), c)) != c) return {false, std::pair{k, c}};
    }
  }
  return {};
}

std::vector<std::size_t> tilde_D(const DolevYaoSystem& s, std::size_t c) {
  if (c >= s.size()) {
    throw InvalidArgument("tilde_D: ciphertext #" + std::to_string(c) +
                          " is outside the carrier");
  }
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < s.size(); ++m) {
    if (!s.wellformed(m)) continue;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s.enc(k, m) == c) {
        out.push_back(m);
        break;
      }
    }
  }
  return out;
}

std::vector<std::size_t> tilde_D(const DolevYaoSystem& s, const std::string& c) {
  return tilde_D(s, s.carrier().index_of(c));
}

AlgebraicSecurity is_algebraically_perfectly_secure(const DolevYaoSystem& s) {
  for (std::size_t c = 0; c < s.size(); ++c) {
    for (std::size_t m = 0; m < s.size(); ++m) {
      bool reachable = false;
      for (std::size_t k = 0; k < s.size() && !reachable; ++k) {
        reachable = s.enc(k, m) == c;
      }
      const bool lhs = s.wellformed(m) && reachable;
      if (lhs != s.wellformed(m)) return {false, CiphertextMessage{c, m}};
    }
  }
  return {};
}

LemmaCheck lemma_equivalence_check(const DolevYaoSystem& s) {
  LemmaCheck out;
  out.definition = is_algebraically_perfectly_secure(s).secure;

  // Forward image of M under every key, as a relation c ~D m.
  const std::size_t n = s.size();
  std::vector<bool> relation(n * n, false);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t m = 0; m < n; ++m) {
      if (s.wellformed(m)) relation[s.enc(k, m) * n + m] = true;
    }
  }
  for (std::size_t c = 0; c < n && out.relation; ++c) {
    for (std::size_t m = 0; m < n; ++m) {
      if (relation[c * n + m] != s.wellformed(m)) {
        out.relation = false;
        break;
      }
    }
  }
  return out;
}

Diagram<BooleanSemiring> build_rel_security_diagram(const DolevYaoSystem& s) {
  const EncodedSet& a = s.carrier();
  const EncodedSet aa = product(a, a);
  const EncodedSet one = EncodedSet::unit();
  const std::size_t n = a.size();

  Diagram<BooleanSemiring> d;
  d.add_object("A", a);
  d.add_object("AxA", aa);
  d.add_object("1", one);
  d.add_object("A'", a);

  // c E~M (k,m)  iff  m in M and E(k,m) = c.
  auto encrypt = BoolMatrix::generate(a, aa, [&](std::size_t c, std::size_t km) {
    const std::size_t k = km / n, m = km % n;
    return s.wellformed(m) && s.enc(k, m) == c;
  });
  // (j,k) (!xA) i  iff  i = k.
  auto forget_key = BoolMatrix::generate(aa, a, [&](std::size_t jk, std::size_t i) {
    return jk % n == i;
  });
  auto bang = BoolMatrix::generate(a, one, [](std::size_t, std::size_t) { return true; });
  auto wellformed = BoolMatrix::generate(one, a, [&](std::size_t, std::size_t m) {
    return static_cast<bool>(s.wellformed(m));
  });

  d.add_edge("A", "AxA", std::move(encrypt), "E~M");
  d.add_edge("AxA", "A'", std::move(forget_key), "!xA");
  d.add_edge("A", "1", std::move(bang), "!");
  d.add_edge("1", "A'", std::move(wellformed), "M");
  return d;
}

}  // namespace catcrypt
